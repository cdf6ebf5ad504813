#include "reprogym/model/xml.hpp"

#include <cstdint>
#include <optional>

namespace reprogym::model::xml {

const Attribute* Element::attribute(std::string_view attr) const noexcept {
  for (const auto& a : attributes) {
    if (a.name == attr) return &a;
  }
  return nullptr;
}

namespace {

bool is_space(char c) noexcept { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

bool is_name_start(char c) noexcept {
  const auto u = static_cast<unsigned char>(c);
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_' || c == ':' || u >= 0x80;
}

bool is_name_char(char c) noexcept {
  return is_name_start(c) || (c >= '0' && c <= '9') || c == '-' || c == '.';
}

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::variant<Element, SyntaxError> document() {
    skip_misc();
    if (error_) return *error_;
    if (eof()) return fail("document has no root element");
    if (peek() != '<') return fail("expected '<' at start of root element");
    Element root;
    if (!element(root, 1)) return *error_;
    skip_misc();
    if (error_) return *error_;
    if (!eof()) return fail("content after the root element");
    return root;
  }

 private:
  bool eof() const noexcept { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const noexcept {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  bool starts_with(std::string_view s) const noexcept {
    return text_.substr(pos_, s.size()) == s;
  }
  SourceLocation here() const noexcept { return {line_, column_}; }

  void advance(std::size_t n = 1) noexcept {
    for (std::size_t i = 0; i < n && pos_ < text_.size(); ++i) {
      if (text_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
      ++pos_;
    }
  }

  SyntaxError fail(std::string message) {
    if (!error_) error_ = SyntaxError{here(), std::move(message)};
    return *error_;
  }

  void skip_space() noexcept {
    while (!eof() && is_space(peek())) advance();
  }

  // Skips to just past `terminator`. Fails when it never occurs.
  bool skip_past(std::string_view terminator, const char* what) {
    const auto found = text_.find(terminator, pos_);
    if (found == std::string_view::npos) {
      fail(std::string("unterminated ") + what);
      return false;
    }
    advance(found + terminator.size() - pos_);
    return true;
  }

  // Whitespace, comments, processing instructions and DOCTYPE outside the root.
  void skip_misc() {
    while (!error_) {
      skip_space();
      if (starts_with("<?")) {
        if (!skip_past("?>", "processing instruction")) return;
      } else if (starts_with("<!--")) {
        if (!skip_past("-->", "comment")) return;
      } else if (starts_with("<!DOCTYPE")) {
        if (!skip_past(">", "DOCTYPE")) return;
      } else {
        return;
      }
    }
  }

  std::optional<std::string> name() {
    if (eof() || !is_name_start(peek())) {
      fail("expected a name");
      return std::nullopt;
    }
    const std::size_t start = pos_;
    while (!eof() && is_name_char(peek())) advance();
    return std::string(text_.substr(start, pos_ - start));
  }

  // At '&'. Appends the decoded character.
  bool entity(std::string& out) {
    const SourceLocation at = here();
    const auto semi = text_.find(';', pos_);
    if (semi == std::string_view::npos || semi - pos_ > 12) {
      error_ = SyntaxError{at, "malformed entity reference"};
      return false;
    }
    const std::string_view ref = text_.substr(pos_ + 1, semi - pos_ - 1);
    if (ref == "lt") out += '<';
    else if (ref == "gt") out += '>';
    else if (ref == "amp") out += '&';
    else if (ref == "quot") out += '"';
    else if (ref == "apos") out += '\'';
    else if (ref.size() >= 2 && ref[0] == '#') {
      const bool hex = ref[1] == 'x';
      const std::string_view digits = ref.substr(hex ? 2 : 1);
      if (digits.empty()) {
        error_ = SyntaxError{at, "empty character reference"};
        return false;
      }
      std::uint32_t cp = 0;
      for (char c : digits) {
        std::uint32_t d;
        if (c >= '0' && c <= '9') d = static_cast<std::uint32_t>(c - '0');
        else if (hex && c >= 'a' && c <= 'f') d = static_cast<std::uint32_t>(c - 'a' + 10);
        else if (hex && c >= 'A' && c <= 'F') d = static_cast<std::uint32_t>(c - 'A' + 10);
        else {
          error_ = SyntaxError{at, "bad digit in character reference"};
          return false;
        }
        cp = cp * (hex ? 16 : 10) + d;
        if (cp > 0x10FFFF) {
          error_ = SyntaxError{at, "character reference out of range"};
          return false;
        }
      }
      if (cp == 0 || (cp >= 0xD800 && cp <= 0xDFFF)) {
        error_ = SyntaxError{at, "invalid character reference"};
        return false;
      }
      append_utf8(out, cp);
    } else {
      error_ = SyntaxError{at, "unknown entity '&" + std::string(ref) + ";'"};
      return false;
    }
    advance(semi + 1 - pos_);
    return true;
  }

  bool attribute_value(std::string& out) {
    const char quote = peek();
    if (quote != '"' && quote != '\'') {
      fail("attribute value must be quoted");
      return false;
    }
    advance();
    while (true) {
      if (eof()) {
        fail("unterminated attribute value");
        return false;
      }
      const char c = peek();
      if (c == quote) {
        advance();
        return true;
      }
      if (c == '<') {
        fail("'<' in attribute value");
        return false;
      }
      if (c == '&') {
        if (!entity(out)) return false;
        continue;
      }
      out += c;
      advance();
    }
  }

  // At '<' of a start tag.
  bool element(Element& el, std::size_t depth) {
    if (depth > kMaxDepth) {
      fail("elements nested deeper than " + std::to_string(kMaxDepth));
      return false;
    }
    el.location = here();
    advance();  // '<'
    auto tag = name();
    if (!tag) return false;
    el.name = std::move(*tag);

    while (true) {
      const bool had_space = !eof() && is_space(peek());
      skip_space();
      if (eof()) {
        fail("unterminated start tag <" + el.name + ">");
        return false;
      }
      if (starts_with("/>")) {
        advance(2);
        return true;
      }
      if (peek() == '>') {
        advance();
        break;
      }
      if (!had_space) {
        fail("expected whitespace before attribute");
        return false;
      }
      Attribute attr;
      attr.location = here();
      auto attr_name = name();
      if (!attr_name) return false;
      attr.name = std::move(*attr_name);
      if (el.attribute(attr.name) != nullptr) {
        error_ = SyntaxError{attr.location, "duplicate attribute '" + attr.name + "'"};
        return false;
      }
      skip_space();
      if (peek() != '=') {
        fail("expected '=' after attribute name");
        return false;
      }
      advance();
      skip_space();
      if (!attribute_value(attr.value)) return false;
      el.attributes.push_back(std::move(attr));
    }

    // Content.
    while (true) {
      if (eof()) {
        error_ = SyntaxError{el.location, "element <" + el.name + "> is never closed"};
        return false;
      }
      if (starts_with("</")) {
        const SourceLocation close_at = here();
        advance(2);
        auto closing = name();
        if (!closing) return false;
        if (*closing != el.name) {
          error_ = SyntaxError{close_at, "mismatched closing tag </" + *closing +
                                             ">, expected </" + el.name + ">"};
          return false;
        }
        skip_space();
        if (peek() != '>') {
          fail("expected '>' to end closing tag");
          return false;
        }
        advance();
        return true;
      }
      if (starts_with("<!--")) {
        if (!skip_past("-->", "comment")) return false;
        continue;
      }
      if (starts_with("<![CDATA[")) {
        advance(9);
        const auto end = text_.find("]]>", pos_);
        if (end == std::string_view::npos) {
          fail("unterminated CDATA section");
          return false;
        }
        el.text.append(text_.substr(pos_, end - pos_));
        advance(end + 3 - pos_);
        continue;
      }
      if (starts_with("<?")) {
        if (!skip_past("?>", "processing instruction")) return false;
        continue;
      }
      if (peek() == '<') {
        Element child;
        if (!element(child, depth + 1)) return false;
        el.children.push_back(std::move(child));
        continue;
      }
      if (peek() == '&') {
        if (!entity(el.text)) return false;
        continue;
      }
      el.text += peek();
      advance();
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  std::optional<SyntaxError> error_;
};

}  // namespace

std::variant<Element, SyntaxError> parse(std::string_view text) {
  return Reader(text).document();
}

}  // namespace reprogym::model::xml
