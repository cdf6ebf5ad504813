#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "reprogym/model/diagnostic.hpp"

namespace reprogym::model::xml {

struct Attribute {
  std::string name;
  std::string value;
  SourceLocation location;
};

struct Element {
  std::string name;
  std::vector<Attribute> attributes;
  std::vector<Element> children;
  /// Concatenated character data directly inside this element.
  std::string text;
  SourceLocation location;

  const Attribute* attribute(std::string_view attr) const noexcept;
};

struct SyntaxError {
  SourceLocation location;
  std::string message;
};

/// Maximum element nesting accepted before reporting an error.
inline constexpr std::size_t kMaxDepth = 256;

/// Parses a single-rooted XML document. Supports the XML declaration and
/// processing instructions, comments, DOCTYPE (skipped), CDATA, and the
/// predefined and numeric character entities. Never throws on bad input.
std::variant<Element, SyntaxError> parse(std::string_view text);

}  // namespace reprogym::model::xml
