#include "reprogym/model/sdf.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

#include "reprogym/model/xml.hpp"

namespace reprogym::model {

const char* to_string(JointKind kind) noexcept {
  switch (kind) {
    case JointKind::Revolute: return "revolute";
    case JointKind::Prismatic: return "prismatic";
    case JointKind::Fixed: return "fixed";
  }
  return "?";
}

bool JointLimits::unbounded() const noexcept {
  return lower == -kUnbounded && upper == kUnbounded && effort == kUnbounded &&
         velocity == kUnbounded;
}

std::size_t RobotModel::dof() const noexcept {
  std::size_t n = 0;
  for (const auto& j : joints) n += j.kind != JointKind::Fixed;
  return n;
}

std::vector<const Joint*> RobotModel::moving_joints() const {
  std::vector<const Joint*> out;
  for (const auto& j : joints) {
    if (j.kind != JointKind::Fixed) out.push_back(&j);
  }
  return out;
}

const Link* RobotModel::find_link(const std::string& link_name) const noexcept {
  for (const auto& l : links) {
    if (l.name == link_name) return &l;
  }
  return nullptr;
}

const Joint* RobotModel::find_joint(const std::string& joint_name) const noexcept {
  for (const auto& j : joints) {
    if (j.name == joint_name) return &j;
  }
  return nullptr;
}

std::string Diagnostic::format(std::string_view file) const {
  std::ostringstream out;
  out << file << ':' << location.line << ':' << location.column << ": "
      << (severity == Severity::Error ? "error" : "warning") << ": " << message;
  return out.str();
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) noexcept {
  for (const auto& d : diagnostics) {
    if (d.severity == Severity::Error) return true;
  }
  return false;
}

namespace {

std::string_view trim(std::string_view s) noexcept {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> parts;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) parts.push_back(s.substr(start, i - start));
  }
  return parts;
}

std::optional<double> parse_real(std::string_view s) noexcept {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty() || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

// Walks the XML tree, collecting diagnostics. Each `read_*` returns
// std::nullopt after recording an error.
class SdfReader {
 public:
  ParseResult run(std::string_view text) {
    auto doc = xml::parse(text);
    if (auto* err = std::get_if<xml::SyntaxError>(&doc)) {
      error(DiagnosticKind::Syntax, err->location, "syntax error: " + err->message);
      return finish(std::nullopt);
    }
    const auto& root = std::get<xml::Element>(doc);

    const xml::Element* model_el = nullptr;
    if (root.name == "model") {
      model_el = &root;
    } else if (root.name == "sdf") {
      for (const auto& child : root.children) {
        if (child.name != "model") {
          unsupported(child);
          continue;
        }
        if (model_el != nullptr) {
          error(DiagnosticKind::Semantic, child.location, "more than one <model> element");
          continue;
        }
        model_el = &child;
      }
      if (model_el == nullptr) {
        error(DiagnosticKind::Semantic, root.location, "<sdf> contains no <model>");
        return finish(std::nullopt);
      }
    } else {
      error(DiagnosticKind::Semantic, root.location,
            "root element must be <sdf> or <model>, found <" + root.name + ">");
      return finish(std::nullopt);
    }
    return finish(read_model(*model_el));
  }

 private:
  void error(DiagnosticKind kind, SourceLocation at, std::string message) {
    diagnostics_.push_back({Severity::Error, kind, at, std::move(message)});
  }

  void unsupported(const xml::Element& el) {
    diagnostics_.push_back({Severity::Warning, DiagnosticKind::Unsupported, el.location,
                            "unsupported element <" + el.name + "> ignored"});
  }

  // Reports elements with children where plain text is expected.
  std::optional<double> read_number(const xml::Element& el, const std::string& what) {
    if (!el.children.empty()) {
      error(DiagnosticKind::Semantic, el.location, what + ": <" + el.name + "> must hold a number");
      return std::nullopt;
    }
    auto v = parse_real(el.text);
    if (!v) {
      error(DiagnosticKind::Semantic, el.location,
            what + ": '" + std::string(trim(el.text)) + "' is not a finite number");
    }
    return v;
  }

  std::optional<std::string> read_text(const xml::Element& el, const std::string& what) {
    if (!el.children.empty()) {
      error(DiagnosticKind::Semantic, el.location, what + ": <" + el.name + "> must hold text");
      return std::nullopt;
    }
    std::string s(trim(el.text));
    if (s.empty()) {
      error(DiagnosticKind::Semantic, el.location, what + ": <" + el.name + "> is empty");
      return std::nullopt;
    }
    return s;
  }

  // Returns false (after reporting) when `slot` was already seen.
  bool once(const xml::Element*& slot, const xml::Element& el, const std::string& what) {
    if (slot != nullptr) {
      error(DiagnosticKind::Semantic, el.location, what + ": duplicate <" + el.name + ">");
      return false;
    }
    slot = &el;
    return true;
  }

  std::optional<std::string> name_of(const xml::Element& el) {
    const auto* attr = el.attribute("name");
    if (attr == nullptr || trim(attr->value).empty()) {
      error(DiagnosticKind::Semantic, el.location, "<" + el.name + "> is missing its name attribute");
      return std::nullopt;
    }
    return std::string(attr->value);
  }

  std::optional<RobotModel> read_model(const xml::Element& el) {
    RobotModel model;
    bool ok = true;
    if (auto n = name_of(el)) model.name = *n;
    else ok = false;

    const xml::Element* static_el = nullptr;
    for (const auto& child : el.children) {
      if (child.name == "link") {
        if (auto link = read_link(child)) {
          locations_["link:" + link->name] = child.location;
          model.links.push_back(std::move(*link));
        } else {
          ok = false;
        }
      } else if (child.name == "joint") {
        if (auto joint = read_joint(child)) {
          locations_["joint:" + joint->name] = child.location;
          model.joints.push_back(std::move(*joint));
        } else {
          ok = false;
        }
      } else if (child.name == "static") {
        if (!once(static_el, child, "model '" + model.name + "'")) {
          ok = false;
          continue;
        }
        const auto value = read_text(child, "model '" + model.name + "' <static>");
        if (value == "true" || value == "1") model.fixed_base = true;
        else if (value == "false" || value == "0") model.fixed_base = false;
        else {
          if (value) {
            error(DiagnosticKind::Semantic, child.location,
                  "model '" + model.name + "': <static> must be true or false");
          }
          ok = false;
        }
      } else {
        unsupported(child);
      }
    }
    if (const auto* canonical = el.attribute("canonical_link")) {
      model.base_link = canonical->value;
    } else if (!model.links.empty()) {
      model.base_link = model.links.front().name;
    }
    model_location_ = el.location;
    if (!ok) return std::nullopt;
    return model;
  }

  std::optional<Link> read_link(const xml::Element& el) {
    Link link;
    auto n = name_of(el);
    if (!n) return std::nullopt;
    link.name = *n;
    const std::string who = "link '" + link.name + "'";

    const xml::Element* inertial = nullptr;
    for (const auto& child : el.children) {
      if (child.name == "inertial") {
        if (!once(inertial, child, who)) return std::nullopt;
      } else {
        unsupported(child);
      }
    }
    if (inertial == nullptr) {
      error(DiagnosticKind::Semantic, el.location, who + ": missing <inertial>/<mass>");
      return std::nullopt;
    }

    const xml::Element* mass = nullptr;
    const xml::Element* inertia = nullptr;
    const xml::Element* pose = nullptr;
    bool ok = true;
    for (const auto& child : inertial->children) {
      if (child.name == "mass") ok &= once(mass, child, who);
      else if (child.name == "inertia") ok &= once(inertia, child, who);
      else if (child.name == "pose") ok &= once(pose, child, who);
      else unsupported(child);
    }
    if (!ok) return std::nullopt;
    if (mass == nullptr) {
      error(DiagnosticKind::Semantic, inertial->location, who + ": missing <inertial>/<mass>");
      return std::nullopt;
    }
    if (inertia == nullptr) {
      error(DiagnosticKind::Semantic, inertial->location, who + ": missing <inertial>/<inertia>");
      return std::nullopt;
    }
    auto m = read_number(*mass, who + " mass");
    if (!m) return std::nullopt;
    link.mass = *m;

    const xml::Element* diag[3] = {nullptr, nullptr, nullptr};
    static constexpr const char* kDiag[3] = {"ixx", "iyy", "izz"};
    for (const auto& child : inertia->children) {
      bool known = false;
      for (int i = 0; i < 3; ++i) {
        if (child.name == kDiag[i]) {
          known = true;
          ok &= once(diag[i], child, who);
        }
      }
      if (known) continue;
      if (child.name == "ixy" || child.name == "ixz" || child.name == "iyz") {
        auto off = read_number(child, who + " " + child.name);
        if (!off) {
          ok = false;
        } else if (*off != 0.0) {
          error(DiagnosticKind::Semantic, child.location,
                who + ": off-diagonal inertia <" + child.name + "> must be 0");
          ok = false;
        }
        continue;
      }
      unsupported(child);
    }
    for (int i = 0; i < 3; ++i) {
      if (diag[i] == nullptr) {
        error(DiagnosticKind::Semantic, inertia->location,
              who + ": missing <inertia>/<" + kDiag[i] + ">");
        ok = false;
        continue;
      }
      auto v = read_number(*diag[i], who + " " + kDiag[i]);
      if (v) link.inertia_diag[i] = *v;
      else ok = false;
    }

    if (pose != nullptr) {
      const auto parts = split_ws(pose->text);
      std::array<double, 6> values{};
      bool numeric = parts.size() == 6 && pose->children.empty();
      for (std::size_t i = 0; numeric && i < 6; ++i) {
        auto v = parse_real(parts[i]);
        if (v) values[i] = *v;
        else numeric = false;
      }
      if (!numeric) {
        error(DiagnosticKind::Semantic, pose->location,
              who + ": <pose> must hold 6 finite numbers");
        ok = false;
      } else {
        link.com_offset = values[2];
        for (std::size_t i : {0u, 1u, 3u, 4u, 5u}) {
          if (values[i] != 0.0) {
            diagnostics_.push_back({Severity::Warning, DiagnosticKind::Unsupported,
                                    pose->location,
                                    who + ": only the z offset of <pose> is used; other components ignored"});
            break;
          }
        }
      }
    }
    if (!ok) return std::nullopt;
    return link;
  }

  std::optional<Joint> read_joint(const xml::Element& el) {
    Joint joint;
    auto n = name_of(el);
    if (!n) return std::nullopt;
    joint.name = *n;
    const std::string who = "joint '" + joint.name + "'";

    const auto* type = el.attribute("type");
    if (type == nullptr) {
      error(DiagnosticKind::Semantic, el.location, who + ": missing type attribute");
      return std::nullopt;
    }
    if (type->value == "revolute") joint.kind = JointKind::Revolute;
    else if (type->value == "prismatic") joint.kind = JointKind::Prismatic;
    else if (type->value == "fixed") joint.kind = JointKind::Fixed;
    else {
      error(DiagnosticKind::Semantic, type->location,
            who + ": unsupported joint type '" + type->value + "'");
      return std::nullopt;
    }

    const xml::Element* parent = nullptr;
    const xml::Element* child_el = nullptr;
    const xml::Element* axis = nullptr;
    bool ok = true;
    for (const auto& c : el.children) {
      if (c.name == "parent") ok &= once(parent, c, who);
      else if (c.name == "child") ok &= once(child_el, c, who);
      else if (c.name == "axis") ok &= once(axis, c, who);
      else unsupported(c);
    }
    if (!ok) return std::nullopt;
    if (parent == nullptr || child_el == nullptr) {
      error(DiagnosticKind::Semantic, el.location, who + ": needs both <parent> and <child>");
      return std::nullopt;
    }
    auto p = read_text(*parent, who + " parent");
    auto c = read_text(*child_el, who + " child");
    if (!p || !c) return std::nullopt;
    joint.parent = *p;
    joint.child = *c;

    if (joint.kind == JointKind::Fixed) {
      if (axis != nullptr) {
        error(DiagnosticKind::Semantic, axis->location, who + ": fixed joints carry no <axis>");
        return std::nullopt;
      }
      return joint;
    }

    joint.axis = Eigen::Vector3d::UnitZ();  // SDF default
    if (axis == nullptr) return joint;

    const xml::Element* xyz = nullptr;
    const xml::Element* limit = nullptr;
    for (const auto& a : axis->children) {
      if (a.name == "xyz") ok &= once(xyz, a, who);
      else if (a.name == "limit") ok &= once(limit, a, who);
      else unsupported(a);
    }
    if (!ok) return std::nullopt;
    if (xyz != nullptr) {
      const auto parts = split_ws(xyz->text);
      bool numeric = parts.size() == 3 && xyz->children.empty();
      for (std::size_t i = 0; numeric && i < 3; ++i) {
        auto v = parse_real(parts[i]);
        if (v) joint.axis[static_cast<Eigen::Index>(i)] = *v;
        else numeric = false;
      }
      if (!numeric) {
        error(DiagnosticKind::Semantic, xyz->location, who + ": <xyz> must hold 3 finite numbers");
        return std::nullopt;
      }
    }
    if (limit != nullptr) {
      const xml::Element* fields[4] = {nullptr, nullptr, nullptr, nullptr};
      static constexpr const char* kFields[4] = {"lower", "upper", "effort", "velocity"};
      double* targets[4] = {&joint.limits.lower, &joint.limits.upper, &joint.limits.effort,
                            &joint.limits.velocity};
      for (const auto& l : limit->children) {
        bool known = false;
        for (int i = 0; i < 4; ++i) {
          if (l.name == kFields[i]) {
            known = true;
            ok &= once(fields[i], l, who);
          }
        }
        if (!known) unsupported(l);
      }
      for (int i = 0; i < 4; ++i) {
        if (fields[i] == nullptr) continue;
        auto v = read_number(*fields[i], who + " limit " + kFields[i]);
        if (v) *targets[i] = *v;
        else ok = false;
      }
    }
    if (!ok) return std::nullopt;
    return joint;
  }

  ParseResult finish(std::optional<RobotModel> model) {
    if (model) {
      for (auto d : validate(*model)) {
        d.location = locate(d.message);
        diagnostics_.push_back(std::move(d));
      }
    }
    ParseResult result;
    result.diagnostics = std::move(diagnostics_);
    if (model && !has_errors(result.diagnostics)) result.model = std::move(model);
    return result;
  }

  // Validation messages start with "link 'x'" or "joint 'x'"; map them back
  // to the element that declared the entity.
  SourceLocation locate(const std::string& message) const {
    for (const char* kind : {"link", "joint"}) {
      const std::string prefix = std::string(kind) + " '";
      if (message.rfind(prefix, 0) != 0) continue;
      const auto end = message.find('\'', prefix.size());
      if (end == std::string::npos) break;
      const auto it = locations_.find(std::string(kind) + ":" +
                                      message.substr(prefix.size(), end - prefix.size()));
      if (it != locations_.end()) return it->second;
    }
    return model_location_;
  }

  std::vector<Diagnostic> diagnostics_;
  std::map<std::string, SourceLocation> locations_;
  SourceLocation model_location_;
};

void append_real(std::string& out, double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, ec == std::errc{} ? ptr : buf);
}

void element(std::string& out, int indent, const char* tag, double v) {
  out.append(static_cast<std::size_t>(indent), ' ');
  out += '<';
  out += tag;
  out += '>';
  append_real(out, v);
  out += "</";
  out += tag;
  out += ">\n";
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

ParseResult parse_sdf(std::string_view text) { return SdfReader{}.run(text); }

std::string serialize_sdf(const RobotModel& model) {
  std::string out = "<?xml version=\"1.0\"?>\n<sdf version=\"1.7\">\n";
  out += "  <model name=\"" + escape(model.name) + "\" canonical_link=\"" +
         escape(model.base_link) + "\">\n";
  out += std::string("    <static>") + (model.fixed_base ? "true" : "false") + "</static>\n";
  for (const auto& link : model.links) {
    const Link* l = &link;
    out += "    <link name=\"" + escape(l->name) + "\">\n      <inertial>\n";
    if (l->com_offset != 0.0) {
      out += "        <pose>0 0 ";
      append_real(out, l->com_offset);
      out += " 0 0 0</pose>\n";
    }
    element(out, 8, "mass", l->mass);
    out += "        <inertia>\n";
    element(out, 10, "ixx", l->inertia_diag.x());
    element(out, 10, "iyy", l->inertia_diag.y());
    element(out, 10, "izz", l->inertia_diag.z());
    out += "        </inertia>\n      </inertial>\n    </link>\n";
  }
  for (const auto& j : model.joints) {
    out += "    <joint name=\"" + escape(j.name) + "\" type=\"" + to_string(j.kind) + "\">\n";
    out += "      <parent>" + escape(j.parent) + "</parent>\n";
    out += "      <child>" + escape(j.child) + "</child>\n";
    if (j.kind != JointKind::Fixed) {
      out += "      <axis>\n        <xyz>";
      append_real(out, j.axis.x());
      out += ' ';
      append_real(out, j.axis.y());
      out += ' ';
      append_real(out, j.axis.z());
      out += "</xyz>\n";
      if (!j.limits.unbounded()) {
        out += "        <limit>\n";
        if (j.limits.lower != -kUnbounded) element(out, 10, "lower", j.limits.lower);
        if (j.limits.upper != kUnbounded) element(out, 10, "upper", j.limits.upper);
        if (j.limits.effort != kUnbounded) element(out, 10, "effort", j.limits.effort);
        if (j.limits.velocity != kUnbounded) element(out, 10, "velocity", j.limits.velocity);
        out += "        </limit>\n";
      }
      out += "      </axis>\n";
    }
    out += "    </joint>\n";
  }
  out += "  </model>\n</sdf>\n";
  return out;
}

}  // namespace reprogym::model
