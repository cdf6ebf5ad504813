#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "reprogym/model/sdf.hpp"

namespace reprogym::model {
namespace {

std::string num(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

class Validator {
 public:
  explicit Validator(const RobotModel& m) : m_(m) {}

  std::vector<Diagnostic> run() {
    if (m_.name.empty()) report(DiagnosticKind::Invariant, "model: name must not be empty");
    if (m_.links.empty()) report(DiagnosticKind::Invariant, "model '" + m_.name + "': needs at least one link");
    links();
    joints();
    topology();
    return std::move(out_);
  }

 private:
  void report(DiagnosticKind kind, std::string message) {
    out_.push_back({Severity::Error, kind, {}, std::move(message)});
  }

  void links() {
    std::set<std::string> seen;
    for (const auto& l : m_.links) {
      const std::string who = "link '" + l.name + "'";
      if (l.name.empty()) report(DiagnosticKind::Invariant, "link '': name must not be empty");
      if (!seen.insert(l.name).second) {
        report(DiagnosticKind::Invariant, who + ": duplicate link name");
      }
      if (!(l.mass > 0.0) || !std::isfinite(l.mass)) {
        report(DiagnosticKind::Invariant, who + ": violates mass > 0 (mass = " + num(l.mass) + ")");
      }
      for (int i = 0; i < 3; ++i) {
        const double v = l.inertia_diag[i];
        if (!(v > 0.0) || !std::isfinite(v)) {
          static constexpr const char* kName[3] = {"ixx", "iyy", "izz"};
          report(DiagnosticKind::Invariant,
                 who + ": violates inertia " + kName[i] + " > 0 (" + num(v) + ")");
        }
      }
      if (!std::isfinite(l.com_offset)) {
        report(DiagnosticKind::Invariant, who + ": com_offset must be finite");
      }
    }
  }

  void joints() {
    std::set<std::string> seen;
    for (const auto& j : m_.joints) {
      const std::string who = "joint '" + j.name + "'";
      if (j.name.empty()) report(DiagnosticKind::Invariant, "joint '': name must not be empty");
      if (!seen.insert(j.name).second) {
        report(DiagnosticKind::Invariant, who + ": duplicate joint name");
      }
      for (const auto* ref : {&j.parent, &j.child}) {
        if (m_.find_link(*ref) == nullptr) {
          report(DiagnosticKind::Topology, who + ": unresolved link reference '" + *ref + "'");
        }
      }
      if (j.parent == j.child) {
        report(DiagnosticKind::Topology, who + ": parent and child are the same link '" + j.parent + "'");
      }
      if (j.kind == JointKind::Fixed) {
        if (!j.axis.isZero(0.0) || !j.limits.unbounded()) {
          report(DiagnosticKind::Invariant, who + ": fixed joints carry no axis or limits");
        }
        continue;
      }
      const double norm = j.axis.norm();
      if (!std::isfinite(norm) || std::abs(norm - 1.0) > 1e-9) {
        report(DiagnosticKind::Invariant, who + ": axis must have unit norm (norm = " + num(norm) + ")");
      }
      const auto& lim = j.limits;
      if (std::isnan(lim.lower) || std::isnan(lim.upper) || !(lim.lower <= lim.upper) ||
          lim.lower == kUnbounded || lim.upper == -kUnbounded) {
        report(DiagnosticKind::Invariant, who + ": violates lower <= upper (" + num(lim.lower) +
                                              " > " + num(lim.upper) + ")");
      }
      if (!(lim.effort > 0.0)) {
        report(DiagnosticKind::Invariant, who + ": violates effort limit > 0 (" + num(lim.effort) + ")");
      }
      if (!(lim.velocity > 0.0)) {
        report(DiagnosticKind::Invariant,
               who + ": violates velocity limit > 0 (" + num(lim.velocity) + ")");
      }
    }
  }

  void topology() {
    if (m_.links.empty()) return;
    if (m_.find_link(m_.base_link) == nullptr) {
      report(DiagnosticKind::Topology, "model '" + m_.name + "': unresolved link reference '" +
                                           m_.base_link + "' for the base link");
      return;
    }
    std::map<std::string, std::vector<std::string>> children;
    std::map<std::string, int> parents;
    std::map<std::string, std::string> parent_of;
    for (const auto& j : m_.joints) {
      if (m_.find_link(j.parent) == nullptr || m_.find_link(j.child) == nullptr) continue;
      if (j.parent == j.child) continue;
      children[j.parent].push_back(j.child);
      ++parents[j.child];
      parent_of.emplace(j.child, j.parent);
    }
    if (parents.count(m_.base_link) != 0) {
      report(DiagnosticKind::Topology,
             "link '" + m_.base_link + "': base link must not be the child of a joint");
    }
    for (const auto& [link, count] : parents) {
      if (count > 1) {
        report(DiagnosticKind::Topology, "link '" + link + "': has " + std::to_string(count) +
                                             " parent joints; the joint graph must be a tree");
      }
    }
    // Reachability from the base; a link reached twice closes a cycle.
    std::set<std::string> visited;
    std::vector<std::string> stack{m_.base_link};
    bool cyclic = false;
    while (!stack.empty()) {
      auto link = std::move(stack.back());
      stack.pop_back();
      if (!visited.insert(link).second) {
        cyclic = true;
        continue;
      }
      for (const auto& c : children[link]) stack.push_back(c);
    }
    // Cycles detached from the base are found by walking parent links.
    for (const auto& l : m_.links) {
      if (cyclic) break;
      std::string at = l.name;
      for (std::size_t steps = 0; steps <= m_.links.size(); ++steps) {
        const auto it = parent_of.find(at);
        if (it == parent_of.end()) break;
        at = it->second;
        if (at == l.name) {
          cyclic = true;
          break;
        }
      }
    }
    if (cyclic) {
      report(DiagnosticKind::Topology, "model '" + m_.name + "': cyclic joint topology");
    }
    for (const auto& l : m_.links) {
      if (visited.count(l.name) == 0) {
        report(DiagnosticKind::Topology,
               "link '" + l.name + "': not connected to base link '" + m_.base_link + "'");
      }
    }
  }

  const RobotModel& m_;
  std::vector<Diagnostic> out_;
};

}  // namespace

std::vector<Diagnostic> validate(const RobotModel& model) { return Validator(model).run(); }

}  // namespace reprogym::model
