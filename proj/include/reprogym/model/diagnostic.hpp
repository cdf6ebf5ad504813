#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace reprogym::model {

struct SourceLocation {
  std::size_t line = 0;    // 1-based; 0 when unknown
  std::size_t column = 0;  // 1-based

  friend bool operator==(const SourceLocation&, const SourceLocation&) = default;
};

enum class Severity { Warning, Error };

enum class DiagnosticKind {
  Syntax,       // not well-formed XML
  Semantic,     // well-formed but not a valid model description
  Topology,     // joint graph is not a tree rooted at the base link
  Invariant,    // a typed field violates its invariant
  Unsupported,  // element outside the subset, ignored
};

struct Diagnostic {
  Severity severity = Severity::Error;
  DiagnosticKind kind = DiagnosticKind::Semantic;
  SourceLocation location;
  std::string message;

  /// `file:line:col: severity: message`.
  std::string format(std::string_view file) const;
};

bool has_errors(const std::vector<Diagnostic>& diagnostics) noexcept;

}  // namespace reprogym::model
