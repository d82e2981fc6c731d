#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace loopcalc {

/// One validation failure. `where` is a stable key naming the offending
/// piece of the model ("dim", "euler", "c0", "generator:a", "relation:2",
/// "delta:a", "bracket:a,b") so front ends can map it back to a source line.
struct ModelIssue {
  std::string where;
  std::string message;
};

class ModelError : public std::runtime_error {
 public:
  explicit ModelError(std::vector<ModelIssue> issues)
      : std::runtime_error(join(issues)), issues_(std::move(issues)) {}
  ModelError(std::string where, std::string message)
      : ModelError(std::vector<ModelIssue>{{std::move(where), std::move(message)}}) {}

  const std::vector<ModelIssue>& issues() const noexcept { return issues_; }

 private:
  static std::string join(const std::vector<ModelIssue>& issues) {
    std::string out;
    for (const auto& issue : issues) {
      if (!out.empty()) out += "; ";
      out += issue.where + ": " + issue.message;
    }
    return out;
  }

  std::vector<ModelIssue> issues_;
};

/// Raised when an operation needs optional model data (delta or bracket
/// tables) that the model does not carry.
class MissingDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Delta or bracket data that violates a BV law (Δ² ≠ 0, Δ(c0) ≠ 0, ...).
class InconsistentModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace loopcalc
