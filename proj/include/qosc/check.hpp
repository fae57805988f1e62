#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qosc {

// Named residual tolerances for the self-check suite. Unknown names are
// rejected so typos in overrides fail loudly.
class Tolerances {
 public:
  Tolerances();  // library defaults
  void set(const std::string& name, double value);
  double get(const std::string& name) const;
  const std::map<std::string, double>& items() const { return values_; }

 private:
  std::map<std::string, double> values_;
};

struct CheckResult {
  std::string group;      // invariant group id
  std::string detail;     // what was measured
  double residual = 0.0;  // worst achieved residual
  double tolerance = 0.0;
  bool passed = false;
};

// Names of the invariant groups, in execution order.
const std::vector<std::string>& check_groups();

// Runs the invariant suite (or a single group when `group` is set) and
// reports the worst residual per measurement. Unknown group names throw
// std::invalid_argument.
std::vector<CheckResult> run_checks(
    const Tolerances& tol,
    const std::optional<std::string>& group = std::nullopt);

}  // namespace qosc
