#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace unruhent::verify {

struct CheckResult {
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

/// Runs every closed-form-vs-numeric oracle across the modules. Each check
/// carries its own tolerance; `tolerance_override`, when set, replaces all of
/// them.
std::vector<CheckResult> run_all(std::optional<double> tolerance_override = std::nullopt);

/// Prints one line per check with its max error and returns 0 when all pass,
/// 2 otherwise.
int run_and_report(std::ostream& out, std::optional<double> tolerance_override = std::nullopt);

}  // namespace unruhent::verify
