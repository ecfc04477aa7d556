#pragma once

#include <functional>
#include <string>
#include <vector>

namespace mdf {

/// One compared quantity inside a check.
struct Measurement {
  enum class Compare { kLess, kLessEqual, kGreater, kInfo };
  std::string name;
  std::string inputs;
  double computed = 0.0;
  double residual = 0.0;
  double tolerance = 0.0;
  Compare compare = Compare::kLess;

  /// Informational measurements always pass.
  bool pass() const;
};

struct CheckResult {
  std::string id;
  std::string suite;
  std::string title;
  std::vector<Measurement> measurements;
  std::string error;  // set when the check threw
  double wall_ms = 0.0;

  bool pass() const;
  /// The failing measurement, or the one closest to its tolerance.
  const Measurement* worst() const;
};

/// Fault injection used to confirm that the suite notices broken coefficients.
struct CheckOptions {
  bool flip_jacobi_sign = false;
};

struct CheckInfo {
  std::string id;
  std::string suite;
  std::string title;
  std::function<void(const CheckOptions&, std::vector<Measurement>&)> body;
};

/// The acceptance checks in id order, one per criterion.
const std::vector<CheckInfo>& acceptance_checks();

/// Valid selectors: "all" and every suite name.
const std::vector<std::string>& suite_selectors();
bool is_suite_selector(const std::string& s);

CheckResult run_check(const CheckInfo& info, const CheckOptions& opt = {});
/// Runs the selected checks sequentially in id order.
std::vector<CheckResult> run_suite(const std::string& selector, const CheckOptions& opt = {},
                                   const std::function<void(const CheckResult&)>& on_done = {});

}  // namespace mdf
