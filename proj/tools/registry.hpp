#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mdf/types.hpp"

namespace mdf::cli {

/// Bad command-line input; maps to the usage exit code.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Named string parameters as given on the command line.
class Params {
 public:
  void set(const std::string& name, const std::string& value) { values_[name] = value; }
  bool has(const std::string& name) const { return values_.count(name) > 0; }

  double real(const std::string& name) const;
  double real(const std::string& name, double fallback) const;
  cplx complex(const std::string& name) const;
  cplx complex(const std::string& name, cplx fallback) const;
  int integer(const std::string& name, std::optional<int> fallback = std::nullopt) const;
  std::string text(const std::string& name, const std::string& fallback) const;

 private:
  const std::string& raw(const std::string& name) const;
  std::map<std::string, std::string> values_;
};

/// "a+bi", "a-bi", "bi", "i", "a"; the decimal point is always '.'.
cplx parse_complex(const std::string& s);
double parse_real(const std::string& s);

/// Shortest round-trip decimal form, independent of the locale.
std::string format_double(double x);

struct Evaluation {
  cplx value{};
  double err_bound = 0.0;
  long long radius = 0;
  long long terms = 0;
};

struct FunctionEntry {
  std::string id;
  std::string summary;
  std::vector<std::string> params;  // accepted parameter names
  std::function<Evaluation(const Params&, double tol)> eval;
};

/// Every evaluable function, sorted by id.
const std::vector<FunctionEntry>& function_registry();
const FunctionEntry* find_function(const std::string& id);

/// Parameter names the command line accepts.
const std::vector<std::string>& parameter_names();

}  // namespace mdf::cli
