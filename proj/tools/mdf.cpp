// mdf: evaluate lattice sums, run the verification suites, and sweep parameters to CSV.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "mdf/checks.hpp"
#include "mdf/error.hpp"
#include "mdf/lattice.hpp"
#include "registry.hpp"

namespace {

using mdf::cli::Evaluation;
using mdf::cli::FunctionEntry;
using mdf::cli::Params;
using mdf::cli::UsageError;
using nlohmann::ordered_json;

enum ExitCode { kPass = 0, kVerifyFailed = 1, kUsage = 2, kDomain = 3, kIo = 4 };

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One string slot per function parameter, shared by eval and sweep.
struct ParamOptions {
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;

  void attach(CLI::App* app) {
    for (const std::string& name : mdf::cli::parameter_names()) {
      options[name] = app->add_option("--" + name, values[name], "function parameter " + name)->group("Parameters");
    }
  }

  // Collects the parameters given on the command line, rejecting those the function does not take.
  Params collect(const FunctionEntry& fn, const std::string& skip = {}) const {
    Params p;
    for (const auto& [name, opt] : options) {
      if (opt->count() == 0) continue;
      if (std::find(fn.params.begin(), fn.params.end(), name) == fn.params.end() || name == skip) {
        throw UsageError(fn.id + " does not take --" + name);
      }
      p.set(name, values.at(name));
    }
    return p;
  }
};

const FunctionEntry& lookup(const std::string& id) {
  if (const FunctionEntry* fn = mdf::cli::find_function(id)) return *fn;
  throw UsageError("unknown function id '" + id + "' (see `mdf list`)");
}

struct Timed {
  Evaluation eval;
  double wall_ms = 0.0;
};

Timed evaluate(const FunctionEntry& fn, const Params& p, double tol) {
  const auto t0 = std::chrono::steady_clock::now();
  Timed t{fn.eval(p, tol), 0.0};
  t.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return t;
}

void write_file(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  out.close();
  if (!out) throw IoError("cannot write " + path);
}

int run_eval(const std::string& id, const ParamOptions& po, double tol, const std::string& format) {
  const FunctionEntry& fn = lookup(id);
  const Timed t = evaluate(fn, po.collect(fn), tol);
  using mdf::cli::format_double;
  if (format == "csv") {
    std::cout << "value_re,value_im,err_bound,radius,terms,wall_ms\n"
              << format_double(t.eval.value.real()) << ',' << format_double(t.eval.value.imag()) << ','
              << format_double(t.eval.err_bound) << ',' << t.eval.radius << ',' << t.eval.terms << ','
              << format_double(t.wall_ms) << '\n';
  } else {
    ordered_json j;
    j["value_re"] = t.eval.value.real();
    j["value_im"] = t.eval.value.imag();
    j["err_bound"] = t.eval.err_bound;
    j["radius"] = t.eval.radius;
    j["terms"] = t.eval.terms;
    j["wall_ms"] = t.wall_ms;
    std::cout << j.dump(2) << '\n';
  }
  return kPass;
}

struct SweepArgs {
  std::string id;
  std::string param;
  double from = 0.0;
  double to = 0.0;
  int steps = 0;
  bool geometric = false;
  std::string out = "-";
};

int run_sweep(const SweepArgs& a, const ParamOptions& po, double tol) {
  const FunctionEntry& fn = lookup(a.id);
  if (std::find(fn.params.begin(), fn.params.end(), a.param) == fn.params.end()) {
    throw UsageError(fn.id + " has no parameter '" + a.param + "'");
  }
  if (a.steps < 0) throw UsageError("--steps must be non-negative");
  if (!std::isfinite(a.from) || !std::isfinite(a.to)) throw UsageError("sweep range must be finite");
  if (a.geometric && a.steps > 0 && !(a.from > 0.0 && a.to > 0.0)) {
    throw UsageError("a geometric sweep needs a positive range");
  }
  Params p = po.collect(fn, a.param);

  using mdf::cli::format_double;
  std::ostringstream csv;
  csv << a.param << ",value_re,value_im,err_bound\n";
  for (int k = 0; k < a.steps; ++k) {
    const double frac = a.steps == 1 ? 0.0 : static_cast<double>(k) / (a.steps - 1);
    const double x = a.geometric ? a.from * std::pow(a.to / a.from, frac) : a.from + (a.to - a.from) * frac;
    p.set(a.param, format_double(x));
    const Evaluation e = fn.eval(p, tol);
    csv << format_double(x) << ',' << format_double(e.value.real()) << ',' << format_double(e.value.imag()) << ','
        << format_double(e.err_bound) << '\n';
  }
  write_file(a.out, csv.str());
  return kPass;
}

const char* compare_name(mdf::Measurement::Compare c) {
  switch (c) {
    case mdf::Measurement::Compare::kLess: return "<";
    case mdf::Measurement::Compare::kLessEqual: return "<=";
    case mdf::Measurement::Compare::kGreater: return ">";
    case mdf::Measurement::Compare::kInfo: return "info";
  }
  return "?";
}

ordered_json check_record(const mdf::CheckResult& r) {
  ordered_json j;
  j["id"] = r.id;
  j["suite"] = r.suite;
  j["title"] = r.title;
  j["pass"] = r.pass();
  j["wall_ms"] = r.wall_ms;
  if (!r.error.empty()) j["error"] = r.error;
  ordered_json ms = ordered_json::array();
  for (const mdf::Measurement& m : r.measurements) {
    ms.push_back({{"name", m.name},
                  {"inputs", m.inputs},
                  {"computed", m.computed},
                  {"residual", m.residual},
                  {"tolerance", m.tolerance},
                  {"compare", compare_name(m.compare)},
                  {"pass", m.pass()}});
  }
  j["measurements"] = std::move(ms);
  return j;
}

int run_verify(const std::string& suite, const std::string& report, const std::string& fault) {
  if (!mdf::is_suite_selector(suite)) throw UsageError("unknown suite '" + suite + "'");
  mdf::CheckOptions opt;
  if (fault == "jacobi-sign") {
    opt.flip_jacobi_sign = true;
  } else if (!fault.empty()) {
    throw UsageError("unknown fault '" + fault + "' (expected jacobi-sign)");
  }

  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<mdf::CheckResult> results = mdf::run_suite(suite, opt, [](const mdf::CheckResult& r) {
    std::printf("%s %-32s", r.pass() ? "PASS" : "FAIL", r.id.c_str());
    if (!r.error.empty()) {
      std::printf(" error: %s\n", r.error.c_str());
    } else if (const mdf::Measurement* w = r.worst()) {
      std::printf(" %s = %.3e %s %.1e (%.0f ms)\n", w->name.c_str(), w->residual, compare_name(w->compare),
                  w->tolerance, r.wall_ms);
    } else {
      std::printf("\n");
    }
    std::fflush(stdout);
  });
  const double wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  ordered_json checks = ordered_json::array();
  ordered_json failed = ordered_json::array();
  for (const mdf::CheckResult& r : results) {
    checks.push_back(check_record(r));
    if (!r.pass()) failed.push_back(r.id);
  }
  const std::size_t n_failed = failed.size();
  std::printf("%zu of %zu checks failed\n", n_failed, results.size());

  if (!report.empty()) {
    ordered_json j;
    j["suite"] = suite;
    j["fault"] = fault.empty() ? ordered_json(nullptr) : ordered_json(fault);
    j["threads"] = mdf::thread_count();
    j["checks"] = std::move(checks);
    j["summary"] = {{"total", results.size()},
                    {"passed", results.size() - n_failed},
                    {"failed", n_failed},
                    {"failed_ids", std::move(failed)},
                    {"pass", n_failed == 0},
                    {"wall_ms", wall_ms}};
    write_file(report, j.dump(2) + "\n");
  }
  return n_failed == 0 ? kPass : kVerifyFailed;
}

int run_list() {
  for (const FunctionEntry& f : mdf::cli::function_registry()) {
    std::string params;
    for (const std::string& p : f.params) params += (params.empty() ? "--" : " --") + p;
    std::printf("%-22s %s\n%-22s   %s\n", f.id.c_str(), f.summary.c_str(), "", params.c_str());
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Massive modular lattice sums: evaluation, verification and parameter sweeps", "mdf"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker threads for lattice sums (default: MDF_THREADS or hardware)")
      ->check(CLI::NonNegativeNumber);

  double tol = 1e-12;
  std::string format = "json";

  CLI::App* eval = app.add_subcommand("eval", "evaluate one function");
  std::string eval_id;
  ParamOptions eval_params;
  eval->add_option("function", eval_id, "function id")->required();
  eval->add_option("--tol", tol, "target absolute error")->check(CLI::PositiveNumber);
  eval->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
  eval_params.attach(eval);

  CLI::App* verify = app.add_subcommand("verify", "run acceptance checks");
  std::string suite;
  std::string report;
  std::string fault;
  verify->add_option("suite", suite, "all, invariance, pde, transforms, graph or amplitudes")->required();
  verify->add_option("--report", report, "write a JSON run report to this path");
  verify->add_option("--inject-fault", fault, "deliberately break a coefficient (jacobi-sign)");

  CLI::App* sweep = app.add_subcommand("sweep", "evaluate over a range of one parameter and write CSV");
  SweepArgs sa;
  ParamOptions sweep_params;
  sweep->add_option("function", sa.id, "function id")->required();
  sweep->add_option("--param", sa.param, "swept parameter")->required();
  sweep->add_option("--from", sa.from, "first value")->required();
  sweep->add_option("--to", sa.to, "last value")->required();
  sweep->add_option("--steps", sa.steps, "number of points (0 gives the header only)")->required();
  sweep->add_flag("--geometric", sa.geometric, "geometric rather than linear spacing");
  sweep->add_option("--out", sa.out, "CSV path, '-' for stdout");
  sweep->add_option("--tol", tol, "target absolute error")->check(CLI::PositiveNumber);
  sweep_params.attach(sweep);

  app.add_subcommand("list", "list function ids and their parameters");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (threads > 0) mdf::set_thread_count(threads);
    if (*eval) return run_eval(eval_id, eval_params, tol, format);
    if (*verify) return run_verify(suite, report, fault);
    if (*sweep) return run_sweep(sa, sweep_params, tol);
    return run_list();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const mdf::AccuracyError& e) {
    std::cerr << "accuracy error: " << e.what() << " (best " << e.best_re() << (e.best_im() < 0 ? "" : "+")
              << e.best_im() << "i, error estimate " << e.error_estimate() << ")\n";
    return kDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomain;
  }
}
