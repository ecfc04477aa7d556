#include "registry.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <system_error>

#include "mdf/classical.hpp"
#include "mdf/error.hpp"
#include "mdf/graphfn.hpp"
#include "mdf/massive.hpp"
#include "mdf/special_fns.hpp"
#include "mdf/transforms.hpp"

namespace mdf::cli {
namespace {

bool parse_number(std::string_view s, double& out) {
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

// Imaginary part of a trailing "bi" token: "i", "+i", "-i" or a number followed by i.
bool parse_imag(std::string_view s, double& out) {
  if (s == "i" || s == "+i") return out = 1.0, true;
  if (s == "-i") return out = -1.0, true;
  if (s.empty() || s.back() != 'i') return false;
  return parse_number(s.substr(0, s.size() - 1), out);
}

Evaluation from(const EvalResult& r) { return {r.value, r.err_bound, r.radius, r.terms}; }
Evaluation from(const Estimate& e) { return {e.value, e.err, 0, 0}; }
Evaluation from(const SeriesValue& v) { return {v.value, v.tail, 0, v.terms}; }

UpperHalfPoint tau_of(const Params& p) { return UpperHalfPoint(p.complex("tau")); }
TorusPoint z_of(const Params& p) { return {p.real("alpha", 0.0), p.real("beta", 0.0)}; }
TorusPoint w_of(const Params& p) { return {p.real("w-alpha", 0.0), p.real("w-beta", 0.0)}; }
double mu_of(const Params& p) { return MassParameter(p.real("mu")).value(); }

RadialProfile profile_of(const Params& p) {
  const std::string kind = p.text("profile", "bessel");
  if (kind == "bessel") return RadialProfile::bessel(p.complex("profile-s", 1.0));
  if (kind == "graph") return RadialProfile::graph_kernel();
  throw UsageError("unknown profile '" + kind + "' (expected bessel or graph)");
}

FamilyParams family_of(const Params& p) {
  const FamilyParams base = p.text("profile", "bessel") == "graph" ? modular_graph_params()
                                                                   : es_family_params(p.complex("profile-s", 1.0));
  FamilyParams f;
  f.a = p.real("family-a", base.a);
  f.b = p.real("family-b", base.b);
  f.c = p.complex("family-c", base.c);
  f.d = p.complex("family-d", base.d);
  f.L = p.integer("family-L", base.L);
  return f;
}

MellinGrid grid_of(const Params& p) {
  MellinGrid g;
  g.c = p.real("c", g.c);
  g.T = p.real("T", g.T);
  return g;
}

std::vector<FunctionEntry> build_registry() {
  std::vector<FunctionEntry> r = {
      {"bessel_k", "K_nu(x)", {"s", "x"},
       [](const Params& p, double) { return from(bessel_k(p.complex("s"), p.real("x"))); }},
      {"c_alpha_m", "(m / 2pi) sum_l cos(2 pi l alpha) K_1(2 pi l m) / l", {"alpha", "m"},
       [](const Params& p, double) { return from(c_alpha_m_bessel(p.real("alpha", 0.0), p.real("m"))); }},
      {"coth_identity", "sum_l 1/(l^2 + m^2) minus its closed form (value is the residual)", {"m"},
       [](const Params& p, double) {
         const IdentityResidual id = coth_identity(p.real("m"));
         return Evaluation{id.residual(), id.err, 0, 0};
       }},
      {"e1_massive", "massive E_1 at z = alpha tau + beta", {"tau", "alpha", "beta", "mu"},
       [](const Params& p, double tol) { return from(e1_massive(z_of(p), tau_of(p), mu_of(p), tol)); }},
      {"e1_massive_twisted", "quasiperiodic massive E_1", {"tau", "alpha", "beta", "w-alpha", "w-beta", "mu"},
       [](const Params& p, double tol) {
         return from(e1_massive_twisted(w_of(p), z_of(p), tau_of(p), mu_of(p), tol));
       }},
      {"e_general", "generalized family with a chosen profile",
       {"tau", "alpha", "beta", "mu", "profile", "profile-s", "family-a", "family-b", "family-c", "family-d",
        "family-L"},
       [](const Params& p, double tol) {
         return from(e_general(profile_of(p), family_of(p), z_of(p), tau_of(p), mu_of(p), tol));
       }},
      {"eisenstein_continued", "Kronecker-Eisenstein series, continued in s",
       {"s", "tau", "alpha", "beta", "w-alpha", "w-beta"},
       [](const Params& p, double tol) {
         return from(eisenstein_continued(p.complex("s"), w_of(p), z_of(p), tau_of(p), tol));
       }},
      {"eisenstein_direct", "Kronecker-Eisenstein series by direct summation (Re s > 1)",
       {"s", "tau", "alpha", "beta", "w-alpha", "w-beta"},
       [](const Params& p, double tol) {
         return from(eisenstein_direct(p.complex("s"), w_of(p), z_of(p), tau_of(p), tol));
       }},
      {"es_massive", "massive E_s", {"s", "tau", "alpha", "beta", "mu"},
       [](const Params& p, double tol) {
         return from(es_massive(p.complex("s"), z_of(p), tau_of(p), mu_of(p), tol));
       }},
      {"f_open", "open-string product F_m(t)", {"m", "t"},
       [](const Params& p, double tol) {
         const SeriesValue v = log_f_open(p.real("m"), p.real("t"), std::max(tol, 1e-16));
         const double f = std::exp(v.value.real());
         return Evaluation{f, f * v.tail, 0, v.terms};
       }},
      {"gamma", "Gamma(s)", {"s"},
       [](const Params& p, double) { return Evaluation{gamma(p.complex("s")), 0.0, 0, 0}; }},
      {"helmholtz_green", "torus Helmholtz Green's function, mode sum", {"tau2", "alpha", "beta", "mu"},
       [](const Params& p, double tol) {
         return from(helmholtz_green(z_of(p), p.real("tau2"), mu_of(p), tol));
       }},
      {"helmholtz_resummed", "torus Helmholtz Green's function, resummed over l", {"tau2", "alpha", "beta", "mu"},
       [](const Params& p, double tol) {
         return from(helmholtz_resummed(z_of(p), p.real("tau2"), mu_of(p), tol));
       }},
      {"kronecker_limit_e1", "E_1(0, z; tau) from log |theta_1 / eta|", {"tau", "alpha", "beta"},
       [](const Params& p, double) { return Evaluation{kronecker_limit_e1(z_of(p), tau_of(p)), 0.0, 0, 0}; }},
      {"massive_e2_residual", "Laplace-type equation residual of the graph function", {"tau", "mu"},
       [](const Params& p, double tol) {
         const OperatorResidual r = massive_e2_residual(tau_of(p), mu_of(p), tol);
         return Evaluation{r.residual, tol * std::max(r.reference, 1.0), 0, 0};
       }},
      {"mellin_forward", "int_0^inf E_1,mu mu^{s-1} dmu", {"tau", "alpha", "beta", "s"},
       [](const Params& p, double) {
         return from(mellin_forward(z_of(p), tau_of(p), p.complex("s"), grid_of(p)));
       }},
      {"mellin_inverse", "inverse Mellin transform back to E_1,mu", {"tau", "alpha", "beta", "mu", "c", "T"},
       [](const Params& p, double) { return from(mellin_inverse(z_of(p), tau_of(p), mu_of(p), grid_of(p))); }},
      {"modular_graph_11", "massive two-point graph function", {"tau", "mu"},
       [](const Params& p, double tol) { return from(modular_graph_11(tau_of(p), mu_of(p), tol)); }},
      {"partition_z", "torus partition function Z_m(alpha, beta; tau)", {"tau", "alpha", "beta", "m"},
       [](const Params& p, double tol) {
         const SeriesValue v =
             log_partition_z(p.real("alpha", 0.0), p.real("beta", 0.0), p.real("m"), tau_of(p), std::max(tol, 1e-15));
         const cplx z = std::exp(v.value);
         return Evaluation{z, std::abs(z) * v.tail, 0, v.terms};
       }},
      {"power_series", "small-mass expansion truncated at order N",
       {"tau", "alpha", "beta", "w-alpha", "w-beta", "mu", "N"},
       [](const Params& p, double) {
         return from(power_series(w_of(p), z_of(p), tau_of(p), mu_of(p), p.integer("N", 8)));
       }},
      {"w_generating", "sum* tau2^2 / (|lambda|^2 + mu tau2)^2", {"tau", "mu"},
       [](const Params& p, double tol) { return from(w_generating(tau_of(p), mu_of(p), tol)); }},
  };
  std::sort(r.begin(), r.end(), [](const FunctionEntry& a, const FunctionEntry& b) { return a.id < b.id; });
  return r;
}

}  // namespace

const std::string& Params::raw(const std::string& name) const {
  const auto it = values_.find(name);
  if (it == values_.end()) throw UsageError("missing required parameter --" + name);
  return it->second;
}

double Params::real(const std::string& name) const {
  try {
    return parse_real(raw(name));
  } catch (const UsageError& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
}

double Params::real(const std::string& name, double fallback) const { return has(name) ? real(name) : fallback; }

cplx Params::complex(const std::string& name) const {
  try {
    return parse_complex(raw(name));
  } catch (const UsageError& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
}

cplx Params::complex(const std::string& name, cplx fallback) const { return has(name) ? complex(name) : fallback; }

int Params::integer(const std::string& name, std::optional<int> fallback) const {
  if (!has(name)) {
    if (fallback) return *fallback;
    raw(name);
  }
  const std::string& s = raw(name);
  int out = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw UsageError("--" + name + ": not an integer: " + s);
  return out;
}

std::string Params::text(const std::string& name, const std::string& fallback) const {
  return has(name) ? raw(name) : fallback;
}

double parse_real(const std::string& s) {
  double x = 0.0;
  if (!parse_number(s, x)) throw UsageError("not a real number: '" + s + "'");
  return x;
}

cplx parse_complex(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ') s.push_back(ch);
  }
  double re = 0.0;
  double im = 0.0;
  if (parse_number(s, re)) return {re, 0.0};
  if (parse_imag(s, im)) return {0.0, im};
  // Split at the last sign that is not part of an exponent.
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      if (parse_number(std::string_view(s).substr(0, k), re) && parse_imag(std::string_view(s).substr(k), im)) {
        return {re, im};
      }
      break;
    }
  }
  throw UsageError("not a complex number (expected a+bi): '" + text + "'");
}

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

const std::vector<FunctionEntry>& function_registry() {
  static const std::vector<FunctionEntry> registry = build_registry();
  return registry;
}

const FunctionEntry* find_function(const std::string& id) {
  for (const FunctionEntry& f : function_registry()) {
    if (f.id == id) return &f;
  }
  return nullptr;
}

const std::vector<std::string>& parameter_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const FunctionEntry& f : function_registry()) {
      out.insert(out.end(), f.params.begin(), f.params.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }();
  return names;
}

}  // namespace mdf::cli
