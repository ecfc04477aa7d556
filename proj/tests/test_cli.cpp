#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI with stderr discarded and returns its exit code and stdout.
Run mdf(const std::string& args) {
  const std::string cmd = std::string("\"") + MDF_CLI_PATH + "\" " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

nlohmann::json eval_json(const std::string& args) {
  const Run r = mdf("eval " + args + " --format json");
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string kPoint = "--tau 0.2+1.1i --alpha 0.3 --beta 0.7";

}  // namespace

TEST_CASE("eval prints exactly the result fields") {
  const nlohmann::json j = eval_json("e1_massive " + kPoint + " --mu 0.5 --tol 1e-10");
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"err_bound", "radius", "terms", "value_im", "value_re", "wall_ms"});
  CHECK(j["value_re"].is_number_float());
  CHECK(j["radius"].is_number_integer());
  CHECK(j["terms"].is_number_integer());
  CHECK(j["radius"].get<int>() > 0);
  CHECK(j["err_bound"].get<double>() <= 1e-10);
}

TEST_CASE("es_massive at s = 1 reproduces e1_massive") {
  const nlohmann::json e1 = eval_json("e1_massive " + kPoint + " --mu 0.5 --tol 1e-10");
  const nlohmann::json es = eval_json("es_massive --s 1.0 " + kPoint + " --mu 0.5 --tol 1e-10");
  CHECK(std::abs(es["value_re"].get<double>() - e1["value_re"].get<double>()) < 1e-14);
  CHECK(std::abs(es["value_im"].get<double>() - e1["value_im"].get<double>()) < 1e-14);
}

TEST_CASE("coth identity residual") {
  const nlohmann::json j = eval_json("coth_identity --m 0.7");
  CHECK(std::abs(j["value_re"].get<double>()) < 1e-12);
}

TEST_CASE("csv output has a header and one row") {
  const Run r = mdf("eval gamma --s 0.5 --format csv");
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == std::vector<std::string>{"value_re", "value_im", "err_bound", "radius", "terms", "wall_ms"});
  CHECK(std::stod(rows[1][0]) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-14));
}

TEST_CASE("exit codes") {
  CHECK(mdf("eval no_such_function --mu 1").code == 2);
  CHECK(mdf("eval e1_massive --tau 1+i --mu 0.5 --m 2").code == 2);
  CHECK(mdf("eval e1_massive --tau one --mu 0.5").code == 2);
  CHECK(mdf("eval e1_massive --mu 0.5").code == 2);
  CHECK(mdf("frobnicate").code == 2);
  CHECK(mdf("verify nonsense").code == 2);
  CHECK(mdf("eval e1_massive --tau 0.2-1.1i --mu 0.5").code == 3);
  CHECK(mdf("eval e1_massive --tau i --mu -1").code == 3);
  CHECK(mdf("eval gamma --s -2").code == 3);
  CHECK(mdf("sweep gamma --param s --from 1 --to 2 --steps 2 --out /nonexistent-dir/x.csv").code == 4);
  CHECK(mdf("verify pde --report /nonexistent-dir/r.json").code == 4);
}

TEST_CASE("verify pde passes and covers the Casimir check") {
  const std::string report = "cli_pde_report.json";
  const Run r = mdf("verify pde --report " + report);
  CHECK(r.code == 0);
  const nlohmann::json j = nlohmann::json::parse(slurp(report));
  CHECK(j["summary"]["pass"].get<bool>());
  std::vector<std::string> ids;
  for (const auto& c : j["checks"]) {
    ids.push_back(c["id"]);
    CHECK(c["pass"].get<bool>());
    CHECK(!c["measurements"].empty());
  }
  CHECK(ids == std::vector<std::string>{"c04_casimir", "c05_pde_residuals"});
}

TEST_CASE("a sign flip in the Jacobi coefficients is caught") {
  const std::string report = "cli_pde_fault_report.json";
  const Run r = mdf("verify pde --inject-fault jacobi-sign --report " + report);
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL c05_pde_residuals") != std::string::npos);
  const nlohmann::json j = nlohmann::json::parse(slurp(report));
  CHECK(j["summary"]["failed_ids"] == nlohmann::json::array({"c05_pde_residuals"}));
  CHECK(j["fault"] == "jacobi-sign");
}

TEST_CASE("empty sweep writes only the header") {
  const Run r = mdf("sweep f_open --param t --from 1 --to 2 --steps 0 --m 0.3");
  CHECK(r.code == 0);
  CHECK(r.out == "t,value_re,value_im,err_bound\n");
}

TEST_CASE("f_open sweep is symmetric under t -> 1/t with m -> m t") {
  const double m = 0.3;
  const Run r = mdf("sweep f_open --param t --from 0.25 --to 4 --steps 9 --geometric --m 0.3");
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 10);
  for (std::size_t k = 1; k < rows.size(); ++k) {
    const double t = std::stod(rows[k][0]);
    const double f = std::stod(rows[k][1]);
    char args[128];
    std::snprintf(args, sizeof args, "f_open --m %.17g --t %.17g", m * t, 1.0 / t);
    CHECK(std::abs(eval_json(args)["value_re"].get<double>() - f) < 1e-9);
  }
}

TEST_CASE("small-mass sweep of e1_massive follows its power series") {
  const Run r = mdf("sweep e1_massive --param mu --from 1e-4 --to 1e-2 --steps 5 --geometric " + kPoint);
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 6);
  double prev = -INFINITY;
  for (std::size_t k = 1; k < rows.size(); ++k) {
    const double v = std::stod(rows[k][1]);
    CHECK(v > prev);
    prev = v;
    const nlohmann::json ps = eval_json("power_series " + kPoint + " --mu " + rows[k][0] + " --N 1");
    CHECK(std::abs(v - ps["value_re"].get<double>()) < 2.0 * ps["err_bound"].get<double>());
  }
}

TEST_CASE("sweeps are reproducible across runs and thread counts") {
  const std::string args = "sweep e1_massive --param mu --from 0.1 --to 2 --steps 4 " + kPoint;
  const Run a = mdf("--threads 1 " + args);
  const Run b = mdf("--threads 4 " + args);
  const Run c = mdf("--threads 4 " + args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(b.out == c.out);
}
