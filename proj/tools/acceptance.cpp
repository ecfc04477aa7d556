// Runs every acceptance check and prints one line per criterion.
#include <cstdio>

#include "mdf/checks.hpp"

int main() {
  using namespace mdf;
  int failed = 0;
  run_suite("all", {}, [&](const CheckResult& r) {
    const bool ok = r.pass();
    if (!ok) ++failed;
    if (!r.error.empty()) {
      std::printf("%s %-32s error: %s\n", ok ? "PASS" : "FAIL", r.id.c_str(), r.error.c_str());
    } else if (const Measurement* w = r.worst()) {
      const char* op = w->compare == Measurement::Compare::kGreater ? ">" : w->compare == Measurement::Compare::kLessEqual ? "<=" : "<";
      std::printf("%s %-32s %-30s %.3e %s %.1e  (%.0f ms)\n", ok ? "PASS" : "FAIL", r.id.c_str(), w->name.c_str(),
                  w->residual, op, w->tolerance, r.wall_ms);
    } else {
      std::printf("FAIL %-32s no measurements\n", r.id.c_str());
    }
    std::fflush(stdout);
  });
  std::printf("%d of 12 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
