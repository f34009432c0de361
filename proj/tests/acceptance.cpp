// One line per acceptance criterion; exit status is nonzero if any fails.
#include "ybfk/suite.hpp"

#include <chrono>
#include <cstdio>
#include <exception>

int main() {
  ybfk::SuiteConfig config; // seed 0
  int failed = 0;
  for (int id = 1; id <= ybfk::criterion_count(); ++id) {
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    std::string detail;
    try {
      const auto r = ybfk::run_criterion(id, config);
      pass = r.pass;
      detail = r.details.dump();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] criterion %2d %-24s (%.2fs) %s\n", pass ? "PASS" : "FAIL", id,
                ybfk::criterion_name(id).c_str(), secs, detail.c_str());
    failed += pass ? 0 : 1;
  }
  std::printf("%d/%d criteria passed\n", ybfk::criterion_count() - failed, ybfk::criterion_count());
  return failed == 0 ? 0 : 1;
}
