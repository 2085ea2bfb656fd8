// Runs the nine acceptance criteria at their stated bounds and time limits.
// One PASS/FAIL line per criterion; non-zero exit if any fails.
#include <cstdio>
#include <functional>

#include "odot/verify.hpp"

using namespace odot;

namespace {

struct Criterion {
  int id;
  const char* suite;
  double limit;  // seconds
  // Extra requirement on the report, e.g. a minimum number of cases.
  std::function<const char*(const VerifyReport&)> extra;
};

}  // namespace

int main() {
  const VerifyOptions opt{0, 3, 15, 0, 0};
  auto at_least = [](std::size_t n, const char* what) {
    return [n, what](const VerifyReport& r) -> const char* { return r.cases >= n ? nullptr : what; };
  };
  auto exactly = [](std::size_t n, const char* what) {
    return [n, what](const VerifyReport& r) -> const char* { return r.cases == n ? nullptr : what; };
  };
  // shape-counts: 5 cubes, 5 simplices, 7 globes, then at least 50 cylinder pairs.
  const std::vector<Criterion> criteria{
      {1, "shape-counts", 5, at_least(17 + 50, "fewer than 50 cylinder pairs")},
      {2, "strict-omega", 60, at_least(1, "no composable cases")},
      {3, "inverted-cylinders", 60, at_least(1, "no cases")},
      {4, "boundary-horns", 120, at_least(1, "no atoms")},
      {5, "marked-horn-closure", 120, at_least(1, "no horns enumerated")},
      {6, "entire-identity", 10, exactly(20, "not 20 samples")},
      {7, "localisation", 10, at_least(5, "missing cases")},
      {8, "witness-soundness", 30, at_least(1, "no cases")},
      {9, "factorisation", 10, exactly(100, "not 100 maps")},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    VerifyReport r;
    const char* why = nullptr;
    std::string err;
    try {
      r = run_suite(c.suite, opt);
      if (!r.ok()) why = "counterexamples found";
      else if (r.seconds >= c.limit) why = "time limit exceeded";
      else why = c.extra(r);
    } catch (const std::exception& e) {
      err = e.what();
      why = err.c_str();
    }
    std::printf("%s criterion %d %-20s cases=%zu failures=%zu time=%.2fs limit=%.0fs%s%s\n", why ? "FAIL" : "PASS",
                c.id, c.suite, r.cases, r.failures.size(), r.seconds, c.limit, why ? " : " : "", why ? why : "");
    for (std::size_t i = 0; i < r.failures.size() && i < 3; ++i)
      std::printf("    %s: %s\n", r.failures[i].label.c_str(), r.failures[i].message.c_str());
    std::fflush(stdout);
    failed += why != nullptr;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
