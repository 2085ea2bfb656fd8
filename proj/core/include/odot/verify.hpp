#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "odot/io.hpp"

namespace odot {

struct VerifyOptions {
  std::uint64_t seed = 0;
  int max_dim = 3;
  int max_size = 15;
  int threads = 0;  // 0: hardware concurrency
  int samples = 0;  // suite-specific sample count, 0 for the default
};

struct Counterexample {
  std::string label;
  std::string message;
  json data;  // interchange JSON of the offending objects
};

struct VerifyReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  std::vector<Counterexample> failures;
  double seconds = 0;
  bool ok() const { return failures.empty(); }
  json to_json() const;
};

using VerifyCase = std::function<std::optional<Counterexample>()>;

// Runs the cases over a pool of workers; failures come back in case order
// whatever the scheduling. An exception inside a case becomes a failure.
std::vector<Counterexample> run_cases(const std::vector<VerifyCase>& cases, int threads,
                                      const std::vector<std::string>& labels = {});

// shape-counts, strict-omega, inverted-cylinders, boundary-horns,
// marked-horn-closure, entire-identity, localisation, witness-soundness,
// factorisation.
const std::vector<std::string>& verify_suites();
// ParseError for an unknown suite name.
VerifyReport run_suite(const std::string& name, const VerifyOptions& opt);

// True when the poset has no automorphism other than the identity.
bool is_rigid(const OgPoset& P);

}  // namespace odot
