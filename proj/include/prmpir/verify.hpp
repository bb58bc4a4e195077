#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "prmpir/prm.hpp"

namespace prmpir {

// Structural PIR-code checks: tau pairwise-disjoint recovery sets per
// message symbol whose generator columns XOR to the unit vector, systematic
// leading block, canonical coordinate order. Returns an empty string when
// everything holds, else a description of the first violation. With
// expect_full_coverage, additionally requires every coordinate to appear in
// each symbol's recovery family.
std::string check_pir_invariants(const PirCode& code, bool expect_full_coverage);

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  int max_m = 8;                    // cap on the structural sweeps
  int64_t audit_trials = 20000;     // per target in the privacy audit
  uint64_t seed = 0;
};

// Runs the full verification suite (construction sweeps, brute-force
// distance oracles, uniqueness of the shortening decomposition, bound
// certification, table reproduction, simulation correctness and the privacy
// audit). Progress lines go to `progress` when non-null.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& options,
                                            std::ostream* progress = nullptr);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace prmpir
