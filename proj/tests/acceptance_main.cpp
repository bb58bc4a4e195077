// Integration gate: runs every verification criterion at full scope and
// prints one pass/fail line each. Exit code 0 iff all pass.

#include <iomanip>
#include <iostream>

#include "prmpir/verify.hpp"

int main() {
  prmpir::VerifyOptions options;  // full sweeps, 20000 audit trials, seed 0
  auto results = prmpir::run_acceptance(options);

  for (const prmpir::CriterionResult& r : results) {
    std::cout << (r.pass ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << r.id << "  ["
              << r.name << "]  " << r.detail << "  (" << std::fixed << std::setprecision(2)
              << r.seconds << "s)" << std::endl;
  }
  const bool ok = prmpir::all_passed(results);
  std::cout << (ok ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << std::endl;
  return ok ? 0 : 1;
}
