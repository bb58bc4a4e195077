#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "prmpir/prm.hpp"
#include "prmpir/shorten.hpp"

namespace prmpir {

// Exact integer square root (floor).
uint64_t isqrt(uint64_t x);

// Lower bound on the block length of a systematic (n, k) tau-server PIR
// code: k + ceil((sqrt(8k+1)+1)/2) + (tau - 3) for tau >= 3, k + 1 for
// tau = 2. Evaluated in exact integer arithmetic.
uint64_t lb_systematic(uint64_t k, int tau);

struct Construction {
  int m = 0;
  int r = 0;
  uint64_t gamma = 0;
  bool punctured = false;
};

struct BoundReport {
  uint64_t k = 0;
  int tau = 0;
  uint64_t lower = 0;
  uint64_t achieved = 0;
  Construction construction;
  bool optimal = false;
};

// Best construction for the requested dimension and tau in
// {2} u {2^l, 2^l - 1 : l >= 2}: the shortened code on the smallest
// admissible m, punctured once for the 2^l - 1 family. For tau = 3, 4 the
// result meets lb_systematic exactly.
std::pair<BoundReport, PirCode> best_code(uint64_t k, int tau);

// Generalized-Hamming-weight upper bound d_{k-gamma} <= n - gamma' for
// PRM(r, m-1); returns (k - gamma, n - gamma').
std::pair<uint64_t, uint64_t> ghw_upper(int m, int r, uint64_t gamma);

struct Table1Row {
  int gamma = 0;
  std::vector<int> rho;            // displayed high level first
  std::vector<SubsetMask> family;  // compared as a set
  uint64_t gamma_prime = 0;
  uint64_t k = 0;
  uint64_t n = 0;
};

struct Table1Result {
  std::vector<Table1Row> rows;
  std::vector<std::string> diffs;  // empty iff every row matches the reference
};

// The ten SPRM(2, 4, gamma) parameter rows, checked against the embedded
// reference copy.
Table1Result table1();

struct Table2Cell {
  int k = 0;
  int tau = 0;
  uint64_t n1 = 0;      // computed block length
  int n1_expected = 0;  // reference value
  int n2 = 0;           // best previously reported block length (static data)
};

struct Table2Result {
  std::vector<Table2Cell> cells;  // k in [2, 32] x tau in {3, 4, 8, 16}
  std::vector<std::string> diffs;
};

// Block lengths for k in [2, 32], tau in {3, 4, 8, 16}: computed n1 checked
// against the reference copy and against n1 <= n2.
Table2Result table2();

}  // namespace prmpir
