#pragma once

#include <cstdint>
#include <vector>

#include "prmpir/gf2.hpp"
#include "prmpir/subsets.hpp"

namespace prmpir {

// Parameters of a (possibly shortened) projective Reed-Muller PIR code:
// homogeneous degree r in m variables, ell = m - r, tau = 2^ell servers,
// gamma message symbols shortened away (0 for the pure construction).
struct CodeSpec {
  int m = 0;
  int r = 0;
  uint64_t gamma = 0;

  int ell() const { return m - r; }
  int tau() const { return 1 << ell(); }
};

struct PrmParams {
  uint64_t n = 0;
  uint64_t k = 0;
  uint64_t tau = 0;
};

// Block length, dimension and recovery-set count of PRM(r, m-1):
// n = sum_{i=r}^{m} binom(m,i), k = binom(m,r), tau = 2^(m-r).
PrmParams prm_params(int m, int r);

// A constructed PIR code. Coordinates are subsets of [m] of weight >= r in
// canonical (weight, colex) order; the first k of them are the message
// symbols, so the generator has the systematic form [I | P]. recovery[i][t]
// lists the coordinate indices whose generator columns XOR to unit vector i;
// the t = 0 set is always the systematic singleton {i}.
struct PirCode {
  CodeSpec spec;
  std::vector<SubsetMask> coordinates;
  Gf2Matrix generator;
  std::vector<std::vector<std::vector<int>>> recovery;
  int declared_tau = 0;

  int n() const { return static_cast<int>(coordinates.size()); }
  int k() const { return generator.rows(); }
  int tau() const { return declared_tau; }

  // Message symbol i names the r-subset at systematic coordinate i.
  const SubsetMask& message_subset(int i) const { return coordinates.at(i); }
};

// Builds the pure code PRM(r, m-1). Refuses when n would exceed 2^20.
PirCode build_prm(int m, int r);

// The tau = 2^(m-r) disjoint recovery sets for message symbol R (an
// r-subset), relative to the given coordinate list: for each subset S of
// [m] \ R (in increasing bitmask order, so S = {} and the systematic
// singleton come first), the set { T u S : T subset of R, |T| + |S| >= r }.
// Coordinates absent from `coords` are skipped, which is how shortened codes
// inherit their recovery sets.
std::vector<std::vector<int>> recovery_sets(int m, int r, const SubsetMask& R,
                                            const std::vector<SubsetMask>& coords);

// msg * G. Coordinate S of the result equals the XOR of msg[R] over all
// r-subsets R of S.
std::vector<uint8_t> encode(const PirCode& code, const std::vector<uint8_t>& msg);

// XOR of the codeword positions in recovery set t of message i; equals
// msg[i] for any codeword of the code.
int retrieve(const PirCode& code, const std::vector<uint8_t>& codeword, int i, int t);

}  // namespace prmpir
