#pragma once

#include <cstdint>
#include <vector>

#include "prmpir/prm.hpp"
#include "prmpir/subsets.hpp"

namespace prmpir {

// The unique representation of a shortening amount gamma as a vector
// (rho_{ell-1}, ..., rho_0) with sum <= r: rho[t] nested sets of cardinality
// r + t are selected, and r_t = r - sum_{q > t} rho[q] is the residual
// degree at level t. `family` holds the selected sets once populated.
struct RhoDecomposition {
  int r = 0;
  int ell = 0;
  uint64_t gamma = 0;
  std::vector<int> rho;  // indexed by level t in [0, ell)
  std::vector<int> r_t;  // residual degree per level
  std::vector<SubsetMask> family;
};

// Count of r-subsets contributed by p nested (r+t)-element sets:
// sum_{i=0}^{p-1} binom(r+t-i, r-i); 0 when p = 0.
uint64_t count_new_messages(int p, int r, int t);

// Count of weight >= r subsets contributed by the same p sets:
// sum_{j=0}^{t} sum_{i=0}^{p-1} binom(r+t-i, r+j-i); 0 when p = 0.
uint64_t count_new_coordinates(int p, int r, int t);

// Unique rho vector for gamma in [0, binom(r+ell, ell)). The family is not
// populated; see set_family.
RhoDecomposition rho_decompose(uint64_t gamma, int r, int ell);

// The nested set family P realizing a decomposition inside universe [m]:
// starting from [m], each level removes one element at a time, and level t
// contributes its first rho[t] sets (cardinality r + t).
std::vector<SubsetMask> set_family(const RhoDecomposition& rho, int m);

// Messages to zero and coordinates that become deletable when shortening
// PRM(r, m-1) by gamma. Both lists are in canonical (weight, colex) order;
// sizes are gamma and gamma_prime by construction.
struct ShorteningPlan {
  RhoDecomposition rho;
  std::vector<SubsetMask> zeroed_messages;
  std::vector<SubsetMask> deleted_coordinates;
  uint64_t gamma_prime = 0;
};

ShorteningPlan shortening_plan(int m, int r, uint64_t gamma);

// SPRM(r, m-1, gamma): the PRM code with the plan's message rows and
// coordinate columns removed. Keeps tau = 2^(m-r) disjoint recovery sets per
// surviving symbol and the systematic form.
PirCode build_sprm(int m, int r, uint64_t gamma);

// Shortens by zeroing an arbitrary set of message symbols. A coordinate is
// deleted iff its generator column is forced to zero in the surviving rows.
// Keeps tau disjoint recovery sets per surviving symbol.
PirCode arbitrary_shorten(const PirCode& code, const std::vector<int>& msg_indices);

// Removes the last coordinate in canonical order (a parity symbol) and drops
// the one recovery set per symbol that used it: an (n-1, k) code with
// tau - 1 recovery sets.
PirCode puncture(const PirCode& code);

}  // namespace prmpir
