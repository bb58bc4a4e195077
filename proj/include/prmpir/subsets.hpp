#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace prmpir {

// A subset of [m] = {1, ..., m} stored as a bitmask: element e is present
// iff bit (e-1) is set. Elements are 1-based in all I/O, bit positions
// 0-based internally.
struct SubsetMask {
  uint32_t bits = 0;
  int m = 0;

  SubsetMask() = default;
  SubsetMask(uint32_t bits_, int m_);

  static SubsetMask of(std::initializer_list<int> elems, int m);
  static SubsetMask of(const std::vector<int>& elems, int m);
  static SubsetMask empty_set(int m) { return SubsetMask(0, m); }
  static SubsetMask full_set(int m);

  int weight() const;
  bool empty() const { return bits == 0; }
  bool contains(int e) const;
  bool subset_of(const SubsetMask& other) const;
  SubsetMask without(int e) const;
  SubsetMask with(int e) const;
  SubsetMask unite(const SubsetMask& other) const;
  SubsetMask complement() const;

  std::vector<int> elements() const;
  std::string to_string() const;       // "{1,2,5}", "{}" when empty
  std::string support_string() const;  // length-m 0/1 string, char e-1 = element e

  friend bool operator==(const SubsetMask& a, const SubsetMask& b) {
    return a.bits == b.bits && a.m == b.m;
  }
};

// Canonical coordinate order: weight ascending, colexicographic within each
// weight class. On equal-weight masks colex coincides with numeric order of
// the bit patterns.
bool canonical_less(const SubsetMask& a, const SubsetMask& b);

// Exact binomial coefficient. Returns 0 for k > n or k < 0. Throws
// std::overflow_error if the value does not fit in uint64_t.
uint64_t binom(int n, int k);

// Rank of s among all weight(s)-subsets of [m] in colex order, and its
// inverse. unrank throws std::out_of_range when idx >= binom(m, size).
uint64_t colex_rank(const SubsetMask& s);
SubsetMask colex_unrank(uint64_t idx, int size, int m);

// All subsets T of s with |T| >= min_size, in canonical (weight, colex)
// order.
std::vector<SubsetMask> subsets_of(const SubsetMask& s, int min_size);

}  // namespace prmpir
