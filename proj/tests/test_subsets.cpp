#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "prmpir/subsets.hpp"

using namespace prmpir;

namespace {

// Pascal-triangle oracle, independent of the multiplicative implementation.
uint64_t pascal(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<std::vector<uint64_t>> t(n + 1);
  for (int i = 0; i <= n; ++i) {
    t[i].assign(i + 1, 1);
    for (int j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
  }
  return t[n][k];
}

}  // namespace

TEST_CASE("binom matches the Pascal triangle") {
  CHECK(binom(5, 2) == 10);
  CHECK(binom(4, 2) == 6);
  CHECK(binom(7, 0) == 1);
  CHECK(binom(0, 0) == 1);
  CHECK(binom(3, 5) == 0);
  for (int n = 0; n <= 40; ++n) {
    for (int k = 0; k <= n; ++k) CHECK(binom(n, k) == pascal(n, k));
  }
}

TEST_CASE("binom overflow is detected") {
  CHECK_NOTHROW(binom(62, 28));
  CHECK_THROWS_AS(binom(68, 34), std::overflow_error);
}

TEST_CASE("mask basics") {
  SubsetMask s = SubsetMask::of({1, 2, 5}, 5);
  CHECK(s.bits == 0b10011u);
  CHECK(s.weight() == 3);
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(3));
  CHECK(s.to_string() == "{1,2,5}");
  CHECK(s.support_string() == "11001");
  CHECK(SubsetMask::empty_set(4).to_string() == "{}");
  CHECK(s.subset_of(SubsetMask::full_set(5)));
  CHECK_FALSE(SubsetMask::of({3}, 5).subset_of(s));
  CHECK(s.complement() == SubsetMask::of({3, 4}, 5));
  CHECK_THROWS_AS(SubsetMask::of({6}, 5), std::invalid_argument);
  CHECK_THROWS_AS(SubsetMask(0b1000, 3), std::invalid_argument);
}

TEST_CASE("colex order of the 2-subsets of [4]") {
  // {1,2},{1,3},{2,3},{1,4},{2,4},{3,4}
  const std::vector<SubsetMask> want = {
      SubsetMask::of({1, 2}, 4), SubsetMask::of({1, 3}, 4), SubsetMask::of({2, 3}, 4),
      SubsetMask::of({1, 4}, 4), SubsetMask::of({2, 4}, 4), SubsetMask::of({3, 4}, 4),
  };
  for (uint64_t i = 0; i < 6; ++i) {
    CHECK(colex_unrank(i, 2, 4) == want[i]);
    CHECK(colex_rank(want[i]) == i);
  }
}

TEST_CASE("colex unrank starts at the prefix set") {
  for (int m = 1; m <= 8; ++m) {
    for (int r = 0; r <= m; ++r) {
      SubsetMask first = colex_unrank(0, r, m);
      for (int e = 1; e <= r; ++e) CHECK(first.contains(e));
      CHECK(first.weight() == r);
    }
  }
}

TEST_CASE("colex rank and unrank invert each other") {
  for (uint64_t i = 0; i < binom(5, 2); ++i) {
    CHECK(colex_rank(colex_unrank(i, 2, 5)) == i);
  }
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int m = 1 + static_cast<int>(rng() % 16);
    int size = static_cast<int>(rng() % (m + 1));
    uint64_t idx = rng() % binom(m, size);
    SubsetMask s = colex_unrank(idx, size, m);
    CHECK(s.weight() == size);
    CHECK(colex_rank(s) == idx);
  }
  CHECK_THROWS_AS(colex_unrank(binom(5, 2), 2, 5), std::out_of_range);
}

TEST_CASE("colex is a strict total order within a cardinality class") {
  for (int m = 1; m <= 7; ++m) {
    for (int size = 0; size <= m; ++size) {
      uint64_t cnt = binom(m, size);
      for (uint64_t i = 1; i < cnt; ++i) {
        CHECK(canonical_less(colex_unrank(i - 1, size, m), colex_unrank(i, size, m)));
      }
    }
  }
}

TEST_CASE("subsets_of enumerates in (weight, colex) order") {
  SubsetMask s = SubsetMask::of({1, 2, 3}, 5);
  auto subs = subsets_of(s, 2);
  REQUIRE(subs.size() == 4);
  CHECK(subs[0] == SubsetMask::of({1, 2}, 5));
  CHECK(subs[1] == SubsetMask::of({1, 3}, 5));
  CHECK(subs[2] == SubsetMask::of({2, 3}, 5));
  CHECK(subs[3] == SubsetMask::of({1, 2, 3}, 5));

  CHECK(subsets_of(SubsetMask::of({1, 2}, 4), 2).size() == 1);
  CHECK(subsets_of(SubsetMask::of({1, 2, 3, 4}, 6), 2).size() == 11);
}

TEST_CASE("subsets_of count matches the binomial sum") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    int m = 1 + static_cast<int>(rng() % 12);
    SubsetMask s(static_cast<uint32_t>(rng()) & SubsetMask::full_set(m).bits, m);
    int t = static_cast<int>(rng() % (m + 1));
    uint64_t want = 0;
    for (int i = t; i <= s.weight(); ++i) want += binom(s.weight(), i);
    CHECK(subsets_of(s, t).size() == want);
  }
}
