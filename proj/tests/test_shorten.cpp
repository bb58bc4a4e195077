#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "prmpir/shorten.hpp"
#include "prmpir/subsets.hpp"
#include "prmpir/verify.hpp"

using namespace prmpir;

namespace {

std::vector<int> displayed(const RhoDecomposition& d) {
  return std::vector<int>(d.rho.rbegin(), d.rho.rend());
}

std::set<uint32_t> family_bits(const std::vector<SubsetMask>& family) {
  std::set<uint32_t> out;
  for (const SubsetMask& s : family) out.insert(s.bits);
  return out;
}

bool same_code(const PirCode& a, const PirCode& b) {
  return a.coordinates == b.coordinates && a.generator == b.generator &&
         a.recovery == b.recovery && a.tau() == b.tau();
}

}  // namespace

TEST_CASE("level counting helpers") {
  CHECK(count_new_messages(1, 2, 1) == 3);  // binom(3, 2)
  CHECK(count_new_messages(0, 5, 3) == 0);
  // h(r+1, r, ell-1) = binom(r+ell, r)
  for (int r = 1; r <= 4; ++r) {
    for (int ell = 1; ell <= 4; ++ell) {
      CHECK(count_new_messages(r + 1, r, ell - 1) == binom(r + ell, r));
    }
  }
  CHECK(count_new_coordinates(0, 3, 2) == 0);
  CHECK(count_new_coordinates(1, 2, 1) == 4);  // binom(3,2) + binom(3,3)
}

TEST_CASE("rho decomposition of the reference rows") {
  CHECK(displayed(rho_decompose(4, 2, 3)) == std::vector<int>{0, 1, 1});
  CHECK(displayed(rho_decompose(9, 2, 3)) == std::vector<int>{2, 0, 0});
  CHECK(displayed(rho_decompose(0, 2, 3)) == std::vector<int>{0, 0, 0});
  CHECK_THROWS_AS(rho_decompose(10, 2, 3), std::invalid_argument);

  // Degenerate ell = 0: only gamma = 0 exists.
  RhoDecomposition d = rho_decompose(0, 3, 0);
  CHECK(d.rho.empty());
  CHECK_THROWS_AS(rho_decompose(1, 3, 0), std::invalid_argument);
}

TEST_CASE("set family reproduces the reference families") {
  auto family_for = [](uint64_t gamma) {
    RhoDecomposition d = rho_decompose(gamma, 2, 3);
    return family_bits(set_family(d, 5));
  };
  CHECK(family_for(4) == family_bits({SubsetMask::of({1, 2, 3}, 5), SubsetMask::of({1, 4}, 5)}));
  CHECK(family_for(6) == family_bits({SubsetMask::of({1, 2, 3, 4}, 5)}));
  CHECK(family_for(8) ==
        family_bits({SubsetMask::of({1, 2, 3, 4}, 5), SubsetMask::of({1, 2, 5}, 5)}));
}

TEST_CASE("family composition and nesting") {
  // Level t contributes exactly rho[t] sets of cardinality r + t, and no
  // member is contained in another.
  for (int m = 2; m <= 7; ++m) {
    for (int r = 1; r < m; ++r) {
      for (uint64_t gamma = 0; gamma < binom(m, m - r); ++gamma) {
        RhoDecomposition d = rho_decompose(gamma, r, m - r);
        auto family = set_family(d, m);
        std::map<int, int> by_size;
        for (const SubsetMask& s : family) ++by_size[s.weight()];
        for (int t = 0; t < d.ell; ++t) {
          CHECK(by_size[r + t] == d.rho[t]);
        }
        for (size_t a = 0; a < family.size(); ++a) {
          for (size_t b = 0; b < family.size(); ++b) {
            if (a != b) CHECK_FALSE(family[a].subset_of(family[b]));
          }
        }
      }
    }
  }
}

TEST_CASE("shortening plan counts") {
  ShorteningPlan plan = shortening_plan(5, 2, 5);
  CHECK(plan.gamma_prime == 7);
  CHECK(plan.zeroed_messages.size() == 5);
  CHECK(plan.deleted_coordinates.size() == 7);

  CHECK(shortening_plan(5, 2, 0).gamma_prime == 0);
  CHECK(shortening_plan(5, 2, 9).gamma_prime == 18);

  // Zeroed messages are exactly the weight-r deleted coordinates.
  for (const SubsetMask& z : plan.zeroed_messages) {
    CHECK(std::find(plan.deleted_coordinates.begin(), plan.deleted_coordinates.end(), z) !=
          plan.deleted_coordinates.end());
  }
  CHECK_THROWS_AS(shortening_plan(5, 2, 10), std::invalid_argument);
}

TEST_CASE("single-level shortenings match the closed forms") {
  // For PRM(2,4): gamma = 1, 3, 6 give gamma' = 1, 4, 11 and
  // gamma = 2, 5, 9 give gamma' = 2, 7, 18.
  const std::pair<uint64_t, uint64_t> cases[] = {{1, 1}, {3, 4}, {6, 11}, {2, 2}, {5, 7}, {9, 18}};
  for (auto [gamma, want] : cases) CHECK(shortening_plan(5, 2, gamma).gamma_prime == want);
}

TEST_CASE("gamma' is strictly monotone and matches enumeration everywhere") {
  for (int m = 2; m <= 8; ++m) {
    for (int r = 1; r < m; ++r) {
      uint64_t prev = 0;
      for (uint64_t gamma = 0; gamma < binom(m, m - r); ++gamma) {
        // shortening_plan cross-checks enumeration against the closed form
        // internally and throws on disagreement.
        ShorteningPlan plan = shortening_plan(m, r, gamma);
        if (gamma > 0) CHECK(plan.gamma_prime > prev);
        prev = plan.gamma_prime;
      }
    }
  }
}

TEST_CASE("build_sprm reference parameters") {
  PirCode code = build_sprm(5, 2, 4);
  CHECK(code.n() == 21);
  CHECK(code.k() == 6);
  CHECK(code.tau() == 8);
  CHECK(check_pir_invariants(code, false) == "");
}

TEST_CASE("gamma = 0 shortening is the identity") {
  CHECK(same_code(build_sprm(5, 2, 0), build_prm(5, 2)));
}

TEST_CASE("full-level shortening lands on the next smaller code's parameters") {
  // gamma = binom(m-1, ell-1) reduces (n, k) to those of the code with one
  // fewer variable and degree r - 1.
  for (int m = 3; m <= 6; ++m) {
    for (int ell = 1; ell < m - 1; ++ell) {
      int r = m - ell;
      PirCode small = build_sprm(m, r, binom(m - 1, ell - 1));
      PrmParams want = prm_params(m - 1, r - 1);
      CHECK(static_cast<uint64_t>(small.n()) == want.n);
      CHECK(static_cast<uint64_t>(small.k()) == want.k);
    }
  }
}

TEST_CASE("plan-based and column-based shortening agree") {
  // The combinatorial deletion criterion and the forced-zero-column
  // criterion pick the same coordinates on every plan.
  for (int m = 2; m <= 6; ++m) {
    for (int r = 1; r < m; ++r) {
      PirCode prm = build_prm(m, r);
      for (uint64_t gamma = 1; gamma < binom(m, m - r); ++gamma) {
        ShorteningPlan plan = shortening_plan(m, r, gamma);
        std::vector<int> zeroed;
        for (const SubsetMask& z : plan.zeroed_messages) {
          zeroed.push_back(static_cast<int>(colex_rank(z)));
        }
        CHECK(same_code(build_sprm(m, r, gamma), arbitrary_shorten(prm, zeroed)));
      }
    }
  }
}

TEST_CASE("arbitrary shortening of the (11, 6) code by one symbol") {
  PirCode code = build_prm(4, 2);
  int a12 = static_cast<int>(colex_rank(SubsetMask::of({1, 2}, 4)));
  PirCode shortened = arbitrary_shorten(code, {a12});
  CHECK(shortened.n() == 10);
  CHECK(shortened.k() == 5);
  CHECK(shortened.tau() == 4);
  // Only the {1,2} column is forced to zero; every {1,2,x} coordinate
  // survives through its other pairs.
  for (const SubsetMask& s : shortened.coordinates) CHECK(s.bits != SubsetMask::of({1, 2}, 4).bits);
  CHECK(shortened.coordinates.size() == 10);
  CHECK(check_pir_invariants(shortened, false) == "");
}

TEST_CASE("shortening by nothing is the identity") {
  PirCode code = build_prm(4, 2);
  CHECK(same_code(arbitrary_shorten(code, {}), code));
}

TEST_CASE("random shortenings keep tau disjoint recovery sets") {
  std::mt19937_64 rng(17);
  PirCode code = build_prm(5, 2);  // (26, 10) code with tau = 8
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> msgs;
    for (int i = 0; i < code.k(); ++i) {
      if (rng() % 3 == 0) msgs.push_back(i);
    }
    if (static_cast<int>(msgs.size()) == code.k()) msgs.pop_back();
    PirCode shortened = arbitrary_shorten(code, msgs);
    CHECK(shortened.tau() == code.tau());
    CHECK(check_pir_invariants(shortened, false) == "");
  }
  CHECK_THROWS_AS(arbitrary_shorten(code, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9}), std::invalid_argument);
}

TEST_CASE("puncturing trades one coordinate for one recovery set") {
  PirCode code = build_prm(4, 2);
  PirCode punctured = puncture(code);
  CHECK(punctured.n() == 10);
  CHECK(punctured.k() == 6);
  CHECK(punctured.tau() == 3);
  for (int i = 0; i < punctured.k(); ++i) {
    CHECK(punctured.recovery[i].size() == 3);
  }
  CHECK(check_pir_invariants(punctured, false) == "");
}

TEST_CASE("puncturing the single-parity code leaves the identity code") {
  PirCode parity = build_prm(5, 4);  // (6, 5) single parity check
  PirCode punctured = puncture(parity);
  CHECK(punctured.n() == 5);
  CHECK(punctured.tau() == 1);
  for (int i = 0; i < punctured.k(); ++i) {
    REQUIRE(punctured.recovery[i].size() == 1);
    CHECK(punctured.recovery[i][0] == std::vector<int>{i});
  }
  CHECK_THROWS_AS(puncture(punctured), std::invalid_argument);
}

TEST_CASE("punctured shortened codes reach n = k + m") {
  // tau = 4 constructions have n = k + m + 1; one puncture gives k + m.
  for (int m = 3; m <= 6; ++m) {
    for (uint64_t gamma = 0; gamma + 1 < binom(m, 2); ++gamma) {
      PirCode code = build_sprm(m, m - 2, gamma);
      uint64_t k = binom(m, 2) - gamma;
      if (gamma <= static_cast<uint64_t>(m - 2)) {
        CHECK(static_cast<uint64_t>(code.n()) == k + m + 1);
      }
      PirCode punctured = puncture(code);
      CHECK(punctured.n() == code.n() - 1);
      CHECK(punctured.tau() == 3);
      CHECK(check_pir_invariants(punctured, false) == "");
    }
  }
}
