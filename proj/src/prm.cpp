#include "prmpir/prm.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace prmpir {

namespace {

constexpr uint64_t kMaxBlockLength = uint64_t{1} << 20;

void check_spec(int m, int r) {
  if (r < 1 || r > m) throw std::invalid_argument("prm: need 1 <= r <= m");
}

std::unordered_map<uint32_t, int> index_by_mask(const std::vector<SubsetMask>& coords) {
  std::unordered_map<uint32_t, int> idx;
  idx.reserve(coords.size());
  for (size_t j = 0; j < coords.size(); ++j) idx.emplace(coords[j].bits, static_cast<int>(j));
  return idx;
}

}  // namespace

PrmParams prm_params(int m, int r) {
  check_spec(m, r);
  PrmParams p;
  p.k = binom(m, r);
  for (int i = r; i <= m; ++i) p.n += binom(m, i);
  p.tau = uint64_t{1} << (m - r);
  return p;
}

std::vector<std::vector<int>> recovery_sets(int m, int r, const SubsetMask& R,
                                            const std::vector<SubsetMask>& coords) {
  check_spec(m, r);
  if (R.weight() != r) throw std::invalid_argument("recovery_sets: |R| must equal r");
  auto idx = index_by_mask(coords);

  std::vector<std::vector<int>> sets;
  const uint32_t comp = SubsetMask::full_set(m).bits & ~R.bits;
  // Subsets S of the complement in increasing bitmask order; S = {} first.
  for (uint32_t s = 0;; s = (s - comp) & comp) {
    SubsetMask S(s, m);
    std::vector<int> one;
    for (uint32_t t = R.bits;; t = (t - 1) & R.bits) {
      SubsetMask point(t | s, m);
      if (point.weight() >= r) {
        auto it = idx.find(point.bits);
        if (it != idx.end()) one.push_back(it->second);
      }
      if (t == 0) break;
    }
    std::sort(one.begin(), one.end());
    sets.push_back(std::move(one));
    if (s == comp) break;
  }
  return sets;
}

PirCode build_prm(int m, int r) {
  check_spec(m, r);
  PrmParams params = prm_params(m, r);
  if (params.n > kMaxBlockLength) {
    throw std::invalid_argument("build_prm: block length exceeds 2^20 guard");
  }
  const int n = static_cast<int>(params.n);
  const int k = static_cast<int>(params.k);

  PirCode code{CodeSpec{m, r, 0}, {}, Gf2Matrix(k, n), {}, 1 << (m - r)};

  // Coordinates: all weight >= r subsets of [m], weight ascending and colex
  // within weight, so the weight-r block leads and matches message order.
  code.coordinates.reserve(n);
  for (int w = r; w <= m; ++w) {
    uint64_t cnt = binom(m, w);
    for (uint64_t idx = 0; idx < cnt; ++idx) code.coordinates.push_back(colex_unrank(idx, w, m));
  }

  // Row R, column S: 1 iff R is a subset of S.
  for (int i = 0; i < k; ++i) {
    const SubsetMask& R = code.coordinates[i];
    for (int j = 0; j < n; ++j) {
      if (R.subset_of(code.coordinates[j])) code.generator.set(i, j, 1);
    }
  }

  code.recovery.reserve(k);
  for (int i = 0; i < k; ++i) {
    code.recovery.push_back(recovery_sets(m, r, code.coordinates[i], code.coordinates));
  }
  return code;
}

std::vector<uint8_t> encode(const PirCode& code, const std::vector<uint8_t>& msg) {
  if (static_cast<int>(msg.size()) != code.k()) {
    throw std::invalid_argument("encode: message length must equal k");
  }
  return code.generator.left_multiply(msg);
}

int retrieve(const PirCode& code, const std::vector<uint8_t>& codeword, int i, int t) {
  if (static_cast<int>(codeword.size()) != code.n()) {
    throw std::invalid_argument("retrieve: codeword length must equal n");
  }
  if (i < 0 || i >= code.k()) throw std::out_of_range("retrieve: message index");
  if (t < 0 || t >= static_cast<int>(code.recovery[i].size())) {
    throw std::out_of_range("retrieve: recovery-set index");
  }
  int bit = 0;
  for (int j : code.recovery[i][t]) bit ^= codeword[j] & 1;
  return bit;
}

}  // namespace prmpir
