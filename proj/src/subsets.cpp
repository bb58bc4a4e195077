#include "prmpir/subsets.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace prmpir {

namespace {
constexpr int kMaxUniverse = 31;
}

SubsetMask::SubsetMask(uint32_t bits_, int m_) : bits(bits_), m(m_) {
  if (m_ < 0 || m_ > kMaxUniverse) {
    throw std::invalid_argument("SubsetMask: universe size out of range");
  }
  if ((bits_ >> m_) != 0) {
    throw std::invalid_argument("SubsetMask: bit set beyond universe");
  }
}

SubsetMask SubsetMask::of(std::initializer_list<int> elems, int m) {
  return of(std::vector<int>(elems), m);
}

SubsetMask SubsetMask::of(const std::vector<int>& elems, int m) {
  uint32_t bits = 0;
  for (int e : elems) {
    if (e < 1 || e > m) throw std::invalid_argument("SubsetMask: element out of range");
    bits |= uint32_t{1} << (e - 1);
  }
  return SubsetMask(bits, m);
}

SubsetMask SubsetMask::full_set(int m) {
  if (m < 0 || m > kMaxUniverse) throw std::invalid_argument("SubsetMask: universe size out of range");
  return SubsetMask(m == 0 ? 0 : (uint32_t{1} << m) - 1, m);
}

int SubsetMask::weight() const { return std::popcount(bits); }

bool SubsetMask::contains(int e) const {
  return e >= 1 && e <= m && ((bits >> (e - 1)) & 1u) != 0;
}

bool SubsetMask::subset_of(const SubsetMask& other) const {
  return (bits & ~other.bits) == 0;
}

SubsetMask SubsetMask::without(int e) const {
  SubsetMask out = *this;
  if (e >= 1 && e <= m) out.bits &= ~(uint32_t{1} << (e - 1));
  return out;
}

SubsetMask SubsetMask::with(int e) const {
  if (e < 1 || e > m) throw std::invalid_argument("SubsetMask: element out of range");
  SubsetMask out = *this;
  out.bits |= uint32_t{1} << (e - 1);
  return out;
}

SubsetMask SubsetMask::unite(const SubsetMask& other) const {
  return SubsetMask(bits | other.bits, std::max(m, other.m));
}

SubsetMask SubsetMask::complement() const {
  return SubsetMask(full_set(m).bits & ~bits, m);
}

std::vector<int> SubsetMask::elements() const {
  std::vector<int> out;
  out.reserve(weight());
  for (uint32_t b = bits; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b) + 1);
  }
  return out;
}

std::string SubsetMask::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int e : elements()) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  os << '}';
  return os.str();
}

std::string SubsetMask::support_string() const {
  std::string s(m, '0');
  for (int e : elements()) s[e - 1] = '1';
  return s;
}

bool canonical_less(const SubsetMask& a, const SubsetMask& b) {
  int wa = a.weight(), wb = b.weight();
  if (wa != wb) return wa < wb;
  return a.bits < b.bits;
}

uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // result * (n-k+i) is always divisible by i at this point.
    uint64_t factor = static_cast<uint64_t>(n - k + i);
    if (result > UINT64_MAX / factor) throw std::overflow_error("binom: value exceeds 64 bits");
    result = result * factor / i;
  }
  return result;
}

uint64_t colex_rank(const SubsetMask& s) {
  uint64_t rank = 0;
  int j = 0;
  for (int e : s.elements()) {
    ++j;
    rank += binom(e - 1, j);
  }
  return rank;
}

SubsetMask colex_unrank(uint64_t idx, int size, int m) {
  if (size < 0 || size > m) throw std::invalid_argument("colex_unrank: size out of range");
  if (idx >= binom(m, size)) throw std::out_of_range("colex_unrank: index out of range");
  SubsetMask out = SubsetMask::empty_set(m);
  uint64_t rem = idx;
  for (int j = size; j >= 1; --j) {
    // Largest e with binom(e-1, j) <= rem; elements stay strictly decreasing.
    int e = j;
    while (e + 1 <= m && binom(e, j) <= rem) ++e;
    out = out.with(e);
    rem -= binom(e - 1, j);
  }
  return out;
}

std::vector<SubsetMask> subsets_of(const SubsetMask& s, int min_size) {
  std::vector<SubsetMask> out;
  // Standard submask walk, then canonical sort.
  uint32_t sub = s.bits;
  while (true) {
    SubsetMask t(sub, s.m);
    if (t.weight() >= min_size) out.push_back(t);
    if (sub == 0) break;
    sub = (sub - 1) & s.bits;
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace prmpir
