#include "prmpir/gf2.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace prmpir {

namespace {

constexpr int kMinDistanceMaxRows = 24;
// Upper bound on the number of subspaces (row-reduced bases) the general
// ghw search will enumerate before refusing.
constexpr double kGhwLeafBudget = 2.0e8;

int popcount_words(std::span<const uint64_t> w) {
  int s = 0;
  for (uint64_t x : w) s += std::popcount(x);
  return s;
}

}  // namespace

Gf2Matrix::Gf2Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("Gf2Matrix: dimensions must be positive");
  data_.assign(static_cast<size_t>(rows_) * words_, 0);
}

Gf2Matrix Gf2Matrix::identity(int n) {
  Gf2Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Gf2Matrix Gf2Matrix::from_rows(const std::vector<std::string>& rows) {
  if (rows.empty()) throw std::invalid_argument("Gf2Matrix: no rows");
  Gf2Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows_; ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols_) {
      throw std::invalid_argument("Gf2Matrix: ragged rows");
    }
    for (int j = 0; j < m.cols_; ++j) {
      char c = rows[i][j];
      if (c != '0' && c != '1') throw std::invalid_argument("Gf2Matrix: row string must be 0/1");
      if (c == '1') m.set(i, j, 1);
    }
  }
  return m;
}

int Gf2Matrix::get(int i, int j) const {
  return static_cast<int>((data_[static_cast<size_t>(i) * words_ + j / 64] >> (j % 64)) & 1u);
}

void Gf2Matrix::set(int i, int j, int v) {
  uint64_t& w = data_[static_cast<size_t>(i) * words_ + j / 64];
  uint64_t mask = uint64_t{1} << (j % 64);
  if (v) w |= mask; else w &= ~mask;
}

void Gf2Matrix::xor_rows(int dst, int src) {
  uint64_t* d = &data_[static_cast<size_t>(dst) * words_];
  const uint64_t* s = &data_[static_cast<size_t>(src) * words_];
  for (int w = 0; w < words_; ++w) d[w] ^= s[w];
}

std::span<const uint64_t> Gf2Matrix::row_words(int i) const {
  return {&data_[static_cast<size_t>(i) * words_], static_cast<size_t>(words_)};
}

std::span<uint64_t> Gf2Matrix::row_words(int i) {
  return {&data_[static_cast<size_t>(i) * words_], static_cast<size_t>(words_)};
}

std::string Gf2Matrix::row_string(int i) const {
  std::string s(cols_, '0');
  for (int j = 0; j < cols_; ++j) s[j] = get(i, j) ? '1' : '0';
  return s;
}

std::vector<uint64_t> Gf2Matrix::column(int j) const {
  std::vector<uint64_t> col((rows_ + 63) / 64, 0);
  for (int i = 0; i < rows_; ++i) {
    if (get(i, j)) col[i / 64] |= uint64_t{1} << (i % 64);
  }
  return col;
}

bool Gf2Matrix::column_is_zero(int j) const {
  for (int i = 0; i < rows_; ++i) {
    if (get(i, j)) return false;
  }
  return true;
}

Gf2Matrix Gf2Matrix::select(const std::vector<int>& keep_rows, const std::vector<int>& keep_cols) const {
  Gf2Matrix out(static_cast<int>(keep_rows.size()), static_cast<int>(keep_cols.size()));
  for (size_t i = 0; i < keep_rows.size(); ++i) {
    for (size_t j = 0; j < keep_cols.size(); ++j) {
      out.set(static_cast<int>(i), static_cast<int>(j), get(keep_rows[i], keep_cols[j]));
    }
  }
  return out;
}

std::vector<uint8_t> Gf2Matrix::left_multiply(const std::vector<uint8_t>& v) const {
  if (static_cast<int>(v.size()) != rows_) {
    throw std::invalid_argument("left_multiply: length mismatch");
  }
  std::vector<uint64_t> acc(words_, 0);
  for (int i = 0; i < rows_; ++i) {
    if (v[i] & 1) {
      const uint64_t* r = &data_[static_cast<size_t>(i) * words_];
      for (int w = 0; w < words_; ++w) acc[w] ^= r[w];
    }
  }
  std::vector<uint8_t> out(cols_);
  for (int j = 0; j < cols_; ++j) out[j] = static_cast<uint8_t>((acc[j / 64] >> (j % 64)) & 1u);
  return out;
}

int rank(const Gf2Matrix& m) {
  Gf2Matrix work = m;
  int rnk = 0;
  for (int col = 0; col < work.cols() && rnk < work.rows(); ++col) {
    int pivot = -1;
    for (int i = rnk; i < work.rows(); ++i) {
      if (work.get(i, col)) { pivot = i; break; }
    }
    if (pivot < 0) continue;
    if (pivot != rnk) {
      for (int w = 0; w < work.words_per_row(); ++w) {
        std::swap(work.row_words(pivot)[w], work.row_words(rnk)[w]);
      }
    }
    for (int i = 0; i < work.rows(); ++i) {
      if (i != rnk && work.get(i, col)) work.xor_rows(i, rnk);
    }
    ++rnk;
  }
  return rnk;
}

namespace {

void require_full_rank_generator(const Gf2Matrix& g, const char* what) {
  if (rank(g) != g.rows()) {
    throw std::invalid_argument(std::string(what) + ": generator must have full row rank");
  }
}

// Walks all 2^k - 1 nonzero messages in Gray-code order, invoking visit with
// the packed codeword of each.
template <typename Visit>
void for_each_nonzero_codeword(const Gf2Matrix& g, Visit&& visit) {
  const int k = g.rows();
  const int words = g.words_per_row();
  std::vector<uint64_t> cw(words, 0);
  const uint64_t total = uint64_t{1} << k;
  for (uint64_t idx = 1; idx < total; ++idx) {
    int flip = std::countr_zero(idx);  // bit that changes between successive Gray codes
    const uint64_t* r = g.row_words(flip).data();
    for (int w = 0; w < words; ++w) cw[w] ^= r[w];
    visit(std::span<const uint64_t>(cw.data(), words));
  }
}

int min_distance_impl(const Gf2Matrix& g) {
  int best = g.cols() + 1;
  for_each_nonzero_codeword(g, [&](std::span<const uint64_t> cw) {
    int w = popcount_words(cw);
    if (w < best) best = w;
  });
  return best;
}

// Exact d_2 search: enumerate all nonzero codewords sorted by weight and scan
// pairs, skipping any pair whose support is provably no better than the best
// found so far (|supp| = (w_a + w_b + w(a^b)) / 2 >= (w_a + w_b + d1) / 2).
int ghw_pair_search(const Gf2Matrix& g) {
  const int k = g.rows();
  const int words = g.words_per_row();
  const uint64_t count = (uint64_t{1} << k) - 1;
  if (count * words > (uint64_t{1} << 27)) {
    throw std::runtime_error("ghw: codeword table too large for brute force");
  }

  std::vector<uint64_t> store(count * words);
  std::vector<uint32_t> weight(count);
  uint64_t pos = 0;
  for_each_nonzero_codeword(g, [&](std::span<const uint64_t> cw) {
    std::copy(cw.begin(), cw.end(), store.begin() + pos * words);
    weight[pos] = static_cast<uint32_t>(popcount_words(cw));
    ++pos;
  });

  std::vector<uint32_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](uint32_t a, uint32_t b) { return weight[a] < weight[b]; });

  const int d1 = static_cast<int>(weight[order[0]]);
  int best = g.cols() + 1;
  for (uint64_t a = 0; a + 1 < count; ++a) {
    int wa = weight[order[a]];
    if ((2 * wa + d1 + 1) / 2 >= best) break;
    const uint64_t* ca = &store[static_cast<uint64_t>(order[a]) * words];
    for (uint64_t b = a + 1; b < count; ++b) {
      int wb = weight[order[b]];
      if ((wa + wb + d1 + 1) / 2 >= best) break;
      const uint64_t* cb = &store[static_cast<uint64_t>(order[b]) * words];
      int wx = 0;
      for (int w = 0; w < words; ++w) wx += std::popcount(ca[w] ^ cb[w]);
      int supp = (wa + wb + wx) / 2;
      if (supp < best) best = supp;
    }
  }
  return best;
}

// Number of i-dimensional subspaces of F_2^k (Gaussian binomial), saturated
// at the brute-force budget.
double gaussian_binom_approx(int k, int i) {
  double v = 1.0;
  for (int j = 0; j < i; ++j) {
    v *= (std::pow(2.0, k - j) - 1.0) / (std::pow(2.0, i - j) - 1.0);
    if (v > 64 * kGhwLeafBudget) return v;
  }
  return v;
}

// Depth-first enumeration of all i-dimensional subcodes via row-reduced
// bases: pick pivot columns, then walk each row's free bits in Gray order so
// the row's codeword updates with a single row XOR.
class GhwSearch {
 public:
  GhwSearch(const Gf2Matrix& g, int dim)
      : g_(g), k_(g.rows()), dim_(dim), words_(g.words_per_row()),
        pivots_(dim), frees_(dim), row_cw_(dim, std::vector<uint64_t>(words_)),
        prefix_(dim + 1, std::vector<uint64_t>(words_, 0)), best_(g.cols() + 1) {}

  int run() {
    choose_pivot(0, 0);
    return best_;
  }

 private:
  void choose_pivot(int depth, int from) {
    if (depth == dim_) {
      // Free positions per row: columns right of the row's pivot that are
      // not pivots of later rows. Fixed for the whole fill below.
      for (int d = 0; d < dim_; ++d) {
        frees_[d].clear();
        int next = d + 1;
        for (int q = pivots_[d] + 1; q < k_; ++q) {
          if (next < dim_ && pivots_[next] == q) { ++next; continue; }
          frees_[d].push_back(q);
        }
      }
      fill_row(0);
      return;
    }
    for (int p = from; p <= k_ - (dim_ - depth); ++p) {
      pivots_[depth] = p;
      choose_pivot(depth + 1, p + 1);
    }
  }

  void fill_row(int depth) {
    if (depth == dim_) {
      int w = popcount_words(prefix_[dim_]);
      if (w < best_) best_ = w;
      return;
    }
    auto& cw = row_cw_[depth];
    std::copy(g_.row_words(pivots_[depth]).begin(), g_.row_words(pivots_[depth]).end(), cw.begin());
    const std::vector<int>& frees = frees_[depth];
    const uint64_t variants = uint64_t{1} << frees.size();
    for (uint64_t s = 0;; ++s) {
      for (int w = 0; w < words_; ++w) prefix_[depth + 1][w] = prefix_[depth][w] | cw[w];
      fill_row(depth + 1);
      if (s + 1 >= variants) break;
      int flip = std::countr_zero(s + 1);
      const uint64_t* r = g_.row_words(frees[flip]).data();
      for (int w = 0; w < words_; ++w) cw[w] ^= r[w];
    }
  }

  const Gf2Matrix& g_;
  int k_, dim_, words_;
  std::vector<int> pivots_;
  std::vector<std::vector<int>> frees_;
  std::vector<std::vector<uint64_t>> row_cw_;
  std::vector<std::vector<uint64_t>> prefix_;
  int best_;
};

}  // namespace

int min_distance(const Gf2Matrix& g) {
  require_full_rank_generator(g, "min_distance");
  if (g.rows() > kMinDistanceMaxRows) {
    throw std::runtime_error("min_distance: dimension too large for brute force");
  }
  return min_distance_impl(g);
}

int ghw(const Gf2Matrix& g, int i) {
  require_full_rank_generator(g, "ghw");
  const int k = g.rows();
  if (i < 1 || i > k) throw std::invalid_argument("ghw: subcode dimension out of range");

  if (i == k) {
    // Single subcode: the whole code. Its support is the union of the row
    // supports.
    std::vector<uint64_t> acc(g.words_per_row(), 0);
    for (int r = 0; r < k; ++r) {
      auto row = g.row_words(r);
      for (int w = 0; w < g.words_per_row(); ++w) acc[w] |= row[w];
    }
    return popcount_words(acc);
  }
  if (i == 1) {
    if (k > kMinDistanceMaxRows) {
      throw std::runtime_error("ghw: dimension too large for brute force");
    }
    return min_distance_impl(g);
  }
  if (i == 2) {
    if (k > kMinDistanceMaxRows) {
      throw std::runtime_error("ghw: dimension too large for brute force");
    }
    return ghw_pair_search(g);
  }
  if (gaussian_binom_approx(k, i) > kGhwLeafBudget) {
    throw std::runtime_error("ghw: subspace count too large for brute force");
  }
  return GhwSearch(g, i).run();
}

}  // namespace prmpir
