#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace prmpir {

// Dense binary matrix with rows packed into 64-bit words. Bit j of row i is
// entry (i, j); unused bits past cols() in the last word stay zero.
class Gf2Matrix {
 public:
  Gf2Matrix(int rows, int cols);
  static Gf2Matrix identity(int n);
  // One string per row, leftmost character = column 0.
  static Gf2Matrix from_rows(const std::vector<std::string>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int words_per_row() const { return words_; }

  int get(int i, int j) const;
  void set(int i, int j, int v);
  void xor_rows(int dst, int src);

  std::span<const uint64_t> row_words(int i) const;
  std::span<uint64_t> row_words(int i);
  std::string row_string(int i) const;

  // Column j as a packed bit vector over rows (bit i = entry (i, j)).
  std::vector<uint64_t> column(int j) const;
  bool column_is_zero(int j) const;

  // Submatrix keeping the given rows/columns, in the given order.
  Gf2Matrix select(const std::vector<int>& keep_rows, const std::vector<int>& keep_cols) const;

  // v (length rows) times this matrix; result has length cols.
  std::vector<uint8_t> left_multiply(const std::vector<uint8_t>& v) const;

  friend bool operator==(const Gf2Matrix& a, const Gf2Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_, cols_, words_;
  std::vector<uint64_t> data_;
};

// GF(2) row rank via Gaussian elimination.
int rank(const Gf2Matrix& m);

// Minimum Hamming weight over all nonzero codewords of the code generated by
// the rows of g. Requires full row rank and rows <= 24 (exhaustive search);
// throws std::runtime_error beyond the guard.
int min_distance(const Gf2Matrix& g);

// i-th generalized Hamming weight: minimum support-set size over all
// i-dimensional subcodes, by exhaustive enumeration of subcodes (row-reduced
// bases are enumerated once each, so no subspace is counted twice). Throws
// std::runtime_error when the search space exceeds the brute-force budget.
int ghw(const Gf2Matrix& g, int i);

}  // namespace prmpir
