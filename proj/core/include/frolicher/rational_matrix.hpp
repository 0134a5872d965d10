#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace frolicher {

using Rational = mpq_class;

// Parses "n" or "n/d" (optional leading '-') into a canonical rational.
// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

// "n" for integers, "n/d" otherwise, always in lowest terms with d > 0.
std::string format_rational(const Rational& value);

// Dense row-major matrix over Q. A linear map is stored target-dim x source-dim
// and acts on column vectors.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(
      std::initializer_list<std::initializer_list<long>> rows);
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  bool is_zero() const;
  RationalMatrix transpose() const;

  // Rows [first, first + count) and columns [first, first + count).
  RationalMatrix row_block(std::size_t first, std::size_t count) const;
  RationalMatrix col_block(std::size_t first, std::size_t count) const;

  // Copies `block` into this matrix with its top-left corner at (row, col).
  void set_block(std::size_t row, std::size_t col, const RationalMatrix& block);

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// [a | b]; row counts must agree.
RationalMatrix hstack(const RationalMatrix& a, const RationalMatrix& b);
// [a ; b]; column counts must agree.
RationalMatrix vstack(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix block_diagonal(const RationalMatrix& a, const RationalMatrix& b);

// Row echelon form produced by fraction-free (Bareiss) elimination. Each row
// is first scaled by the lcm of its denominators, so the echelon rows are
// integral. Pivot choice is deterministic: for each column in order, the first
// remaining row with a nonzero entry.
struct IntegerEchelon {
  std::size_t cols = 0;
  std::vector<std::vector<mpz_class>> rows;  // one entry per pivot
  std::vector<std::size_t> pivot_cols;       // strictly increasing
};

IntegerEchelon fraction_free_echelon(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

// Basis of ker(m) as the columns of a cols(m) x nullity matrix. Basis vectors
// have a 1 in their free coordinate and 0 in the other free coordinates.
RationalMatrix nullspace(const RationalMatrix& m);

// Throws std::domain_error if m is not square and invertible.
RationalMatrix inverse(const RationalMatrix& m);

}  // namespace frolicher
