#include "frolicher/rational_matrix.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace frolicher {

namespace {

bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

bool is_unsigned_literal(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  if (!is_integer_literal(num)) {
    throw std::invalid_argument("malformed rational '" + text + "'");
  }
  mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
  mpz_class d = 1;
  if (slash != std::string::npos) {
    const std::string den = text.substr(slash + 1);
    if (!is_unsigned_literal(den)) {
      throw std::invalid_argument("malformed rational '" + text + "'");
    }
    d = mpz_class(den, 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  }
  Rational value(n, d);
  value.canonicalize();
  return value;
}

std::string format_rational(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(
    std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Rational>> converted;
  for (const auto& row : rows) {
    std::vector<Rational> r;
    for (long v : row) r.emplace_back(v);
    converted.push_back(std::move(r));
  }
  return from_rows(converted);
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  RationalMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) {
      m(i, j) = rows[i][j];
      m(i, j).canonicalize();
    }
  }
  return m;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RationalMatrix RationalMatrix::row_block(std::size_t first, std::size_t count) const {
  if (first + count > rows_) throw std::out_of_range("row_block");
  RationalMatrix b(count, cols_);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < cols_; ++j) b(i, j) = (*this)(first + i, j);
  return b;
}

RationalMatrix RationalMatrix::col_block(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw std::out_of_range("col_block");
  RationalMatrix b(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) b(i, j) = (*this)(i, first + j);
  return b;
}

void RationalMatrix::set_block(std::size_t row, std::size_t col, const RationalMatrix& block) {
  if (row + block.rows() > rows_ || col + block.cols() > cols_) {
    throw std::out_of_range("set_block");
  }
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j) (*this)(row + i, col + j) = block(i, j);
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  RationalMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j) != 0) c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw std::invalid_argument("matrix sum shape mismatch");
  }
  RationalMatrix c(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = a.data_[k] + b.data_[k];
  return c;
}

RationalMatrix operator-(const RationalMatrix& a) {
  RationalMatrix c(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = -a.data_[k];
  return c;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RationalMatrix hstack(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  RationalMatrix m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

RationalMatrix vstack(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
  RationalMatrix m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

RationalMatrix block_diagonal(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

IntegerEchelon fraction_free_echelon(const RationalMatrix& m) {
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();

  std::vector<std::vector<mpz_class>> a(nr, std::vector<mpz_class>(nc));
  for (std::size_t i = 0; i < nr; ++i) {
    mpz_class scale = 1;
    for (std::size_t j = 0; j < nc; ++j) {
      if (m(i, j) != 0) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).get_den_mpz_t());
    }
    for (std::size_t j = 0; j < nc; ++j) {
      if (m(i, j) != 0) a[i][j] = m(i, j).get_num() * (scale / m(i, j).get_den());
    }
  }

  IntegerEchelon out;
  out.cols = nc;
  mpz_class prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < nc && row < nr; ++col) {
    std::size_t pivot = row;
    while (pivot < nr && a[pivot][col] == 0) ++pivot;
    if (pivot == nr) continue;
    std::swap(a[row], a[pivot]);

    const mpz_class& piv = a[row][col];
    for (std::size_t i = row + 1; i < nr; ++i) {
      const mpz_class lead = a[i][col];
      for (std::size_t j = col + 1; j < nc; ++j) {
        mpz_class v = piv * a[i][j] - lead * a[row][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(v);
      }
      a[i][col] = 0;
    }
    prev = piv;
    out.pivot_cols.push_back(col);
    ++row;
  }
  a.resize(row);
  out.rows = std::move(a);
  return out;
}

std::size_t rank(const RationalMatrix& m) {
  if (m.empty()) return 0;
  return fraction_free_echelon(m).pivot_cols.size();
}

RationalMatrix nullspace(const RationalMatrix& m) {
  const std::size_t n = m.cols();
  const IntegerEchelon ech = fraction_free_echelon(m);
  const std::size_t k = ech.pivot_cols.size();

  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : ech.pivot_cols) is_pivot[c] = true;

  RationalMatrix basis(n, n - k);
  std::size_t out_col = 0;
  std::vector<Rational> x(n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::fill(x.begin(), x.end(), Rational(0));
    x[free] = 1;
    for (std::size_t i = k; i-- > 0;) {
      const std::size_t pc = ech.pivot_cols[i];
      Rational acc = 0;
      for (std::size_t j = pc + 1; j < n; ++j) {
        if (ech.rows[i][j] != 0 && x[j] != 0) acc += Rational(ech.rows[i][j]) * x[j];
      }
      x[pc] = -acc / Rational(ech.rows[i][pc]);
    }
    for (std::size_t j = 0; j < n; ++j) basis(j, out_col) = x[j];
    ++out_col;
  }
  return basis;
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::domain_error("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix a = hstack(m, RationalMatrix::identity(n));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) throw std::domain_error("singular matrix");
    if (pivot != col) {
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(a(pivot, j), a(col, j));
    }
    const Rational inv = 1 / a(col, col);
    for (std::size_t j = 0; j < 2 * n; ++j) a(col, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      const Rational f = a(i, col);
      for (std::size_t j = 0; j < 2 * n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return a.col_block(n, n);
}

}  // namespace frolicher
