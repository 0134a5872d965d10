#pragma once

// Reference computations written independently of the library algorithms.

#include <cstddef>
#include <utility>
#include <vector>

#include "frolicher/rational_matrix.hpp"

namespace frolicher::testing {

// Textbook Gauss-Jordan over mpq with partial search for any nonzero pivot.
inline std::size_t naive_rank(const RationalMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && a[piv][c] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

// Brute-force admissibility straight from the three multiplicity inequalities
// and the optional h10 <= 1, without going through the constraint catalog.
struct Tuple {
  long long h10, h02, h11, alpha, beta;
};

inline bool brute_admissible(const Tuple& t, bool assume_a0) {
  const bool c_family = t.alpha <= t.h02 + 1;
  const bool d_family = t.beta <= t.h02;
  const bool h_family = t.h11 + t.alpha >= t.h02 + 1;
  const bool a0 = !assume_a0 || t.h10 <= 1;
  return c_family && d_family && h_family && a0;
}

inline std::vector<Tuple> brute_enumerate(long long bound, bool assume_a0, bool h11_zero) {
  std::vector<Tuple> out;
  for (long long a = 0; a <= bound; ++a)
    for (long long b = 0; b <= bound; ++b)
      for (long long c = 0; c <= bound; ++c)
        for (long long d = 0; d <= bound; ++d)
          for (long long e = 0; e <= bound; ++e) {
            const Tuple t{a, b, c, d, e};
            if (h11_zero && c != 0) continue;
            if (brute_admissible(t, assume_a0)) out.push_back(t);
          }
  return out;
}

}  // namespace frolicher::testing
