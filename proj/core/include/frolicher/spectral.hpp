#pragma once

#include <vector>

#include "frolicher/bicomplex.hpp"

namespace frolicher {

// Dimensions h_r^{p,q} of page r of the spectral sequence of the column
// filtration F^p = sum over s >= p of the (s, *) columns.
struct PageTable {
  int r = 1;
  IntGrid grid;

  friend bool operator==(const PageTable&, const PageTable&) = default;
};

// Index of a page guaranteed to equal E_infinity: min(p_max, q_max) + 2.
// d_r has zero source or target once r exceeds min(p_max, q_max + 1).
int stable_page_index(const DoubleComplex& k);

// Reference route: E_r^p = Z_r^p / (Z_{r-1}^{p+1} + d Z_{r-1}^{p-r+1}) with
// Z_r^p = {x in F^p : dx in F^{p+r}}, evaluated on the total complex.
// `threads` > 1 evaluates spots concurrently; the output does not depend on it.
std::vector<PageTable> pages_filtration(const DoubleComplex& k, int r_max,
                                        unsigned threads = 1);

// Zigzag route: E_r^{p,q} = X_r / (X_r ∩ Y_r), where X_r are the dbar-closed
// (p, q) classes admitting a chain alpha^{p+i, q-i} (i < r) with
// del alpha^{p+i-1, q-i+1} + dbar alpha^{p+i, q-i} = 0, and Y_r is spanned by
// del beta^{p-1, q} + dbar beta^{p, q-1} with beta^{p-1, q} extending to a
// chain beta^{p-i, q+i-1} (i < r) that is dbar-closed at its far end.
std::vector<PageTable> pages_explicit(const DoubleComplex& k, int r_max, unsigned threads = 1);

// Single-spot versions of the two routes. (p, q) must lie in the grid; r >= 1.
long long filtration_page_dim(const DoubleComplex& k, int r, int p, int q);
long long explicit_page_dim(const DoubleComplex& k, int r, int p, int q);

// Smallest r with E_r == E_{stable_page_index(k)}.
int degeneration_page(const DoubleComplex& k);

long long euler_char_of_page(const PageTable& t);

}  // namespace frolicher
