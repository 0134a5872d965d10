#include "frolicher/spectral.hpp"

#include <algorithm>
#include <stdexcept>

#include "frolicher/cohomology.hpp"
#include "parallel.hpp"

namespace frolicher {

int stable_page_index(const DoubleComplex& k) {
  return std::min(k.p_max(), k.q_max()) + 2;
}

long long euler_char_of_page(const PageTable& t) {
  long long chi = 0;
  for (int p = 0; p <= t.grid.p_max(); ++p)
    for (int q = 0; q <= t.grid.q_max(); ++q) chi += ((p + q) % 2 == 0 ? 1 : -1) * t.grid.at(p, q);
  return chi;
}

namespace {

long long to_ll(std::size_t v) { return static_cast<long long>(v); }

// ---------------------------------------------------------------------------
// Filtration route.

class FilteredTotalComplex {
 public:
  explicit FilteredTotalComplex(const DoubleComplex& k) {
    const int top = k.p_max() + k.q_max();
    for (int deg = -1; deg <= top + 1; ++deg) {
      layouts_.push_back(total_layout(k, deg));
      diffs_.push_back(total_differential(k, deg));
    }
  }

  const TotalDegreeLayout& layout(int deg) const { return layouts_.at(static_cast<std::size_t>(deg + 1)); }
  const RationalMatrix& d(int deg) const { return diffs_.at(static_cast<std::size_t>(deg + 1)); }

  // Basis (as columns in degree-`deg` coordinates) of
  // Z_r^p = {x in F^p : dx in F^{p+r}}.
  RationalMatrix cycles(int deg, int p, int r) const {
    const TotalDegreeLayout& src = layout(deg);
    const TotalDegreeLayout& dst = layout(deg + 1);
    const std::size_t start = first_offset_at_least(src, p);
    const std::size_t free_dim = src.size - start;
    const std::size_t rows = first_offset_at_least(dst, p + r);

    const RationalMatrix constraint = d(deg).row_block(0, rows).col_block(start, free_dim);
    const RationalMatrix kernel = nullspace(constraint);
    RationalMatrix embedded(src.size, kernel.cols());
    embedded.set_block(start, 0, kernel);
    return embedded;
  }

  long long page_dim(int r, int p, int q) const {
    const int deg = p + q;
    const RationalMatrix z = cycles(deg, p, r);
    const RationalMatrix lower = cycles(deg, p + 1, r - 1);
    const RationalMatrix boundaries = d(deg - 1) * cycles(deg - 1, p - r + 1, r - 1);
    return to_ll(z.cols()) - to_ll(rank(hstack(lower, boundaries)));
  }

 private:
  static std::size_t first_offset_at_least(const TotalDegreeLayout& layout, int s) {
    for (std::size_t i = 0; i < layout.columns.size(); ++i) {
      if (layout.columns[i] >= s) return layout.offset[i];
    }
    return layout.size;
  }

  std::vector<TotalDegreeLayout> layouts_;
  std::vector<RationalMatrix> diffs_;
};

// ---------------------------------------------------------------------------
// Explicit route: block linear systems over chains of bigraded pieces.

struct BlockTerm {
  std::size_t block;
  RationalMatrix map;
};

struct BlockEquation {
  std::size_t rows;
  std::vector<BlockTerm> terms;
};

RationalMatrix assemble(const std::vector<std::size_t>& block_sizes,
                        const std::vector<BlockEquation>& equations) {
  std::vector<std::size_t> col_offset(block_sizes.size() + 1, 0);
  for (std::size_t b = 0; b < block_sizes.size(); ++b) {
    col_offset[b + 1] = col_offset[b] + block_sizes[b];
  }
  std::size_t total_rows = 0;
  for (const auto& eq : equations) total_rows += eq.rows;

  RationalMatrix a(total_rows, col_offset.back());
  std::size_t row = 0;
  for (const auto& eq : equations) {
    for (const auto& term : eq.terms) {
      if (!term.map.empty()) a.set_block(row, col_offset[term.block], term.map);
    }
    row += eq.rows;
  }
  return a;
}

// Spanning set of X_r^{p,q}: the leading block of the solution space.
RationalMatrix explicit_cycles(const DoubleComplex& k, int r, int p, int q) {
  std::vector<std::size_t> sizes;
  for (int i = 0; i < r; ++i) sizes.push_back(k.dim(p + i, q - i));

  std::vector<BlockEquation> eqs;
  eqs.push_back({k.dim(p, q + 1), {{0, k.dbar(p, q)}}});
  for (int i = 1; i < r; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    eqs.push_back({k.dim(p + i, q - i + 1),
                   {{ui - 1, k.partial(p + i - 1, q - i + 1)}, {ui, k.dbar(p + i, q - i)}}});
  }
  return nullspace(assemble(sizes, eqs)).row_block(0, sizes[0]);
}

// Spanning set of Y_r^{p,q}.
RationalMatrix explicit_boundaries(const DoubleComplex& k, int r, int p, int q) {
  if (r == 1) return k.dbar(p, q - 1);

  // Block 0 is beta^{p, q-1}; block i >= 1 is beta^{p-i, q+i-1}.
  std::vector<std::size_t> sizes{k.dim(p, q - 1)};
  for (int i = 1; i < r; ++i) sizes.push_back(k.dim(p - i, q + i - 1));

  std::vector<BlockEquation> eqs;
  for (int i = 2; i < r; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    eqs.push_back({k.dim(p - i + 1, q + i - 1),
                   {{ui, k.partial(p - i, q + i - 1)}, {ui - 1, k.dbar(p - i + 1, q + i - 2)}}});
  }
  eqs.push_back({k.dim(p - r + 1, q + r - 1),
                 {{static_cast<std::size_t>(r - 1), k.dbar(p - r + 1, q + r - 2)}}});

  const RationalMatrix solutions = nullspace(assemble(sizes, eqs));
  const RationalMatrix image =
      assemble(sizes, {{k.dim(p, q), {{0, k.dbar(p, q - 1)}, {1, k.partial(p - 1, q)}}}});
  return image * solutions;
}

void check_r(int r) {
  if (r < 1) throw std::invalid_argument("page index must be >= 1");
}

template <typename SpotFn>
std::vector<PageTable> tabulate(const DoubleComplex& k, int r_max, unsigned threads,
                                SpotFn&& spot) {
  const auto rows = static_cast<std::size_t>(k.p_max() + 1);
  const auto cols = static_cast<std::size_t>(k.q_max() + 1);
  const std::size_t per_page = rows * cols;
  const std::size_t n = per_page * static_cast<std::size_t>(r_max);
  std::vector<long long> values(n, 0);
  detail::parallel_for(n, threads, [&](std::size_t idx) {
    const int r = static_cast<int>(idx / per_page) + 1;
    const int p = static_cast<int>((idx % per_page) / cols);
    const int q = static_cast<int>(idx % cols);
    values[idx] = spot(r, p, q);
  });

  std::vector<PageTable> pages;
  for (int r = 1; r <= r_max; ++r) {
    PageTable t{r, IntGrid(k.p_max(), k.q_max())};
    for (int p = 0; p <= k.p_max(); ++p)
      for (int q = 0; q <= k.q_max(); ++q)
        t.grid.set(p, q,
                   values[static_cast<std::size_t>(r - 1) * per_page +
                          static_cast<std::size_t>(p) * cols + static_cast<std::size_t>(q)]);
    pages.push_back(std::move(t));
  }
  return pages;
}

}  // namespace

long long filtration_page_dim(const DoubleComplex& k, int r, int p, int q) {
  check_r(r);
  require_valid(k);
  if (k.dim(p, q) == 0) return 0;
  return FilteredTotalComplex(k).page_dim(r, p, q);
}

long long explicit_page_dim(const DoubleComplex& k, int r, int p, int q) {
  check_r(r);
  require_valid(k);
  if (k.dim(p, q) == 0) return 0;
  const RationalMatrix x = explicit_cycles(k, r, p, q);
  const RationalMatrix y = explicit_boundaries(k, r, p, q);
  return to_ll(rank(hstack(x, y))) - to_ll(rank(y));
}

std::vector<PageTable> pages_filtration(const DoubleComplex& k, int r_max, unsigned threads) {
  check_r(r_max);
  require_valid(k);
  const FilteredTotalComplex total(k);
  return tabulate(k, r_max, threads, [&](int r, int p, int q) -> long long {
    if (k.dim(p, q) == 0) return 0;
    return total.page_dim(r, p, q);
  });
}

std::vector<PageTable> pages_explicit(const DoubleComplex& k, int r_max, unsigned threads) {
  check_r(r_max);
  require_valid(k);
  return tabulate(k, r_max, threads, [&](int r, int p, int q) -> long long {
    if (k.dim(p, q) == 0) return 0;
    const RationalMatrix x = explicit_cycles(k, r, p, q);
    const RationalMatrix y = explicit_boundaries(k, r, p, q);
    return to_ll(rank(hstack(x, y))) - to_ll(rank(y));
  });
}

int degeneration_page(const DoubleComplex& k) {
  const int last = stable_page_index(k);
  const std::vector<PageTable> pages = pages_explicit(k, last);
  for (int r = 1; r <= last; ++r) {
    if (pages[static_cast<std::size_t>(r - 1)].grid == pages.back().grid) return r;
  }
  return last;
}

}  // namespace frolicher
