#pragma once

// Deterministic generators of valid double complexes for property tests, and
// an axiom check that does not go through frolicher::validate.

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "frolicher/bicomplex.hpp"
#include "frolicher/zigzag.hpp"

namespace frolicher::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Rational small_rational(Rng& rng, bool nonzero) {
  static const int nums[] = {-3, -2, -1, 0, 1, 2, 3};
  static const int dens[] = {1, 1, 1, 2, 3};
  int n = 0;
  do {
    n = nums[uniform(rng, 0, 6)];
  } while (nonzero && n == 0);
  Rational r(n, dens[uniform(rng, 0, 4)]);
  r.canonicalize();
  return r;
}

// Random alternating walk of at most `max_len` dots inside the grid.
inline std::vector<BiDegree> random_walk(Rng& rng, const Grid& g, int max_len) {
  std::vector<BiDegree> path{{uniform(rng, 0, g.p_max), uniform(rng, 0, g.q_max)}};
  bool ascend = uniform(rng, 0, 1) == 1;
  const int len = uniform(rng, 1, max_len);
  while (static_cast<int>(path.size()) < len) {
    std::vector<BiDegree> options;
    const int s = ascend ? 1 : -1;
    for (BiDegree step : {BiDegree{s, 0}, BiDegree{0, s}}) {
      BiDegree next{path.back().p + step.p, path.back().q + step.q};
      if (next.p < 0 || next.q < 0 || next.p > g.p_max || next.q > g.q_max) continue;
      if (std::find(path.begin(), path.end(), next) != path.end()) continue;
      options.push_back(next);
    }
    if (options.empty()) break;
    path.push_back(options[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(options.size()) - 1))]);
    ascend = !ascend;
  }
  return path;
}

inline ZigzagMultiset random_multiset(Rng& rng, const Grid& g, int pieces, int max_len,
                                      int max_dim) {
  ZigzagMultiset m;
  IntGrid load(g.p_max, g.q_max);
  for (int i = 0; i < pieces; ++i) {
    const ZigzagShape s = canonicalize_shape(random_walk(rng, g, max_len));
    const bool fits = std::all_of(s.dots().begin(), s.dots().end(), [&](const BiDegree& d) {
      return load.at(d.p, d.q) < max_dim;
    });
    if (!fits) continue;
    for (const auto& d : s.dots()) load.add(d.p, d.q, 1);
    m.add(s);
  }
  return m;
}

// Random invertible n x n matrix: unit lower triangular times upper
// triangular with nonzero diagonal.
inline RationalMatrix random_invertible(Rng& rng, std::size_t n) {
  RationalMatrix lower = RationalMatrix::identity(n);
  RationalMatrix upper(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j < i) lower(i, j) = small_rational(rng, false);
      if (j > i) upper(i, j) = small_rational(rng, false);
    }
    upper(i, i) = small_rational(rng, true);
  }
  return lower * upper;
}

// Conjugates every map by a random change of basis at each spot.
inline DoubleComplex scramble(Rng& rng, const DoubleComplex& k) {
  std::vector<RationalMatrix> g, g_inv;
  auto idx = [&](int p, int q) { return static_cast<std::size_t>(p * (k.q_max() + 1) + q); };
  for (int p = 0; p <= k.p_max(); ++p)
    for (int q = 0; q <= k.q_max(); ++q) {
      g.push_back(random_invertible(rng, k.dim(p, q)));
      g_inv.push_back(inverse(g.back()));
    }
  DoubleComplex::MapTable h, v;
  for (int p = 0; p <= k.p_max(); ++p)
    for (int q = 0; q <= k.q_max(); ++q) {
      if (k.dim(p, q) == 0) continue;
      if (k.dim(p + 1, q) > 0) {
        RationalMatrix m = g[idx(p + 1, q)] * k.partial(p, q) * g_inv[idx(p, q)];
        if (!m.is_zero()) h.emplace(BiDegree{p, q}, std::move(m));
      }
      if (k.dim(p, q + 1) > 0) {
        RationalMatrix m = g[idx(p, q + 1)] * k.dbar(p, q) * g_inv[idx(p, q)];
        if (!m.is_zero()) v.emplace(BiDegree{p, q}, std::move(m));
      }
    }
  return DoubleComplex(k.dims(), std::move(h), std::move(v));
}

// Valid complex on a random grid up to (max_p, max_q): zigzags plus the
// occasional square, spot dimensions <= max_dim, then a random change of
// basis so that matrices are dense rationals.
inline DoubleComplex random_complex(Rng& rng, int max_p = 3, int max_q = 3, int max_dim = 4,
                                    int max_len = 6) {
  // Mostly full-size grids, with some degenerate ones mixed in.
  auto side = [&](int max) { return uniform(rng, 0, 3) == 0 ? uniform(rng, 0, max) : max; };
  const Grid g{side(max_p), side(max_q)};
  const int pieces = uniform(rng, 0, 20);
  ZigzagMultiset m = random_multiset(rng, g, pieces, max_len, max_dim);
  DoubleComplex k = synthesize(m, g);
  if (g.p_max >= 1 && g.q_max >= 1 && uniform(rng, 0, 2) == 0) {
    const int p = uniform(rng, 0, g.p_max - 1);
    const int q = uniform(rng, 0, g.q_max - 1);
    bool room = true;
    for (int dp = 0; dp < 2; ++dp)
      for (int dq = 0; dq < 2; ++dq) room = room && k.dims().at(p + dp, q + dq) < max_dim;
    if (room) k = direct_sum(k, realize_square(p, q, g));
  }
  return scramble(rng, k);
}

// d^2 = 0 on the total complex, assembled here independently of the library.
// Equivalent to del^2 = dbar^2 = del dbar + dbar del = 0 because the three
// components of d^2 land in different bidegrees.
inline bool total_square_vanishes(const DoubleComplex& k) {
  const int top = k.p_max() + k.q_max();
  auto offsets = [&](int deg) {
    std::vector<std::size_t> off(static_cast<std::size_t>(k.p_max() + 2), 0);
    for (int s = 0; s <= k.p_max(); ++s) {
      const int t = deg - s;
      off[static_cast<std::size_t>(s + 1)] =
          off[static_cast<std::size_t>(s)] + ((t >= 0 && t <= k.q_max()) ? k.dim(s, t) : 0);
    }
    return off;
  };
  auto assemble = [&](int deg) {
    const auto src = offsets(deg);
    const auto dst = offsets(deg + 1);
    RationalMatrix d(dst.back(), src.back());
    for (int s = 0; s <= k.p_max(); ++s) {
      const int t = deg - s;
      if (t < 0 || t > k.q_max() || k.dim(s, t) == 0) continue;
      const auto us = static_cast<std::size_t>(s);
      if (k.dim(s, t + 1) > 0) {
        const RationalMatrix& m = k.stored_vertical().count({s, t}) ? k.stored_vertical().at({s, t})
                                                                    : RationalMatrix();
        if (!m.empty()) d.set_block(dst[us], src[us], m);
      }
      if (k.dim(s + 1, t) > 0) {
        const RationalMatrix& m = k.stored_horizontal().count({s, t})
                                      ? k.stored_horizontal().at({s, t})
                                      : RationalMatrix();
        if (!m.empty()) d.set_block(dst[us + 1], src[us], m);
      }
    }
    return d;
  };
  for (int deg = 0; deg + 1 <= top; ++deg) {
    if (!(assemble(deg + 1) * assemble(deg)).is_zero()) return false;
  }
  return true;
}

// Adds a random rational to one entry of one stored map, keeping shapes. The
// result may or may not still satisfy the axioms.
inline DoubleComplex perturb_entry(Rng& rng, const DoubleComplex& k) {
  auto h = k.stored_horizontal();
  auto v = k.stored_vertical();
  // Candidate slots: every pair of nonzero spots joined by an arrow.
  std::vector<std::pair<bool, BiDegree>> slots;
  for (int p = 0; p <= k.p_max(); ++p)
    for (int q = 0; q <= k.q_max(); ++q) {
      if (k.dim(p, q) == 0) continue;
      if (k.dim(p + 1, q) > 0) slots.push_back({true, {p, q}});
      if (k.dim(p, q + 1) > 0) slots.push_back({false, {p, q}});
    }
  if (slots.empty()) return k;
  const auto [horizontal, at] =
      slots[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(slots.size()) - 1))];
  auto& table = horizontal ? h : v;
  RationalMatrix m = horizontal ? k.partial(at.p, at.q) : k.dbar(at.p, at.q);
  const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(m.rows()) - 1));
  const auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(m.cols()) - 1));
  m(i, j) += small_rational(rng, true);
  table[at] = std::move(m);
  return DoubleComplex(k.dims(), std::move(h), std::move(v));
}

// Replaces one map by a matrix of the wrong shape.
inline DoubleComplex corrupt_shape(Rng& rng, const DoubleComplex& k, bool horizontal) {
  auto h = k.stored_horizontal();
  auto v = k.stored_vertical();
  const BiDegree at{uniform(rng, 0, k.p_max()), uniform(rng, 0, k.q_max())};
  const int tp = horizontal ? at.p + 1 : at.p;
  const int tq = horizontal ? at.q : at.q + 1;
  RationalMatrix bad(k.dim(tp, tq) + 1, k.dim(at.p, at.q) + 1);
  bad(0, 0) = 1;
  (horizontal ? h : v)[at] = bad;
  return DoubleComplex(k.dims(), std::move(h), std::move(v));
}

}  // namespace frolicher::testing
