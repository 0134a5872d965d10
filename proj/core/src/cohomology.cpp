#include "frolicher/cohomology.hpp"

#include <algorithm>

namespace frolicher {

std::string to_string(Theory t) {
  switch (t) {
    case Theory::kDolbeault: return "dolbeault";
    case Theory::kRow: return "row";
    case Theory::kBottChern: return "bott_chern";
    case Theory::kAeppli: return "aeppli";
  }
  return "unknown";
}

long long BettiVector::euler_characteristic() const {
  long long chi = 0;
  for (std::size_t k = 0; k < b.size(); ++k) chi += (k % 2 == 0 ? 1 : -1) * b[k];
  return chi;
}

namespace {

long long to_ll(std::size_t v) { return static_cast<long long>(v); }

}  // namespace

CohomologyTable dolbeault(const DoubleComplex& k) {
  require_valid(k);
  CohomologyTable t{Theory::kDolbeault, IntGrid(k.p_max(), k.q_max())};
  for (int p = 0; p <= k.p_max(); ++p) {
    for (int q = 0; q <= k.q_max(); ++q) {
      const auto n = to_ll(k.dim(p, q));
      t.grid.set(p, q, n - to_ll(rank(k.dbar(p, q))) - to_ll(rank(k.dbar(p, q - 1))));
    }
  }
  return t;
}

CohomologyTable row_cohomology(const DoubleComplex& k) {
  require_valid(k);
  CohomologyTable t{Theory::kRow, IntGrid(k.p_max(), k.q_max())};
  for (int p = 0; p <= k.p_max(); ++p) {
    for (int q = 0; q <= k.q_max(); ++q) {
      const auto n = to_ll(k.dim(p, q));
      t.grid.set(p, q, n - to_ll(rank(k.partial(p, q))) - to_ll(rank(k.partial(p - 1, q))));
    }
  }
  return t;
}

std::size_t TotalDegreeLayout::offset_of(int s) const {
  auto it = std::find(columns.begin(), columns.end(), s);
  if (it == columns.end()) return size;
  return offset[static_cast<std::size_t>(it - columns.begin())];
}

TotalDegreeLayout total_layout(const DoubleComplex& k, int degree) {
  TotalDegreeLayout layout;
  layout.degree = degree;
  const int lo = std::max(0, degree - k.q_max());
  const int hi = std::min(k.p_max(), degree);
  for (int s = lo; s <= hi; ++s) {
    layout.columns.push_back(s);
    layout.offset.push_back(layout.size);
    layout.size += k.dim(s, degree - s);
  }
  return layout;
}

RationalMatrix total_differential(const DoubleComplex& k, int degree) {
  const TotalDegreeLayout src = total_layout(k, degree);
  const TotalDegreeLayout dst = total_layout(k, degree + 1);
  RationalMatrix d(dst.size, src.size);
  for (std::size_t i = 0; i < src.columns.size(); ++i) {
    const int s = src.columns[i];
    const int t = degree - s;
    if (k.dim(s, t) == 0) continue;
    if (k.dim(s, t + 1) > 0) d.set_block(dst.offset_of(s), src.offset[i], k.dbar(s, t));
    if (k.dim(s + 1, t) > 0) d.set_block(dst.offset_of(s + 1), src.offset[i], k.partial(s, t));
  }
  return d;
}

BettiVector de_rham(const DoubleComplex& k) {
  require_valid(k);
  const int top = k.p_max() + k.q_max();
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 1));
  for (int deg = 0; deg < top; ++deg) {
    ranks[static_cast<std::size_t>(deg)] = rank(total_differential(k, deg));
  }
  BettiVector out;
  for (int deg = 0; deg <= top; ++deg) {
    const auto n = to_ll(total_layout(k, deg).size);
    const auto out_rank = to_ll(ranks[static_cast<std::size_t>(deg)]);
    const auto in_rank = deg > 0 ? to_ll(ranks[static_cast<std::size_t>(deg - 1)]) : 0;
    out.b.push_back(n - out_rank - in_rank);
  }
  return out;
}

namespace {

// del dbar from (p, q) to (p+1, q+1).
RationalMatrix del_dbar(const DoubleComplex& k, int p, int q) {
  return k.partial(p, q + 1) * k.dbar(p, q);
}

}  // namespace

CohomologyTable bott_chern(const DoubleComplex& k) {
  require_valid(k);
  CohomologyTable t{Theory::kBottChern, IntGrid(k.p_max(), k.q_max())};
  for (int p = 0; p <= k.p_max(); ++p) {
    for (int q = 0; q <= k.q_max(); ++q) {
      const auto n = to_ll(k.dim(p, q));
      const auto closed = n - to_ll(rank(vstack(k.partial(p, q), k.dbar(p, q))));
      const auto exact = to_ll(rank(del_dbar(k, p - 1, q - 1)));
      t.grid.set(p, q, closed - exact);
    }
  }
  return t;
}

CohomologyTable aeppli(const DoubleComplex& k) {
  require_valid(k);
  CohomologyTable t{Theory::kAeppli, IntGrid(k.p_max(), k.q_max())};
  for (int p = 0; p <= k.p_max(); ++p) {
    for (int q = 0; q <= k.q_max(); ++q) {
      const auto n = to_ll(k.dim(p, q));
      const auto closed = n - to_ll(rank(del_dbar(k, p, q)));
      const auto exact = to_ll(rank(hstack(k.partial(p - 1, q), k.dbar(p, q - 1))));
      t.grid.set(p, q, closed - exact);
    }
  }
  return t;
}

long long arithmetic_genus(const DoubleComplex& k) {
  const CohomologyTable h = dolbeault(k);
  long long chi = 0;
  for (int q = 0; q <= k.q_max(); ++q) chi += (q % 2 == 0 ? 1 : -1) * h.grid.at(0, q);
  return chi;
}

}  // namespace frolicher
