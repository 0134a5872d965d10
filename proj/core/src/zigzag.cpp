#include "frolicher/zigzag.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace frolicher {

namespace {

int step_sign(const BiDegree& a, const BiDegree& b) { return (b.p - a.p) + (b.q - a.q); }

bool unit_step(const BiDegree& a, const BiDegree& b) {
  return std::abs(b.p - a.p) + std::abs(b.q - a.q) == 1;
}

}  // namespace

ZigzagShape ZigzagShape::canonicalize(std::vector<BiDegree> dots) {
  if (dots.empty()) throw ShapeError("empty zigzag");

  std::set<BiDegree> seen;
  for (const auto& d : dots) {
    if (!seen.insert(d).second) throw ShapeError("repeated dot " + frolicher::to_string(d));
  }
  for (std::size_t i = 0; i + 1 < dots.size(); ++i) {
    if (!unit_step(dots[i], dots[i + 1])) {
      throw ShapeError("non-unit step " + frolicher::to_string(dots[i]) + " -> " +
                       frolicher::to_string(dots[i + 1]));
    }
    if (i > 0 && step_sign(dots[i - 1], dots[i]) == step_sign(dots[i], dots[i + 1])) {
      throw ShapeError(std::string("two consecutive ") +
                       (step_sign(dots[i], dots[i + 1]) > 0 ? "ascending" : "descending") +
                       " steps at " + frolicher::to_string(dots[i]));
    }
  }
  if (dots.back() < dots.front()) std::reverse(dots.begin(), dots.end());
  return ZigzagShape(std::move(dots));
}

bool ZigzagShape::fits(const Grid& grid) const {
  return std::all_of(dots_.begin(), dots_.end(), [&](const BiDegree& d) {
    return d.p >= 0 && d.q >= 0 && d.p <= grid.p_max && d.q <= grid.q_max;
  });
}

std::string ZigzagShape::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < dots_.size(); ++i) {
    if (i) out += ',';
    out += frolicher::to_string(dots_[i]);
  }
  return out;
}

ZigzagShape canonicalize_shape(std::vector<BiDegree> dots) {
  return ZigzagShape::canonicalize(std::move(dots));
}

ZigzagShape parse_shape(const std::string& text) {
  std::vector<BiDegree> dots;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (i >= text.size() || text[i] != c) {
      throw ShapeError("expected '" + std::string(1, c) + "' at offset " + std::to_string(i) +
                       " in \"" + text + "\"");
    }
    ++i;
  };
  auto number = [&] {
    skip_ws();
    const std::size_t start = i;
    if (i < text.size() && text[i] == '-') ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start || (i == start + 1 && text[start] == '-')) {
      throw ShapeError("expected integer at offset " + std::to_string(start) + " in \"" + text +
                       "\"");
    }
    return std::stoi(text.substr(start, i - start));
  };

  skip_ws();
  while (i < text.size()) {
    expect('(');
    const int p = number();
    expect(',');
    const int q = number();
    expect(')');
    dots.push_back({p, q});
    skip_ws();
    if (i < text.size()) {
      expect(',');
      skip_ws();
      if (i == text.size()) throw ShapeError("trailing ',' in \"" + text + "\"");
    }
  }
  return ZigzagShape::canonicalize(std::move(dots));
}

namespace {

void require_fits(const ZigzagShape& s, const Grid& grid) {
  if (!s.fits(grid)) {
    throw ShapeError("shape " + s.to_string() + " does not fit the grid [0," +
                     std::to_string(grid.p_max) + "]x[0," + std::to_string(grid.q_max) + "]");
  }
}

}  // namespace

DoubleComplex realize_shape(const ZigzagShape& s, const Grid& grid) {
  ZigzagMultiset m;
  m.add(s);
  return synthesize(m, grid);
}

void ZigzagMultiset::add(const ZigzagShape& s, long long mult) {
  if (mult < 0) throw std::invalid_argument("negative multiplicity for " + s.to_string());
  if (mult == 0) return;
  entries[s] += mult;
}

long long ZigzagMultiset::multiplicity(const ZigzagShape& s) const {
  auto it = entries.find(s);
  return it == entries.end() ? 0 : it->second;
}

long long ZigzagMultiset::total() const {
  long long n = 0;
  for (const auto& [shape, mult] : entries) n += mult;
  return n;
}

DoubleComplex synthesize(const ZigzagMultiset& m, const Grid& grid) {
  IntGrid dims(grid.p_max, grid.q_max);
  for (const auto& [shape, mult] : m.entries) {
    require_fits(shape, grid);
    if (mult < 0) throw std::invalid_argument("negative multiplicity for " + shape.to_string());
    for (const auto& d : shape.dots()) dims.add(d.p, d.q, mult);
  }

  DoubleComplex::MapTable h, v;
  auto map_at = [&](DoubleComplex::MapTable& table, const BiDegree& src, const BiDegree& dst)
      -> RationalMatrix& {
    auto [it, inserted] = table.try_emplace(src);
    if (inserted) {
      it->second = RationalMatrix(static_cast<std::size_t>(dims.at(dst.p, dst.q)),
                                  static_cast<std::size_t>(dims.at(src.p, src.q)));
    }
    return it->second;
  };

  // Summands are laid out in canonical shape order, then copy index, so each
  // spot's basis is the concatenation of the summands' bases.
  IntGrid next(grid.p_max, grid.q_max);
  for (const auto& [shape, mult] : m.entries) {
    const auto& dots = shape.dots();
    for (long long copy = 0; copy < mult; ++copy) {
      std::vector<std::size_t> index;
      for (const auto& d : dots) {
        index.push_back(static_cast<std::size_t>(next.at(d.p, d.q)));
        next.add(d.p, d.q, 1);
      }
      for (std::size_t i = 0; i + 1 < dots.size(); ++i) {
        const bool ascending = step_sign(dots[i], dots[i + 1]) > 0;
        const std::size_t a = ascending ? i : i + 1;
        const std::size_t b = ascending ? i + 1 : i;
        const bool horizontal = dots[a].q == dots[b].q;
        RationalMatrix& mat = map_at(horizontal ? h : v, dots[a], dots[b]);
        mat(index[b], index[a]) = 1;
      }
    }
  }
  return DoubleComplex(std::move(dims), std::move(h), std::move(v));
}

std::string to_string(Mirror m) {
  switch (m) {
    case Mirror::kDual: return "dual";
    case Mirror::kConj: return "conj";
    case Mirror::kConjDual: return "conj_dual";
  }
  return "unknown";
}

ZigzagShape mirror_shape(const ZigzagShape& s, Mirror kind, const Grid& grid) {
  require_fits(s, grid);
  std::vector<BiDegree> dots;
  for (const auto& d : s.dots()) {
    switch (kind) {
      case Mirror::kDual: dots.push_back({grid.p_max - d.p, grid.q_max - d.q}); break;
      case Mirror::kConj: dots.push_back({d.q, d.p}); break;
      case Mirror::kConjDual: dots.push_back({grid.q_max - d.q, grid.p_max - d.p}); break;
    }
  }
  ZigzagShape out = ZigzagShape::canonicalize(std::move(dots));
  require_fits(out, grid);
  return out;
}

std::vector<ZigzagShape> symmetry_orbit(const ZigzagShape& s, const Grid& grid) {
  if (grid.p_max != grid.q_max) throw ShapeError("symmetry orbit needs a square grid");
  std::set<ZigzagShape> orbit{s};
  for (Mirror m : {Mirror::kDual, Mirror::kConj, Mirror::kConjDual}) {
    orbit.insert(mirror_shape(s, m, grid));
  }
  return {orbit.begin(), orbit.end()};
}

ContributionProfile contribution_profile(const ZigzagShape& s, const Grid& grid) {
  const DoubleComplex k = realize_shape(s, grid);
  ContributionProfile out;
  out.pages = pages_explicit(k, stable_page_index(k));
  out.dolbeault = dolbeault(k);
  out.row = row_cohomology(k);
  out.de_rham = de_rham(k);
  out.bott_chern = bott_chern(k);
  out.aeppli = aeppli(k);
  return out;
}

std::vector<ZigzagShape> enumerate_shapes(const Grid& grid, std::size_t max_length) {
  std::set<ZigzagShape> found;
  const BiDegree steps[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

  std::vector<BiDegree> path;
  auto inside = [&](const BiDegree& d) {
    return d.p >= 0 && d.q >= 0 && d.p <= grid.p_max && d.q <= grid.q_max;
  };
  // `ascend` is the direction of the next step.
  auto extend = [&](auto&& self, bool ascend) -> void {
    found.insert(ZigzagShape::canonicalize(path));
    if (path.size() == max_length) return;
    for (const auto& st : steps) {
      if ((st.p + st.q > 0) != ascend) continue;
      const BiDegree next{path.back().p + st.p, path.back().q + st.q};
      if (!inside(next) || std::find(path.begin(), path.end(), next) != path.end()) continue;
      path.push_back(next);
      self(self, !ascend);
      path.pop_back();
    }
  };

  if (max_length == 0) return {};
  for (int p = 0; p <= grid.p_max; ++p) {
    for (int q = 0; q <= grid.q_max; ++q) {
      for (bool ascend : {true, false}) {
        path = {{p, q}};
        extend(extend, ascend);
      }
    }
  }
  return {found.begin(), found.end()};
}

DoubleComplex realize_square(int p, int q, const Grid& grid) {
  if (p < 0 || q < 0 || p + 1 > grid.p_max || q + 1 > grid.q_max) {
    throw ShapeError("square at " + to_string(BiDegree{p, q}) + " does not fit the grid");
  }
  IntGrid dims(grid.p_max, grid.q_max);
  for (int dp = 0; dp < 2; ++dp)
    for (int dq = 0; dq < 2; ++dq) dims.set(p + dp, q + dq, 1);
  DoubleComplex::MapTable h, v;
  h.emplace(BiDegree{p, q}, RationalMatrix::from_rows({{1}}));
  h.emplace(BiDegree{p, q + 1}, RationalMatrix::from_rows({{-1}}));
  v.emplace(BiDegree{p, q}, RationalMatrix::from_rows({{1}}));
  v.emplace(BiDegree{p + 1, q}, RationalMatrix::from_rows({{1}}));
  return DoubleComplex(std::move(dims), std::move(h), std::move(v));
}

}  // namespace frolicher
