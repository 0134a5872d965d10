#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "frolicher/bicomplex.hpp"
#include "frolicher/cohomology.hpp"
#include "frolicher/spectral.hpp"

namespace frolicher {

struct Grid {
  int p_max = 3;
  int q_max = 3;
  friend bool operator==(const Grid&, const Grid&) = default;
};

// An indecomposable zigzag: a path of dots where consecutive dots differ by a
// unit step in one coordinate and steps alternate between ascending and
// descending, so every dot is a pure source or a pure sink. Arrows point from
// the lower dot to the higher one. Stored in canonical order: the path starts
// at its lexicographically smaller end.
class ZigzagShape {
 public:
  // Throws ShapeError when `dots` violates a shape invariant.
  static ZigzagShape canonicalize(std::vector<BiDegree> dots);

  const std::vector<BiDegree>& dots() const noexcept { return dots_; }
  std::size_t length() const noexcept { return dots_.size(); }
  bool fits(const Grid& grid) const;

  // "(p,q),(p,q),..."
  std::string to_string() const;

  auto operator<=>(const ZigzagShape&) const = default;

 private:
  explicit ZigzagShape(std::vector<BiDegree> dots) : dots_(std::move(dots)) {}
  std::vector<BiDegree> dots_;
};

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parses "(p,q),(p,q),..." and canonicalizes. Throws ShapeError.
ZigzagShape parse_shape(const std::string& text);

ZigzagShape canonicalize_shape(std::vector<BiDegree> dots);

// One-dimensional spot per dot, identity 1x1 map per arrow (del for a
// horizontal step, dbar for a vertical one).
DoubleComplex realize_shape(const ZigzagShape& s, const Grid& grid);

struct ZigzagMultiset {
  std::map<ZigzagShape, long long> entries;

  void add(const ZigzagShape& s, long long mult = 1);
  long long multiplicity(const ZigzagShape& s) const;
  long long total() const;
};

// Direct sum of realized shapes in canonical order, each repeated by its
// multiplicity.
DoubleComplex synthesize(const ZigzagMultiset& m, const Grid& grid);

enum class Mirror { kDual, kConj, kConjDual };

std::string to_string(Mirror m);

ZigzagShape mirror_shape(const ZigzagShape& s, Mirror kind, const Grid& grid);

// The distinct shapes among {s, dual(s), conj(s), conj(dual(s))}, sorted.
// Requires a square grid.
std::vector<ZigzagShape> symmetry_orbit(const ZigzagShape& s, const Grid& grid);

struct ContributionProfile {
  std::vector<PageTable> pages;  // r = 1 .. stable page index
  CohomologyTable dolbeault;
  CohomologyTable row;
  BettiVector de_rham;
  CohomologyTable bott_chern;
  CohomologyTable aeppli;

  friend bool operator==(const ContributionProfile&, const ContributionProfile&) = default;
};

ContributionProfile contribution_profile(const ZigzagShape& s, const Grid& grid);

// Every valid shape of length 1..max_length inside the grid, sorted.
std::vector<ZigzagShape> enumerate_shapes(const Grid& grid, std::size_t max_length);

// The 2x2 square of isomorphisms with lower-left corner (p, q):
// del = 1 on the bottom edge, -1 on the top edge, dbar = 1 on both sides.
DoubleComplex realize_square(int p, int q, const Grid& grid);

}  // namespace frolicher
