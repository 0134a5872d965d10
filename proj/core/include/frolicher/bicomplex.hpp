#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "frolicher/rational_matrix.hpp"

namespace frolicher {

struct BiDegree {
  int p = 0;
  int q = 0;
  auto operator<=>(const BiDegree&) const = default;
};

std::string to_string(const BiDegree& d);

// Integer grid over the rectangle [0, p_max] x [0, q_max]. Reads outside the
// rectangle return 0.
class IntGrid {
 public:
  IntGrid() : IntGrid(0, 0) {}
  IntGrid(int p_max, int q_max);

  int p_max() const noexcept { return p_max_; }
  int q_max() const noexcept { return q_max_; }
  bool contains(int p, int q) const noexcept {
    return p >= 0 && q >= 0 && p <= p_max_ && q <= q_max_;
  }

  long long at(int p, int q) const;
  void set(int p, int q, long long value);
  void add(int p, int q, long long value) { set(p, q, at(p, q) + value); }

  long long total() const;
  bool all_zero() const { return total_abs() == 0; }

  // Grid with (p, q) -> (p_max - p, q_max - q).
  IntGrid reflected() const;
  // Grid with (p, q) -> (q, p); dimensions swap.
  IntGrid transposed() const;

  friend bool operator==(const IntGrid&, const IntGrid&) = default;

 private:
  long long total_abs() const;

  int p_max_;
  int q_max_;
  std::vector<long long> cells_;
};

IntGrid operator+(const IntGrid& a, const IntGrid& b);
IntGrid operator*(long long k, const IntGrid& g);

enum class Axiom {
  kNegativeDimension,
  kMapOutsideGrid,
  kShapeHorizontal,
  kShapeVertical,
  kPartialSquared,
  kDbarSquared,
  kAnticommutation,
};

std::string to_string(Axiom a);

struct Violation {
  BiDegree at;
  Axiom axiom;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
  std::string describe() const;
};

// Bounded double complex over Q. The horizontal differential (del) at (p, q)
// maps the (p, q) spot to (p+1, q); the vertical one (dbar) maps (p, q) to
// (p, q+1). Anticommuting convention: del dbar + dbar del = 0.
//
// Construction accepts arbitrary data; use validate() before trusting it.
// Every engine entry point rejects invalid complexes with InvalidComplex.
class DoubleComplex {
 public:
  using MapTable = std::map<BiDegree, RationalMatrix>;

  DoubleComplex() : DoubleComplex(0, 0) {}
  DoubleComplex(int p_max, int q_max);
  DoubleComplex(IntGrid dims, MapTable d_horiz, MapTable d_vert);

  static DoubleComplex zero(int p_max, int q_max) { return DoubleComplex(p_max, q_max); }
  // One-dimensional spot at (p, q), no maps.
  static DoubleComplex dot(int p_max, int q_max, int p, int q);

  int p_max() const noexcept { return dims_.p_max(); }
  int q_max() const noexcept { return dims_.q_max(); }
  const IntGrid& dims() const noexcept { return dims_; }
  std::size_t dim(int p, int q) const;

  // Map out of (p, q). Always shaped target x source; spots outside the grid
  // count as zero-dimensional, and unstored maps are zero.
  RationalMatrix partial(int p, int q) const;
  RationalMatrix dbar(int p, int q) const;

  const MapTable& stored_horizontal() const noexcept { return d_horiz_; }
  const MapTable& stored_vertical() const noexcept { return d_vert_; }

  // Equal dims and equal effective maps (stored zero == absent).
  friend bool operator==(const DoubleComplex& a, const DoubleComplex& b);

 private:
  RationalMatrix lookup(const MapTable& table, int p, int q, int tp, int tq) const;

  IntGrid dims_;
  MapTable d_horiz_;
  MapTable d_vert_;
};

class InvalidComplex : public std::invalid_argument {
 public:
  explicit InvalidComplex(ValidationReport report);
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

ValidationReport validate(const DoubleComplex& k);
// Throws InvalidComplex unless validate(k) is empty.
void require_valid(const DoubleComplex& k);

// Spotwise sum on the componentwise-max grid, block-diagonal differentials.
DoubleComplex direct_sum(const DoubleComplex& a, const DoubleComplex& b);

// (p, q) -> (p_max - p, q_max - q), every map replaced by its transpose.
DoubleComplex dual(const DoubleComplex& k);

// (p, q) -> (q, p); del and dbar exchange roles.
DoubleComplex conjugate(const DoubleComplex& k);

}  // namespace frolicher
