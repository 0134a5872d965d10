#pragma once

#include <string>
#include <vector>

#include "frolicher/bicomplex.hpp"

namespace frolicher {

enum class Theory { kDolbeault, kRow, kBottChern, kAeppli };

std::string to_string(Theory t);

struct CohomologyTable {
  Theory theory = Theory::kDolbeault;
  IntGrid grid;

  friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;
};

// Betti numbers of the total complex, indexed by total degree 0..p_max+q_max.
struct BettiVector {
  std::vector<long long> b;

  long long euler_characteristic() const;
  friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

// dbar-cohomology of each column.
CohomologyTable dolbeault(const DoubleComplex& k);
// del-cohomology of each row.
CohomologyTable row_cohomology(const DoubleComplex& k);
// Cohomology of the total complex with d = del + dbar.
BettiVector de_rham(const DoubleComplex& k);
// (ker del ∩ ker dbar) / im del dbar
CohomologyTable bott_chern(const DoubleComplex& k);
// ker del dbar / (im del + im dbar)
CohomologyTable aeppli(const DoubleComplex& k);
// Alternating sum of the first Dolbeault column.
long long arithmetic_genus(const DoubleComplex& k);

// Total complex in degree `degree`: summands (s, degree - s) inside the grid,
// ordered by increasing s.
struct TotalDegreeLayout {
  int degree = 0;
  std::vector<int> columns;         // s values present (dimension may be 0)
  std::vector<std::size_t> offset;  // start of each summand
  std::size_t size = 0;

  // Offset of column s, or size if s is not present.
  std::size_t offset_of(int s) const;
};

TotalDegreeLayout total_layout(const DoubleComplex& k, int degree);

// Total differential from degree `degree` to degree + 1, assembled blockwise.
RationalMatrix total_differential(const DoubleComplex& k, int degree);

}  // namespace frolicher
