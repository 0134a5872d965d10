#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "frolicher/bicomplex.hpp"
#include "frolicher/cohomology.hpp"
#include "frolicher/spectral.hpp"
#include "frolicher/zigzag.hpp"

// Hodge-theoretic bookkeeping for a hypothetical complex structure on the
// six-sphere: every admissible diamond is parameterized by five non-negative
// integers, realized by an explicit zigzag model on the 3x3 grid, and checked
// against closed-form tables.
namespace frolicher::s6 {

inline constexpr Grid kGrid{3, 3};

struct DiamondParams {
  long long h10 = 0;    // h^{1,0}
  long long h02 = 0;    // h^{0,2}
  long long h11 = 0;    // h^{1,1}
  long long alpha = 0;  // h_2^{0,1}
  long long beta = 0;   // h_2^{0,2}

  long long h01() const { return h02 + 1; }
  long long h20() const { return h10 + alpha; }
  long long h12() const { return h11 + alpha - 1; }

  std::string to_string() const;  // "h10=.. h02=.. h11=.. alpha=.. beta=.."
  auto operator<=>(const DiamondParams&) const = default;
};

// ---------------------------------------------------------------------------
// Constraint catalog.

enum class ConstraintKind {
  kDefinitional,  // holds by construction of the parameterization
  kLive,          // restricts the parameters
};

struct ConstraintRecord {
  std::string id;
  std::string relation;  // the relation checked, in h^{p,q} notation
  ConstraintKind kind = ConstraintKind::kDefinitional;
  bool holds = true;
  std::string witness;
};

struct ConstraintReport {
  std::vector<ConstraintRecord> records;

  bool all_hold() const;
  const ConstraintRecord* find(const std::string& id) const;
  std::string describe() const;
};

class InadmissibleParams : public std::invalid_argument {
 public:
  InadmissibleParams(DiamondParams params, ConstraintReport report);
  const ConstraintReport& report() const noexcept { return report_; }
  const DiamondParams& params() const noexcept { return params_; }

 private:
  DiamondParams params_;
  ConstraintReport report_;
};

// Evaluates every catalog relation on the closed-form diamonds of `d`.
// all_hold() is true exactly for admissible tuples. The h^{1,0} <= 1 bound
// is live only with `assume_a0` (algebraic dimension zero).
ConstraintReport check_constraints(const DiamondParams& d, bool assume_a0);

bool admissible(const DiamondParams& d, bool assume_a0 = false);

// Admissible tuples in [0, bound]^5, lexicographic in (h10, h02, h11, alpha, beta).
std::vector<DiamondParams> enumerate_diamonds(long long bound, bool assume_a0,
                                              bool h11_zero_only);

// ---------------------------------------------------------------------------
// Zigzag model.

struct ModelFamily {
  std::string name;
  ZigzagShape shape;
  long long multiplicity;
};

// The representative shapes and their multiplicities (may be negative for an
// inadmissible tuple).
std::vector<ModelFamily> model_families(const DiamondParams& d);

// Each family's orbit under {dual, conj, conj_dual}, every distinct member at
// the family multiplicity. Throws InadmissibleParams.
ZigzagMultiset model_multiset(const DiamondParams& d);

DoubleComplex realize_model(const DiamondParams& d);

// ---------------------------------------------------------------------------
// Tables.

struct ModelTables {
  PageTable e1;
  PageTable e2;
  PageTable e3_plus;  // every page r >= 3
  CohomologyTable bott_chern;
  CohomologyTable aeppli;
  BettiVector betti;
};

// Closed-form tables, with the zigzag-model value h^{2,1}_BC = h^{1,2} + beta.
// Throws InadmissibleParams.
ModelTables predicted_tables(const DiamondParams& d);

// Same formulas without the admissibility check (entries may be negative).
ModelTables predicted_tables_unchecked(const DiamondParams& d);

struct ComputedModel {
  std::vector<PageTable> pages;  // r = 1 .. 5
  CohomologyTable dolbeault;
  CohomologyTable bott_chern;
  CohomologyTable aeppli;
  BettiVector betti;
  long long arithmetic_genus = 0;
  int degeneration_page = 1;
};

// Runs the engine on a 3x3 complex.
ComputedModel compute_model(const DoubleComplex& k, unsigned threads = 1);

// Relations among computed tables that must hold for any S^6 diamond.
ConstraintReport audit_relations(const ComputedModel& m);

struct Mismatch {
  std::string table;
  BiDegree at;
  long long expected = 0;
  long long actual = 0;

  std::string describe() const;
};

struct VerificationReport {
  DiamondParams params;
  std::vector<Mismatch> mismatches;

  bool ok() const noexcept { return mismatches.empty(); }
  std::string describe() const;
};

// Realize, compute everything, and diff against predicted_tables.
VerificationReport verify_model(const DiamondParams& d, unsigned threads = 1);

class InferenceMismatch : public std::runtime_error {
 public:
  explicit InferenceMismatch(Mismatch m);
  const Mismatch& mismatch() const noexcept { return mismatch_; }

 private:
  Mismatch mismatch_;
};

// Reads (h10, h02, h11) from E1 and (alpha, beta) from E2, then checks every
// entry of both tables against the prediction. Throws InferenceMismatch
// naming the first inconsistent spot (E1 before E2, p-major), or
// InadmissibleParams if the tables have model form but violate a constraint.
DiamondParams infer_params(const PageTable& e1, const PageTable& e2);

}  // namespace frolicher::s6
