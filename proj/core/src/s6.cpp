#include "frolicher/s6.hpp"

#include <sstream>

namespace frolicher::s6 {

std::string DiamondParams::to_string() const {
  std::ostringstream os;
  os << "h10=" << h10 << " h02=" << h02 << " h11=" << h11 << " alpha=" << alpha
     << " beta=" << beta;
  return os.str();
}

bool ConstraintReport::all_hold() const {
  for (const auto& r : records)
    if (!r.holds) return false;
  return true;
}

const ConstraintRecord* ConstraintReport::find(const std::string& id) const {
  for (const auto& r : records)
    if (r.id == id) return &r;
  return nullptr;
}

std::string ConstraintReport::describe() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    if (i) os << '\n';
    os << (r.holds ? "holds    " : "VIOLATED ") << r.id << ": " << r.relation;
    if (r.kind == ConstraintKind::kDefinitional) os << " [definitional]";
    if (!r.witness.empty()) os << "  {" << r.witness << "}";
  }
  return os.str();
}

InadmissibleParams::InadmissibleParams(DiamondParams params, ConstraintReport report)
    : std::invalid_argument("inadmissible parameters " + params.to_string() + ":\n" +
                            report.describe()),
      params_(params),
      report_(std::move(report)) {}

namespace {

// Accumulates records; `w` renders named grid entries as a witness.
class ReportBuilder {
 public:
  void add(std::string id, std::string relation, ConstraintKind kind, bool holds,
           std::string witness) {
    report_.records.push_back(
        {std::move(id), std::move(relation), kind, holds, std::move(witness)});
  }
  ConstraintReport take() { return std::move(report_); }

 private:
  ConstraintReport report_;
};

std::string entry(const char* name, long long v) { return std::string(name) + "=" + std::to_string(v); }

template <typename... Parts>
std::string witness(Parts&&... parts) {
  std::string out;
  ((out += (out.empty() ? "" : ", ") + std::string(parts)), ...);
  return out;
}

bool reflection_symmetric(const IntGrid& g, BiDegree* first_bad) {
  for (int p = 0; p <= g.p_max(); ++p)
    for (int q = 0; q <= g.q_max(); ++q)
      if (g.at(p, q) != g.at(g.p_max() - p, g.q_max() - q)) {
        *first_bad = {p, q};
        return false;
      }
  return true;
}

// Relations on a Dolbeault diamond and its second page.
void dolbeault_relations(ReportBuilder& b, const IntGrid& e1, ConstraintKind h11_kind) {
  const auto def = ConstraintKind::kDefinitional;
  b.add("h00", "h^{0,0} = 1", def, e1.at(0, 0) == 1, entry("h^{0,0}", e1.at(0, 0)));
  b.add("h30", "h^{3,0} = 0", def, e1.at(3, 0) == 0 && e1.at(0, 3) == 0,
        witness(entry("h^{3,0}", e1.at(3, 0)), entry("h^{0,3}", e1.at(0, 3))));
  b.add("h01-h02", "h^{0,1} = h^{0,2} + 1", def, e1.at(0, 1) == e1.at(0, 2) + 1,
        witness(entry("h^{0,1}", e1.at(0, 1)), entry("h^{0,2}", e1.at(0, 2))));
  b.add("h20-h11-h10-h12", "h^{2,0} + h^{1,1} = h^{1,0} + h^{1,2} + 1", def,
        e1.at(2, 0) + e1.at(1, 1) == e1.at(1, 0) + e1.at(1, 2) + 1,
        witness(entry("h^{2,0}", e1.at(2, 0)), entry("h^{1,1}", e1.at(1, 1)),
                entry("h^{1,0}", e1.at(1, 0)), entry("h^{1,2}", e1.at(1, 2))));
  b.add("h10-h20", "h^{1,0} <= h^{2,0}", def, e1.at(1, 0) <= e1.at(2, 0),
        witness(entry("h^{1,0}", e1.at(1, 0)), entry("h^{2,0}", e1.at(2, 0))));
  b.add("h11-ugarte", "h^{1,1} >= h^{1,2} - h^{0,2}", h11_kind,
        e1.at(1, 1) >= e1.at(1, 2) - e1.at(0, 2),
        witness(entry("h^{1,1}", e1.at(1, 1)), entry("h^{1,2}", e1.at(1, 2)),
                entry("h^{0,2}", e1.at(0, 2))));
  BiDegree bad;
  const bool serre = reflection_symmetric(e1, &bad);
  b.add("serre-e1", "h^{p,q} = h^{3-p,3-q}", def, serre, serre ? "" : "first break at " + to_string(bad));
}

void second_page_relations(ReportBuilder& b, const IntGrid& e1, const IntGrid& e2) {
  const auto def = ConstraintKind::kDefinitional;
  b.add("hr00-hr33", "h_2^{0,0} = h_2^{3,3} = 1", def, e2.at(0, 0) == 1 && e2.at(3, 3) == 1,
        witness(entry("h_2^{0,0}", e2.at(0, 0)), entry("h_2^{3,3}", e2.at(3, 3))));
  b.add("h203-h230", "h_2^{3,0} = h_2^{0,3} = 0", def, e2.at(3, 0) == 0 && e2.at(0, 3) == 0,
        witness(entry("h_2^{3,0}", e2.at(3, 0)), entry("h_2^{0,3}", e2.at(0, 3))));
  b.add("h210-h223", "h_2^{1,0} = h_2^{2,3} = 0", def, e2.at(1, 0) == 0 && e2.at(2, 3) == 0,
        witness(entry("h_2^{1,0}", e2.at(1, 0)), entry("h_2^{2,3}", e2.at(2, 3))));
  b.add("h222-h211", "h_2^{1,1} = h_2^{2,2} = 0", def, e2.at(1, 1) == 0 && e2.at(2, 2) == 0,
        witness(entry("h_2^{1,1}", e2.at(1, 1)), entry("h_2^{2,2}", e2.at(2, 2))));
  const long long a = e2.at(0, 1);
  b.add("h2ug2", "h_2^{0,1} = h_2^{2,0} = h_2^{1,3} = h_2^{3,2}", def,
        e2.at(2, 0) == a && e2.at(1, 3) == a && e2.at(3, 2) == a,
        witness(entry("h_2^{0,1}", a), entry("h_2^{2,0}", e2.at(2, 0)),
                entry("h_2^{1,3}", e2.at(1, 3)), entry("h_2^{3,2}", e2.at(3, 2))));
  const long long c = e2.at(0, 2);
  b.add("h2ug3", "h_2^{2,1} = h_2^{0,2} = h_2^{1,2} = h_2^{3,1}", def,
        e2.at(2, 1) == c && e2.at(1, 2) == c && e2.at(3, 1) == c,
        witness(entry("h_2^{2,1}", e2.at(2, 1)), entry("h_2^{0,2}", c),
                entry("h_2^{1,2}", e2.at(1, 2)), entry("h_2^{3,1}", e2.at(3, 1))));
  b.add("h2var", "h_2^{0,1} = h^{1,2} - h^{1,1} + 1", def,
        a == e1.at(1, 2) - e1.at(1, 1) + 1,
        witness(entry("h_2^{0,1}", a), entry("h^{1,2}", e1.at(1, 2)),
                entry("h^{1,1}", e1.at(1, 1))));
  BiDegree bad;
  const bool serre = reflection_symmetric(e2, &bad);
  b.add("serre-e2", "h_2^{p,q} = h_2^{3-p,3-q}", def, serre,
        serre ? "" : "first break at " + to_string(bad));
}

IntGrid dolbeault_diamond(const DiamondParams& d) {
  IntGrid g(3, 3);
  const long long h20 = d.h20();
  const long long h12 = d.h12();
  const long long h01 = d.h01();
  const long long lower[][3] = {
      {0, 0, 1},     {0, 1, h01},   {1, 0, d.h10}, {2, 0, h20},  {1, 1, d.h11},
      {0, 2, d.h02}, {3, 0, 0},     {2, 1, h12},
  };
  for (const auto& e : lower) {
    const int p = static_cast<int>(e[0]);
    const int q = static_cast<int>(e[1]);
    g.set(p, q, e[2]);
    g.set(3 - p, 3 - q, e[2]);
  }
  return g;
}

IntGrid second_page_diamond(const DiamondParams& d) {
  IntGrid g(3, 3);
  g.set(0, 0, 1);
  g.set(3, 3, 1);
  for (auto [p, q] : {std::pair{0, 1}, {2, 0}, {1, 3}, {3, 2}}) g.set(p, q, d.alpha);
  for (auto [p, q] : {std::pair{0, 2}, {2, 1}, {1, 2}, {3, 1}}) g.set(p, q, d.beta);
  return g;
}

IntGrid corners() {
  IntGrid g(3, 3);
  g.set(0, 0, 1);
  g.set(3, 3, 1);
  return g;
}

IntGrid bott_chern_diamond(const DiamondParams& d) {
  const long long h01 = d.h01();
  const long long h20 = d.h20();
  const long long h21_bc = d.h12() + d.beta;
  IntGrid g(3, 3);
  auto sym = [&](int p, int q, long long v) {
    g.set(p, q, v);
    g.set(q, p, v);
  };
  sym(0, 0, 1);
  sym(1, 0, 0);
  sym(2, 0, h20);
  sym(1, 1, 2 * h01);
  sym(3, 0, 0);
  sym(3, 1, d.h02);
  sym(2, 1, h21_bc);
  sym(2, 2, 2 * h21_bc - 2 * h01 + 2);
  sym(3, 2, d.h02 + 1 + h20);
  sym(3, 3, 1);
  return g;
}

IntGrid aeppli_from_bott_chern(const IntGrid& bc) {
  IntGrid g(3, 3);
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q) g.set(p, q, bc.at(3 - q, 3 - p));
  return g;
}

}  // namespace

ConstraintReport check_constraints(const DiamondParams& d, bool assume_a0) {
  const IntGrid e1 = dolbeault_diamond(d);
  const IntGrid e2 = second_page_diamond(d);
  const auto live = ConstraintKind::kLive;

  ReportBuilder b;
  bool nonneg = d.h10 >= 0 && d.h02 >= 0 && d.h11 >= 0 && d.alpha >= 0 && d.beta >= 0;
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q) nonneg = nonneg && e1.at(p, q) >= 0 && e2.at(p, q) >= 0;
  b.add("nonnegative", "all h^{p,q} and h_2^{p,q} are >= 0", live, nonneg,
        witness(entry("h^{1,2}", d.h12())));

  dolbeault_relations(b, e1, live);
  b.add("h10-1", "h^{1,0} <= 1", assume_a0 ? live : ConstraintKind::kDefinitional,
        !assume_a0 || d.h10 <= 1,
        assume_a0 ? entry("h^{1,0}", d.h10) : "not assumed (a(X)=0 flag off)");
  second_page_relations(b, e1, e2);

  b.add("h2-01-bound", "h_2^{0,1} <= h^{0,1}", live, d.alpha <= d.h01(),
        witness(entry("h_2^{0,1}", d.alpha), entry("h^{0,1}", d.h01())));
  b.add("h2-02-bound", "h_2^{0,2} <= h^{0,2}", live, d.beta <= d.h02,
        witness(entry("h_2^{0,2}", d.beta), entry("h^{0,2}", d.h02)));
  b.add("h11-family", "h^{1,1} - h^{0,2} + h_2^{0,1} - 1 >= 0", live,
        d.h11 - d.h02 + d.alpha - 1 >= 0,
        witness(entry("h^{1,1}", d.h11), entry("h^{0,2}", d.h02), entry("h_2^{0,1}", d.alpha)));
  return b.take();
}

bool admissible(const DiamondParams& d, bool assume_a0) {
  return check_constraints(d, assume_a0).all_hold();
}

std::vector<DiamondParams> enumerate_diamonds(long long bound, bool assume_a0,
                                              bool h11_zero_only) {
  std::vector<DiamondParams> out;
  if (bound < 0) return out;
  DiamondParams d;
  for (d.h10 = 0; d.h10 <= bound; ++d.h10)
    for (d.h02 = 0; d.h02 <= bound; ++d.h02)
      for (d.h11 = 0; d.h11 <= bound; ++d.h11)
        for (d.alpha = 0; d.alpha <= bound; ++d.alpha)
          for (d.beta = 0; d.beta <= bound; ++d.beta) {
            if (h11_zero_only && d.h11 != 0) continue;
            if (admissible(d, assume_a0)) out.push_back(d);
          }
  return out;
}

std::vector<ModelFamily> model_families(const DiamondParams& d) {
  auto shape = [](std::vector<BiDegree> dots) { return canonicalize_shape(std::move(dots)); };
  return {
      {"O", shape({{0, 0}}), 1},
      {"Z4a", shape({{0, 1}, {1, 1}, {1, 0}, {2, 0}}), d.alpha},
      {"C", shape({{0, 1}, {1, 1}}), d.h02 + 1 - d.alpha},
      {"D", shape({{0, 2}, {1, 2}}), d.h02 - d.beta},
      {"E", shape({{1, 0}, {2, 0}}), d.h10},
      {"H", shape({{1, 1}, {2, 1}}), d.h11 - d.h02 + d.alpha - 1},
      {"Z4b", shape({{1, 2}, {2, 2}, {2, 1}, {3, 1}}), d.beta},
  };
}

ZigzagMultiset model_multiset(const DiamondParams& d) {
  ConstraintReport report = check_constraints(d, false);
  if (!report.all_hold()) throw InadmissibleParams(d, std::move(report));

  ZigzagMultiset m;
  for (const auto& family : model_families(d)) {
    for (const auto& member : symmetry_orbit(family.shape, kGrid)) {
      m.add(member, family.multiplicity);
    }
  }
  return m;
}

DoubleComplex realize_model(const DiamondParams& d) {
  return synthesize(model_multiset(d), kGrid);
}

ModelTables predicted_tables_unchecked(const DiamondParams& d) {
  ModelTables t;
  t.e1 = {1, dolbeault_diamond(d)};
  t.e2 = {2, second_page_diamond(d)};
  t.e3_plus = {3, corners()};
  t.bott_chern = {Theory::kBottChern, bott_chern_diamond(d)};
  t.aeppli = {Theory::kAeppli, aeppli_from_bott_chern(t.bott_chern.grid)};
  t.betti = {{1, 0, 0, 0, 0, 0, 1}};
  return t;
}

ModelTables predicted_tables(const DiamondParams& d) {
  ConstraintReport report = check_constraints(d, false);
  if (!report.all_hold()) throw InadmissibleParams(d, std::move(report));
  return predicted_tables_unchecked(d);
}

ComputedModel compute_model(const DoubleComplex& k, unsigned threads) {
  if (k.p_max() != kGrid.p_max || k.q_max() != kGrid.q_max) {
    throw std::invalid_argument("S^6 models live on the 3x3 grid");
  }
  ComputedModel m;
  m.pages = pages_explicit(k, stable_page_index(k), threads);
  m.dolbeault = dolbeault(k);
  m.bott_chern = bott_chern(k);
  m.aeppli = aeppli(k);
  m.betti = de_rham(k);
  m.arithmetic_genus = arithmetic_genus(k);
  m.degeneration_page = 1;
  for (std::size_t r = 0; r < m.pages.size(); ++r) {
    if (m.pages[r].grid == m.pages.back().grid) {
      m.degeneration_page = static_cast<int>(r + 1);
      break;
    }
  }
  return m;
}

ConstraintReport audit_relations(const ComputedModel& m) {
  const IntGrid& e1 = m.pages.at(0).grid;
  const IntGrid& e2 = m.pages.at(1).grid;
  const IntGrid& bc = m.bott_chern.grid;
  const IntGrid& ae = m.aeppli.grid;
  const auto def = ConstraintKind::kDefinitional;

  ReportBuilder b;
  dolbeault_relations(b, e1, def);
  second_page_relations(b, e1, e2);

  bool schweitzer = true;
  std::string bad;
  for (int p = 0; p <= 3 && schweitzer; ++p)
    for (int q = 0; q <= 3 && schweitzer; ++q)
      if (ae.at(p, q) != bc.at(3 - q, 3 - p)) {
        schweitzer = false;
        bad = "first break at " + to_string(BiDegree{p, q});
      }
  b.add("schweitzer", "h_A^{p,q} = h_BC^{3-q,3-p}", def, schweitzer, bad);

  const long long h01 = e1.at(0, 1);
  const long long h20 = e1.at(2, 0);
  const long long h02 = e1.at(0, 2);
  b.add("bc00", "h_BC^{0,0} = 1", def, bc.at(0, 0) == 1, entry("h_BC^{0,0}", bc.at(0, 0)));
  b.add("bc10", "h_BC^{1,0} = h_BC^{0,1} = 0", def, bc.at(1, 0) == 0 && bc.at(0, 1) == 0,
        witness(entry("h_BC^{1,0}", bc.at(1, 0)), entry("h_BC^{0,1}", bc.at(0, 1))));
  b.add("bc20", "h_BC^{2,0} = h_BC^{0,2} = h^{2,0}", def,
        bc.at(2, 0) == h20 && bc.at(0, 2) == h20,
        witness(entry("h_BC^{2,0}", bc.at(2, 0)), entry("h_BC^{0,2}", bc.at(0, 2)),
                entry("h^{2,0}", h20)));
  b.add("bc11", "h_BC^{1,1} = 2 h^{0,1}", def, bc.at(1, 1) == 2 * h01,
        witness(entry("h_BC^{1,1}", bc.at(1, 1)), entry("h^{0,1}", h01)));
  b.add("bc30", "h_BC^{3,0} = h_BC^{0,3} = 0", def, bc.at(3, 0) == 0 && bc.at(0, 3) == 0,
        witness(entry("h_BC^{3,0}", bc.at(3, 0)), entry("h_BC^{0,3}", bc.at(0, 3))));
  b.add("bc31", "h_BC^{3,1} = h_BC^{1,3} = h^{0,2}", def,
        bc.at(3, 1) == h02 && bc.at(1, 3) == h02,
        witness(entry("h_BC^{3,1}", bc.at(3, 1)), entry("h_BC^{1,3}", bc.at(1, 3)),
                entry("h^{0,2}", h02)));
  b.add("bc22", "h_BC^{2,2} = 2 h_BC^{2,1} - 2 h^{0,1} + 2", def,
        bc.at(2, 2) == 2 * bc.at(2, 1) - 2 * h01 + 2,
        witness(entry("h_BC^{2,2}", bc.at(2, 2)), entry("h_BC^{2,1}", bc.at(2, 1)),
                entry("h^{0,1}", h01)));
  b.add("bc32", "h_BC^{3,2} = h_BC^{2,3} = h^{0,2} + 1 + h^{2,0}", def,
        bc.at(3, 2) == h02 + 1 + h20 && bc.at(2, 3) == h02 + 1 + h20,
        witness(entry("h_BC^{3,2}", bc.at(3, 2)), entry("h_BC^{2,3}", bc.at(2, 3)),
                entry("h^{0,2}", h02), entry("h^{2,0}", h20)));
  b.add("bc33", "h_BC^{3,3} = 1", def, bc.at(3, 3) == 1, entry("h_BC^{3,3}", bc.at(3, 3)));

  b.add("genus", "chi_0 = 0", def, m.arithmetic_genus == 0,
        entry("chi_0", m.arithmetic_genus));
  b.add("betti", "b = (1,0,0,0,0,0,1)", def,
        m.betti.b == std::vector<long long>{1, 0, 0, 0, 0, 0, 1},
        entry("chi", m.betti.euler_characteristic()));
  return b.take();
}

std::string Mismatch::describe() const {
  std::ostringstream os;
  os << table << " at " << to_string(at) << ": expected " << expected << ", got " << actual;
  return os.str();
}

std::string VerificationReport::describe() const {
  if (ok()) return "verified " + params.to_string();
  std::ostringstream os;
  os << "mismatch for " << params.to_string();
  for (const auto& m : mismatches) os << "\n  " << m.describe();
  return os.str();
}

namespace {

void diff_grid(const std::string& name, const IntGrid& expected, const IntGrid& actual,
               std::vector<Mismatch>& out) {
  const int pm = std::max(expected.p_max(), actual.p_max());
  const int qm = std::max(expected.q_max(), actual.q_max());
  for (int p = 0; p <= pm; ++p)
    for (int q = 0; q <= qm; ++q)
      if (expected.at(p, q) != actual.at(p, q)) {
        out.push_back({name, {p, q}, expected.at(p, q), actual.at(p, q)});
      }
}

}  // namespace

VerificationReport verify_model(const DiamondParams& d, unsigned threads) {
  const ModelTables want = predicted_tables(d);
  const ComputedModel got = compute_model(realize_model(d), threads);

  VerificationReport report{d, {}};
  auto& mm = report.mismatches;
  diff_grid("dolbeault", want.e1.grid, got.dolbeault.grid, mm);
  diff_grid("E1", want.e1.grid, got.pages[0].grid, mm);
  diff_grid("E2", want.e2.grid, got.pages[1].grid, mm);
  for (std::size_t r = 2; r < got.pages.size(); ++r) {
    diff_grid("E" + std::to_string(r + 1), want.e3_plus.grid, got.pages[r].grid, mm);
  }
  diff_grid("bott_chern", want.bott_chern.grid, got.bott_chern.grid, mm);
  diff_grid("aeppli", want.aeppli.grid, got.aeppli.grid, mm);
  for (std::size_t k = 0; k < want.betti.b.size(); ++k) {
    const long long actual = k < got.betti.b.size() ? got.betti.b[k] : 0;
    if (actual != want.betti.b[k]) {
      mm.push_back({"betti", {static_cast<int>(k), 0}, want.betti.b[k], actual});
    }
  }
  if (got.arithmetic_genus != 0) mm.push_back({"genus", {0, 0}, 0, got.arithmetic_genus});
  return report;
}

InferenceMismatch::InferenceMismatch(Mismatch m)
    : std::runtime_error("tables are not of S^6 model form: " + m.describe()),
      mismatch_(std::move(m)) {}

DiamondParams infer_params(const PageTable& e1, const PageTable& e2) {
  for (const PageTable* t : {&e1, &e2}) {
    if (t->grid.p_max() != 3 || t->grid.q_max() != 3) {
      throw std::invalid_argument("S^6 tables must be on the 3x3 grid");
    }
  }
  DiamondParams d{e1.grid.at(1, 0), e1.grid.at(0, 2), e1.grid.at(1, 1), e2.grid.at(0, 1),
                  e2.grid.at(0, 2)};
  const ModelTables want = predicted_tables_unchecked(d);
  std::vector<Mismatch> mm;
  diff_grid("E1", want.e1.grid, e1.grid, mm);
  diff_grid("E2", want.e2.grid, e2.grid, mm);
  if (!mm.empty()) throw InferenceMismatch(mm.front());

  ConstraintReport report = check_constraints(d, false);
  if (!report.all_hold()) throw InadmissibleParams(d, std::move(report));
  return d;
}

}  // namespace frolicher::s6
