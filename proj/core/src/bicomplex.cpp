#include "frolicher/bicomplex.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace frolicher {

std::string to_string(const BiDegree& d) {
  return "(" + std::to_string(d.p) + "," + std::to_string(d.q) + ")";
}

IntGrid::IntGrid(int p_max, int q_max) : p_max_(p_max), q_max_(q_max) {
  if (p_max < 0 || q_max < 0) throw std::invalid_argument("grid bounds must be >= 0");
  cells_.assign(static_cast<std::size_t>(p_max + 1) * static_cast<std::size_t>(q_max + 1), 0);
}

long long IntGrid::at(int p, int q) const {
  if (!contains(p, q)) return 0;
  return cells_[static_cast<std::size_t>(p) * static_cast<std::size_t>(q_max_ + 1) +
                static_cast<std::size_t>(q)];
}

void IntGrid::set(int p, int q, long long value) {
  if (!contains(p, q)) throw std::out_of_range("grid index " + to_string(BiDegree{p, q}));
  cells_[static_cast<std::size_t>(p) * static_cast<std::size_t>(q_max_ + 1) +
         static_cast<std::size_t>(q)] = value;
}

long long IntGrid::total() const {
  long long s = 0;
  for (long long v : cells_) s += v;
  return s;
}

long long IntGrid::total_abs() const {
  long long s = 0;
  for (long long v : cells_) s += std::llabs(v);
  return s;
}

IntGrid IntGrid::reflected() const {
  IntGrid g(p_max_, q_max_);
  for (int p = 0; p <= p_max_; ++p)
    for (int q = 0; q <= q_max_; ++q) g.set(p, q, at(p_max_ - p, q_max_ - q));
  return g;
}

IntGrid IntGrid::transposed() const {
  IntGrid g(q_max_, p_max_);
  for (int p = 0; p <= q_max_; ++p)
    for (int q = 0; q <= p_max_; ++q) g.set(p, q, at(q, p));
  return g;
}

IntGrid operator+(const IntGrid& a, const IntGrid& b) {
  IntGrid g(std::max(a.p_max(), b.p_max()), std::max(a.q_max(), b.q_max()));
  for (int p = 0; p <= g.p_max(); ++p)
    for (int q = 0; q <= g.q_max(); ++q) g.set(p, q, a.at(p, q) + b.at(p, q));
  return g;
}

IntGrid operator*(long long k, const IntGrid& g) {
  IntGrid out(g.p_max(), g.q_max());
  for (int p = 0; p <= g.p_max(); ++p)
    for (int q = 0; q <= g.q_max(); ++q) out.set(p, q, k * g.at(p, q));
  return out;
}

std::string to_string(Axiom a) {
  switch (a) {
    case Axiom::kNegativeDimension: return "negative dimension";
    case Axiom::kMapOutsideGrid: return "map outside grid";
    case Axiom::kShapeHorizontal: return "del shape mismatch";
    case Axiom::kShapeVertical: return "dbar shape mismatch";
    case Axiom::kPartialSquared: return "del^2 != 0";
    case Axiom::kDbarSquared: return "dbar^2 != 0";
    case Axiom::kAnticommutation: return "del dbar + dbar del != 0";
  }
  return "unknown";
}

std::string ValidationReport::describe() const {
  if (violations.empty()) return "valid";
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    const auto& v = violations[i];
    if (i) os << '\n';
    os << to_string(v.at) << ": " << to_string(v.axiom);
    if (!v.detail.empty()) os << " (" << v.detail << ")";
  }
  return os.str();
}

InvalidComplex::InvalidComplex(ValidationReport report)
    : std::invalid_argument("invalid double complex:\n" + report.describe()),
      report_(std::move(report)) {}

DoubleComplex::DoubleComplex(int p_max, int q_max) : dims_(p_max, q_max) {}

DoubleComplex::DoubleComplex(IntGrid dims, MapTable d_horiz, MapTable d_vert)
    : dims_(std::move(dims)), d_horiz_(std::move(d_horiz)), d_vert_(std::move(d_vert)) {}

DoubleComplex DoubleComplex::dot(int p_max, int q_max, int p, int q) {
  IntGrid dims(p_max, q_max);
  dims.set(p, q, 1);
  return DoubleComplex(std::move(dims), {}, {});
}

std::size_t DoubleComplex::dim(int p, int q) const {
  const long long d = dims_.at(p, q);
  return d > 0 ? static_cast<std::size_t>(d) : 0;
}

RationalMatrix DoubleComplex::lookup(const MapTable& table, int p, int q, int tp,
                                     int tq) const {
  const std::size_t rows = dim(tp, tq);
  const std::size_t cols = dim(p, q);
  if (rows == 0 || cols == 0) return RationalMatrix(rows, cols);
  auto it = table.find(BiDegree{p, q});
  if (it == table.end() || it->second.rows() != rows || it->second.cols() != cols) {
    return RationalMatrix(rows, cols);
  }
  return it->second;
}

RationalMatrix DoubleComplex::partial(int p, int q) const {
  return lookup(d_horiz_, p, q, p + 1, q);
}

RationalMatrix DoubleComplex::dbar(int p, int q) const {
  return lookup(d_vert_, p, q, p, q + 1);
}

bool operator==(const DoubleComplex& a, const DoubleComplex& b) {
  if (!(a.dims_ == b.dims_)) return false;
  for (int p = 0; p <= a.p_max(); ++p) {
    for (int q = 0; q <= a.q_max(); ++q) {
      if (!(a.partial(p, q) == b.partial(p, q))) return false;
      if (!(a.dbar(p, q) == b.dbar(p, q))) return false;
    }
  }
  return true;
}

namespace {

void check_shapes(const DoubleComplex& k, const DoubleComplex::MapTable& table, bool horizontal,
                  ValidationReport& report) {
  for (const auto& [at, m] : table) {
    const int tp = horizontal ? at.p + 1 : at.p;
    const int tq = horizontal ? at.q : at.q + 1;
    if (!k.dims().contains(at.p, at.q) || !k.dims().contains(tp, tq)) {
      if (!m.empty() && !m.is_zero()) {
        report.violations.push_back(
            {at, Axiom::kMapOutsideGrid,
             std::string(horizontal ? "del" : "dbar") + " leaves the grid"});
      }
      continue;
    }
    if (m.rows() != k.dim(tp, tq) || m.cols() != k.dim(at.p, at.q)) {
      std::ostringstream os;
      os << "expected " << k.dim(tp, tq) << "x" << k.dim(at.p, at.q) << ", got " << m.rows()
         << "x" << m.cols();
      report.violations.push_back(
          {at, horizontal ? Axiom::kShapeHorizontal : Axiom::kShapeVertical, os.str()});
    }
  }
}

}  // namespace

ValidationReport validate(const DoubleComplex& k) {
  ValidationReport report;
  for (int p = 0; p <= k.p_max(); ++p) {
    for (int q = 0; q <= k.q_max(); ++q) {
      if (k.dims().at(p, q) < 0) {
        report.violations.push_back({{p, q}, Axiom::kNegativeDimension, ""});
      }
    }
  }
  check_shapes(k, k.stored_horizontal(), true, report);
  check_shapes(k, k.stored_vertical(), false, report);
  if (!report.ok()) return report;

  for (int p = 0; p <= k.p_max(); ++p) {
    for (int q = 0; q <= k.q_max(); ++q) {
      if (k.dim(p, q) == 0) continue;
      if (!(k.partial(p + 1, q) * k.partial(p, q)).is_zero()) {
        report.violations.push_back({{p, q}, Axiom::kPartialSquared, ""});
      }
      if (!(k.dbar(p, q + 1) * k.dbar(p, q)).is_zero()) {
        report.violations.push_back({{p, q}, Axiom::kDbarSquared, ""});
      }
      const RationalMatrix anti =
          k.dbar(p + 1, q) * k.partial(p, q) + k.partial(p, q + 1) * k.dbar(p, q);
      if (!anti.is_zero()) {
        report.violations.push_back({{p, q}, Axiom::kAnticommutation, ""});
      }
    }
  }
  return report;
}

void require_valid(const DoubleComplex& k) {
  ValidationReport report = validate(k);
  if (!report.ok()) throw InvalidComplex(std::move(report));
}

DoubleComplex direct_sum(const DoubleComplex& a, const DoubleComplex& b) {
  require_valid(a);
  require_valid(b);
  IntGrid dims = a.dims() + b.dims();
  DoubleComplex::MapTable h, v;
  for (int p = 0; p <= dims.p_max(); ++p) {
    for (int q = 0; q <= dims.q_max(); ++q) {
      if (dims.at(p, q) == 0) continue;
      if (dims.at(p + 1, q) > 0) {
        RationalMatrix m = block_diagonal(a.partial(p, q), b.partial(p, q));
        if (!m.is_zero()) h.emplace(BiDegree{p, q}, std::move(m));
      }
      if (dims.at(p, q + 1) > 0) {
        RationalMatrix m = block_diagonal(a.dbar(p, q), b.dbar(p, q));
        if (!m.is_zero()) v.emplace(BiDegree{p, q}, std::move(m));
      }
    }
  }
  return DoubleComplex(std::move(dims), std::move(h), std::move(v));
}

DoubleComplex dual(const DoubleComplex& k) {
  require_valid(k);
  const int pm = k.p_max();
  const int qm = k.q_max();
  DoubleComplex::MapTable h, v;
  for (int p = 0; p <= pm; ++p) {
    for (int q = 0; q <= qm; ++q) {
      // del of the dual out of (p, q) is the transpose of del of k out of
      // (pm - p - 1, qm - q), which lands in the reflected spot.
      if (p < pm) {
        RationalMatrix m = k.partial(pm - p - 1, qm - q).transpose();
        if (!m.empty() && !m.is_zero()) h.emplace(BiDegree{p, q}, std::move(m));
      }
      if (q < qm) {
        RationalMatrix m = k.dbar(pm - p, qm - q - 1).transpose();
        if (!m.empty() && !m.is_zero()) v.emplace(BiDegree{p, q}, std::move(m));
      }
    }
  }
  return DoubleComplex(k.dims().reflected(), std::move(h), std::move(v));
}

DoubleComplex conjugate(const DoubleComplex& k) {
  require_valid(k);
  DoubleComplex::MapTable h, v;
  for (int p = 0; p <= k.q_max(); ++p) {
    for (int q = 0; q <= k.p_max(); ++q) {
      RationalMatrix mh = k.dbar(q, p);
      if (!mh.empty() && !mh.is_zero()) h.emplace(BiDegree{p, q}, std::move(mh));
      RationalMatrix mv = k.partial(q, p);
      if (!mv.empty() && !mv.is_zero()) v.emplace(BiDegree{p, q}, std::move(mv));
    }
  }
  return DoubleComplex(k.dims().transposed(), std::move(h), std::move(v));
}

}  // namespace frolicher
