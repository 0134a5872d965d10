#include "io.hpp"

#include <fstream>
#include <sstream>

namespace frolicher::io {

using nlohmann::json;

namespace {

json matrix_to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(format_rational(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RationalMatrix matrix_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw FormatError(where + ": 'm' must be an array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw FormatError(where + ": matrix row must be an array");
    std::vector<Rational> r;
    for (const auto& cell : row) {
      if (!cell.is_string()) throw FormatError(where + ": matrix entries must be strings");
      try {
        r.push_back(parse_rational(cell.get<std::string>()));
      } catch (const std::invalid_argument& e) {
        throw FormatError(where + ": " + e.what());
      }
    }
    if (!rows.empty() && r.size() != rows.front().size()) {
      throw FormatError(where + ": ragged matrix");
    }
    rows.push_back(std::move(r));
  }
  return RationalMatrix::from_rows(rows);
}

int get_int(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer()) {
    throw FormatError(where + ": missing integer '" + key + "'");
  }
  return j.at(key).get<int>();
}

json maps_to_json(const DoubleComplex& k, bool horizontal) {
  json out = json::array();
  for (int p = 0; p <= k.p_max(); ++p) {
    for (int q = 0; q <= k.q_max(); ++q) {
      const int tp = horizontal ? p + 1 : p;
      const int tq = horizontal ? q : q + 1;
      if (k.dim(p, q) == 0 || k.dim(tp, tq) == 0) continue;
      const RationalMatrix m = horizontal ? k.partial(p, q) : k.dbar(p, q);
      if (m.is_zero()) continue;
      out.push_back({{"p", p}, {"q", q}, {"m", matrix_to_json(m)}});
    }
  }
  return out;
}

DoubleComplex::MapTable maps_from_json(const json& doc, const char* key, const IntGrid& dims,
                                       bool horizontal) {
  DoubleComplex::MapTable table;
  if (!doc.contains(key)) return table;
  const json& list = doc.at(key);
  if (!list.is_array()) throw FormatError(std::string("'") + key + "' must be an array");
  for (const auto& item : list) {
    const std::string where = std::string(key) + " entry";
    const int p = get_int(item, "p", where);
    const int q = get_int(item, "q", where);
    const std::string at = where + " " + to_string(BiDegree{p, q});
    if (!item.contains("m")) throw FormatError(at + ": missing 'm'");
    const int tp = horizontal ? p + 1 : p;
    const int tq = horizontal ? q : q + 1;
    if (dims.at(p, q) <= 0 || dims.at(tp, tq) <= 0) {
      throw FormatError(at + ": map touches a zero-dimensional spot and must be omitted");
    }
    if (table.count(BiDegree{p, q})) throw FormatError(at + ": duplicate map");
    table.emplace(BiDegree{p, q}, matrix_from_json(item.at("m"), at));
  }
  return table;
}

}  // namespace

json complex_to_json(const DoubleComplex& k) {
  json dims = json::array();
  for (int p = 0; p <= k.p_max(); ++p) {
    json col = json::array();
    for (int q = 0; q <= k.q_max(); ++q) col.push_back(k.dims().at(p, q));
    dims.push_back(std::move(col));
  }
  json doc;
  doc["p_max"] = k.p_max();
  doc["q_max"] = k.q_max();
  doc["dims"] = std::move(dims);
  doc["d_horiz"] = maps_to_json(k, true);
  doc["d_vert"] = maps_to_json(k, false);
  return doc;
}

DoubleComplex complex_from_json(const json& doc) {
  if (!doc.is_object()) throw FormatError("complex document must be a JSON object");
  const int p_max = get_int(doc, "p_max", "complex");
  const int q_max = get_int(doc, "q_max", "complex");
  if (p_max < 0 || q_max < 0) throw FormatError("p_max and q_max must be >= 0");
  if (!doc.contains("dims") || !doc.at("dims").is_array() ||
      doc.at("dims").size() != static_cast<std::size_t>(p_max + 1)) {
    throw FormatError("'dims' must be an array of p_max+1 columns");
  }
  IntGrid dims(p_max, q_max);
  for (int p = 0; p <= p_max; ++p) {
    const json& col = doc.at("dims").at(static_cast<std::size_t>(p));
    if (!col.is_array() || col.size() != static_cast<std::size_t>(q_max + 1)) {
      throw FormatError("dims[" + std::to_string(p) + "] must have q_max+1 entries");
    }
    for (int q = 0; q <= q_max; ++q) {
      const json& v = col.at(static_cast<std::size_t>(q));
      if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw FormatError("dims entries must be non-negative integers");
      }
      dims.set(p, q, v.get<long long>());
    }
  }
  auto h = maps_from_json(doc, "d_horiz", dims, true);
  auto v = maps_from_json(doc, "d_vert", dims, false);
  return DoubleComplex(std::move(dims), std::move(h), std::move(v));
}

std::string serialize_complex(const DoubleComplex& k) { return complex_to_json(k).dump(2) + "\n"; }

DoubleComplex parse_complex(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  return complex_from_json(doc);
}

json multiset_to_json(const MultisetDocument& doc) {
  json zigzags = json::array();
  for (const auto& [shape, mult] : doc.multiset.entries) {
    json dots = json::array();
    for (const auto& d : shape.dots()) dots.push_back({d.p, d.q});
    zigzags.push_back({{"dots", std::move(dots)}, {"mult", mult}});
  }
  return {{"grid", {{"p_max", doc.grid.p_max}, {"q_max", doc.grid.q_max}}},
          {"zigzags", std::move(zigzags)}};
}

MultisetDocument multiset_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("grid")) throw FormatError("multiset needs 'grid'");
  MultisetDocument out;
  out.grid.p_max = get_int(doc.at("grid"), "p_max", "grid");
  out.grid.q_max = get_int(doc.at("grid"), "q_max", "grid");
  if (out.grid.p_max < 0 || out.grid.q_max < 0) throw FormatError("grid bounds must be >= 0");
  if (!doc.contains("zigzags") || !doc.at("zigzags").is_array()) {
    throw FormatError("multiset needs a 'zigzags' array");
  }
  for (const auto& z : doc.at("zigzags")) {
    if (!z.is_object() || !z.contains("dots") || !z.at("dots").is_array()) {
      throw FormatError("zigzag entry needs 'dots'");
    }
    std::vector<BiDegree> dots;
    for (const auto& d : z.at("dots")) {
      if (!d.is_array() || d.size() != 2 || !d[0].is_number_integer() ||
          !d[1].is_number_integer()) {
        throw FormatError("dot must be [p, q]");
      }
      dots.push_back({d[0].get<int>(), d[1].get<int>()});
    }
    const int mult = get_int(z, "mult", "zigzag entry");
    if (mult < 0) throw FormatError("multiplicity must be >= 0");
    out.multiset.add(canonicalize_shape(std::move(dots)), mult);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << contents;
  if (!out) throw FormatError("write to '" + path + "' failed");
}

}  // namespace frolicher::io
