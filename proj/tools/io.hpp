#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "frolicher/bicomplex.hpp"
#include "frolicher/zigzag.hpp"

namespace frolicher::io {

// Malformed document or unreadable file.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Complex document:
//   { "p_max": int, "q_max": int, "dims": [[int,...],...],   // dims[p][q]
//     "d_horiz": [ {"p":int, "q":int, "m":[["r",...],...]}, ... ],
//     "d_vert":  [ ... ] }
// Matrices are target-rows x source-cols, rationals as "n" or "n/d". Zero maps
// and maps touching a zero-dimensional spot are omitted.
nlohmann::json complex_to_json(const DoubleComplex& k);
DoubleComplex complex_from_json(const nlohmann::json& doc);

std::string serialize_complex(const DoubleComplex& k);
DoubleComplex parse_complex(const std::string& text);

// Multiset document:
//   { "grid": {"p_max": int, "q_max": int},
//     "zigzags": [ {"dots": [[p,q],...], "mult": int}, ... ] }
struct MultisetDocument {
  Grid grid;
  ZigzagMultiset multiset;
};

nlohmann::json multiset_to_json(const MultisetDocument& doc);
// Shape violations surface as ShapeError, structural problems as FormatError.
MultisetDocument multiset_from_json(const nlohmann::json& doc);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace frolicher::io
