#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "frolicher/bicomplex.hpp"

namespace frolicher::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;  // validation, admissibility, inference
inline constexpr int kExitIo = 2;      // I/O, parse, usage

// Runs one command line (args excludes the program name). Output is fully
// determined by the arguments and input files.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// p increases left to right, q increases bottom to top.
std::string render_grid(const std::string& title, const IntGrid& grid);

}  // namespace frolicher::cli
