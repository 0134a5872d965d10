#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "frolicher/cohomology.hpp"
#include "frolicher/s6.hpp"
#include "frolicher/spectral.hpp"
#include "frolicher/zigzag.hpp"
#include "io.hpp"

namespace frolicher::cli {

std::string render_grid(const std::string& title, const IntGrid& grid) {
  std::size_t width = 1;
  for (int p = 0; p <= grid.p_max(); ++p)
    for (int q = 0; q <= grid.q_max(); ++q)
      width = std::max(width, std::to_string(grid.at(p, q)).size());
  width = std::max(width, std::to_string(grid.p_max()).size());
  const std::size_t label = std::to_string(grid.q_max()).size();

  auto pad = [](const std::string& s, std::size_t w) {
    return std::string(w > s.size() ? w - s.size() : 0, ' ') + s;
  };

  std::ostringstream os;
  os << title << '\n';
  for (int q = grid.q_max(); q >= 0; --q) {
    os << pad(std::to_string(q), label) << " |";
    for (int p = 0; p <= grid.p_max(); ++p) os << ' ' << pad(std::to_string(grid.at(p, q)), width);
    os << '\n';
  }
  os << std::string(label, ' ') << " +" << std::string((width + 1) * (grid.p_max() + 1), '-')
     << '\n';
  os << std::string(label, ' ') << "  ";
  for (int p = 0; p <= grid.p_max(); ++p) os << ' ' << pad(std::to_string(p), width);
  os << '\n';
  return os.str();
}

namespace {

// Raised by handlers for domain failures already reported on `err`.
struct DomainFailure {};

std::string render_betti(const BettiVector& b) {
  std::ostringstream os;
  os << "b = (";
  for (std::size_t k = 0; k < b.b.size(); ++k) os << (k ? "," : "") << b.b[k];
  os << ")\n";
  return os.str();
}

std::string render_pages(const std::vector<PageTable>& pages) {
  std::string out;
  for (const auto& page : pages) out += render_grid("E_" + std::to_string(page.r), page.grid);
  return out;
}

DoubleComplex load_complex(const std::string& path) {
  return io::parse_complex(io::read_file(path));
}

DoubleComplex load_valid_complex(const std::string& path, std::ostream& err) {
  DoubleComplex k = load_complex(path);
  const ValidationReport report = validate(k);
  if (!report.ok()) {
    err << "invalid double complex:\n" << report.describe() << '\n';
    throw DomainFailure{};
  }
  return k;
}

void add_param_options(CLI::App* cmd, s6::DiamondParams& d) {
  cmd->add_option("--h10", d.h10, "h^{1,0}")->required()->check(CLI::NonNegativeNumber);
  cmd->add_option("--h02", d.h02, "h^{0,2}")->required()->check(CLI::NonNegativeNumber);
  cmd->add_option("--h11", d.h11, "h^{1,1}")->required()->check(CLI::NonNegativeNumber);
  cmd->add_option("--alpha", d.alpha, "h_2^{0,1}")->required()->check(CLI::NonNegativeNumber);
  cmd->add_option("--beta", d.beta, "h_2^{0,2}")->required()->check(CLI::NonNegativeNumber);
}

Grid parse_grid(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw CLI::ValidationError("--grid", "expected P,Q");
  try {
    Grid g{std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
    if (g.p_max < 0 || g.q_max < 0) throw CLI::ValidationError("--grid", "bounds must be >= 0");
    return g;
  } catch (const std::logic_error&) {
    throw CLI::ValidationError("--grid", "expected P,Q");
  }
}

std::string render_profile(const ContributionProfile& prof) {
  std::string out = render_pages(prof.pages);
  out += render_grid("dolbeault", prof.dolbeault.grid);
  out += render_grid("row", prof.row.grid);
  out += "de_rham " + render_betti(prof.de_rham);
  out += render_grid("bott_chern", prof.bott_chern.grid);
  out += render_grid("aeppli", prof.aeppli.grid);
  return out;
}

std::string render_model_tables(const s6::ModelTables& t) {
  std::string out;
  out += render_grid("E_1", t.e1.grid);
  out += render_grid("E_2", t.e2.grid);
  out += render_grid("E_r (r >= 3)", t.e3_plus.grid);
  out += render_grid("bott_chern", t.bott_chern.grid);
  out += render_grid("aeppli", t.aeppli.grid);
  out += "de_rham " + render_betti(t.betti);
  return out;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact cohomology of bounded double complexes and S^6 Hodge diamonds",
               "frolicher"};
  app.require_subcommand(1);
  unsigned threads = 1;
  app.add_option("--threads", threads, "Worker threads for page computations")
      ->check(CLI::Range(1u, 256u));

  std::function<int()> action;

  // validate
  std::string file;
  auto* validate_cmd = app.add_subcommand("validate", "Check the double complex axioms");
  validate_cmd->add_option("file", file, "Complex document")->required();
  validate_cmd->callback([&] {
    action = [&] {
      const ValidationReport report = validate(load_complex(file));
      if (!report.ok()) {
        err << report.describe() << '\n';
        return kExitDomain;
      }
      out << "valid\n";
      return kExitOk;
    };
  });

  // cohomology
  std::string theory = "dolbeault";
  auto* coh_cmd = app.add_subcommand("cohomology", "Dimension table of one cohomology theory");
  coh_cmd->add_option("file", file, "Complex document")->required();
  coh_cmd->add_option("--theory", theory, "Theory")
      ->check(CLI::IsMember({"dolbeault", "row", "derham", "bc", "aeppli", "genus"}));
  coh_cmd->callback([&] {
    action = [&] {
      const DoubleComplex k = load_valid_complex(file, err);
      if (theory == "dolbeault") out << render_grid("dolbeault", dolbeault(k).grid);
      else if (theory == "row") out << render_grid("row", row_cohomology(k).grid);
      else if (theory == "bc") out << render_grid("bott_chern", bott_chern(k).grid);
      else if (theory == "aeppli") out << render_grid("aeppli", aeppli(k).grid);
      else if (theory == "derham") out << render_betti(de_rham(k));
      else out << "chi_0 = " << arithmetic_genus(k) << '\n';
      return kExitOk;
    };
  });

  // pages
  int r_max = 0;
  std::string method = "explicit";
  auto* pages_cmd = app.add_subcommand("pages", "Pages of the column-filtration spectral sequence");
  pages_cmd->add_option("file", file, "Complex document")->required();
  pages_cmd->add_option("--max", r_max, "Last page (default: stable page index)")
      ->check(CLI::PositiveNumber);
  pages_cmd->add_option("--method", method, "Algorithm")
      ->check(CLI::IsMember({"filtration", "explicit", "both"}));
  pages_cmd->callback([&] {
    action = [&] {
      const DoubleComplex k = load_valid_complex(file, err);
      const int last = r_max > 0 ? r_max : stable_page_index(k);
      std::vector<PageTable> pages;
      if (method == "filtration") {
        pages = pages_filtration(k, last, threads);
      } else {
        pages = pages_explicit(k, last, threads);
        if (method == "both") {
          const auto oracle = pages_filtration(k, last, threads);
          for (std::size_t i = 0; i < pages.size(); ++i) {
            if (!(pages[i] == oracle[i])) {
              err << "explicit and filtration pages disagree at r=" << pages[i].r << '\n'
                  << render_grid("explicit", pages[i].grid)
                  << render_grid("filtration", oracle[i].grid);
              return kExitDomain;
            }
          }
          out << "explicit and filtration pages agree\n";
        }
      }
      out << render_pages(pages);
      out << "degeneration page: " << degeneration_page(k) << '\n';
      return kExitOk;
    };
  });

  // degeneration
  auto* degen_cmd = app.add_subcommand("degeneration", "Smallest page equal to E_infinity");
  degen_cmd->add_option("file", file, "Complex document")->required();
  degen_cmd->callback([&] {
    action = [&] {
      out << degeneration_page(load_valid_complex(file, err)) << '\n';
      return kExitOk;
    };
  });

  // zigzag
  auto* zz_cmd = app.add_subcommand("zigzag", "Zigzag shapes");
  zz_cmd->require_subcommand(1);
  std::string dots;
  std::string grid_text = "3,3";
  auto* profile_cmd = zz_cmd->add_subcommand("profile", "Contribution of one zigzag shape");
  profile_cmd->add_option("--dots", dots, "Dot list \"(p,q),(p,q),...\"")->required();
  profile_cmd->add_option("--grid", grid_text, "Grid bounds P,Q");
  profile_cmd->callback([&] {
    action = [&] {
      const Grid grid = parse_grid(grid_text);
      ZigzagShape shape = parse_shape(dots);
      out << "shape " << shape.to_string() << " (length " << shape.length() << ")\n";
      out << render_profile(contribution_profile(shape, grid));
      return kExitOk;
    };
  });
  std::string output;
  auto* synth_cmd = zz_cmd->add_subcommand("synth", "Synthesize a complex from a multiset");
  synth_cmd->add_option("file", file, "Multiset document")->required();
  synth_cmd->add_option("-o,--output", output, "Complex document to write")->required();
  synth_cmd->callback([&] {
    action = [&] {
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(io::read_file(file));
      } catch (const nlohmann::json::parse_error& e) {
        throw io::FormatError(std::string("invalid JSON: ") + e.what());
      }
      const io::MultisetDocument ms = io::multiset_from_json(doc);
      io::write_file(output, io::serialize_complex(synthesize(ms.multiset, ms.grid)));
      out << "wrote " << output << '\n';
      return kExitOk;
    };
  });

  // s6
  auto* s6_cmd = app.add_subcommand("s6", "Hodge diamonds of a hypothetical complex S^6");
  s6_cmd->require_subcommand(1);
  s6::DiamondParams params;
  bool assume_a0 = false;

  auto* check_cmd = s6_cmd->add_subcommand("check", "Evaluate the constraint catalog");
  add_param_options(check_cmd, params);
  check_cmd->add_flag("--assume-a0", assume_a0, "Assume algebraic dimension 0 (h^{1,0} <= 1)");
  check_cmd->callback([&] {
    action = [&] {
      const s6::ConstraintReport report = s6::check_constraints(params, assume_a0);
      out << report.describe() << '\n';
      out << (report.all_hold() ? "admissible" : "inadmissible") << '\n';
      return report.all_hold() ? kExitOk : kExitDomain;
    };
  });

  long long bound = 0;
  bool h11_zero = false;
  std::string format = "lines";
  auto* enum_cmd = s6_cmd->add_subcommand("enumerate", "List admissible diamonds in a box");
  enum_cmd->add_option("--bound", bound, "Upper bound for every parameter")
      ->required()
      ->check(CLI::NonNegativeNumber);
  enum_cmd->add_flag("--assume-a0", assume_a0, "Assume algebraic dimension 0 (h^{1,0} <= 1)");
  enum_cmd->add_flag("--h11-zero", h11_zero, "Only h^{1,1} = 0");
  enum_cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "lines"}));
  enum_cmd->callback([&] {
    action = [&] {
      const auto diamonds = s6::enumerate_diamonds(bound, assume_a0, h11_zero);
      if (format == "table") {
        out << "h10 h02 h11 alpha beta | h01 h20 h12\n";
        for (const auto& d : diamonds) {
          out << d.h10 << ' ' << d.h02 << ' ' << d.h11 << ' ' << d.alpha << ' ' << d.beta
              << " | " << d.h01() << ' ' << d.h20() << ' ' << d.h12() << '\n';
        }
        out << diamonds.size() << " admissible\n";
      } else {
        for (const auto& d : diamonds) out << d.to_string() << '\n';
      }
      return kExitOk;
    };
  });

  auto* realize_cmd = s6_cmd->add_subcommand("realize", "Write the zigzag model complex");
  add_param_options(realize_cmd, params);
  realize_cmd->add_option("-o,--output", output, "Complex document to write")->required();
  realize_cmd->callback([&] {
    action = [&] {
      io::write_file(output, io::serialize_complex(s6::realize_model(params)));
      out << "wrote " << output << '\n';
      return kExitOk;
    };
  });

  auto* predict_cmd = s6_cmd->add_subcommand("predict", "Closed-form tables");
  add_param_options(predict_cmd, params);
  predict_cmd->callback([&] {
    action = [&] {
      out << render_model_tables(s6::predicted_tables(params));
      return kExitOk;
    };
  });

  auto* infer_cmd = s6_cmd->add_subcommand("infer", "Recover parameters from a complex");
  infer_cmd->add_option("file", file, "Complex document")->required();
  infer_cmd->callback([&] {
    action = [&] {
      const DoubleComplex k = load_valid_complex(file, err);
      const auto pages = pages_explicit(k, 2, threads);
      out << s6::infer_params(pages[0], pages[1]).to_string() << '\n';
      return kExitOk;
    };
  });

  auto* verify_cmd = s6_cmd->add_subcommand("verify", "Realize, compute and compare");
  add_param_options(verify_cmd, params);
  verify_cmd->callback([&] {
    action = [&] {
      const s6::VerificationReport report = s6::verify_model(params, threads);
      if (!report.ok()) {
        err << report.describe() << '\n';
        return kExitDomain;
      }
      const auto audit = s6::audit_relations(s6::compute_model(s6::realize_model(params), threads));
      if (!audit.all_hold()) {
        err << audit.describe() << '\n';
        return kExitDomain;
      }
      out << report.describe() << '\n';
      return kExitOk;
    };
  });

  std::vector<std::string> argv_store{"frolicher"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitIo;
  }

  try {
    return action ? action() : kExitIo;
  } catch (const DomainFailure&) {
    return kExitDomain;
  } catch (const io::FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const InvalidComplex& e) {
    err << e.what() << '\n';
    return kExitDomain;
  } catch (const ShapeError& e) {
    err << "invalid zigzag: " << e.what() << '\n';
    return kExitDomain;
  } catch (const s6::InadmissibleParams& e) {
    err << e.what() << '\n';
    return kExitDomain;
  } catch (const s6::InferenceMismatch& e) {
    err << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace frolicher::cli
