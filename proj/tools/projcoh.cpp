// command-line driver: catalog listing, arrangement dumps, cohomology and
// K-theory runs with table or JSON output.  exit codes: 0 ok, 1 input error,
// 2 non-finite arrangement, 3 route disagreement, 4 unsupported codimension.

#include <CLI11.hpp>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "projcoh/arrangement.hpp"
#include "projcoh/cohomology.hpp"
#include "projcoh/scheme.hpp"
#include "projcoh/torus_mv.hpp"

using namespace projcoh;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInfinite = 2;
constexpr int kExitDisagree = 3;
constexpr int kExitUnsupported = 4;

struct RunConfig {
  std::string scheme;
  std::string method = "fhk";
  std::string format = "table";
  std::string gamma;
  bool verbose = false;
};

// name resolution: explicit paths load directly; otherwise a scheme directory
// (flag-free, via PROJCOH_SCHEME_DIR) may shadow the built-in catalog
SchemeSpec resolve_scheme(const RunConfig& cfg) {
  if (cfg.scheme.empty()) throw std::invalid_argument("no scheme given");
  std::optional<Rat> gamma;
  if (!cfg.gamma.empty()) gamma = parse_rational(cfg.gamma);

  bool is_path = cfg.scheme.find('/') != std::string::npos ||
                 (cfg.scheme.size() > 5 && cfg.scheme.substr(cfg.scheme.size() - 5) == ".json");
  if (!is_path) {
    if (const char* dir = std::getenv("PROJCOH_SCHEME_DIR")) {
      std::filesystem::path p = std::filesystem::path(dir) / (cfg.scheme + ".json");
      if (std::filesystem::exists(p)) {
        if (gamma) throw std::invalid_argument("--gamma applies to built-in schemes only");
        return load_scheme_file(p.string());
      }
    }
    return builtin_scheme(cfg.scheme, gamma);
  }
  if (gamma) throw std::invalid_argument("--gamma applies to built-in schemes only");
  return load_scheme_file(cfg.scheme);
}

std::string rat_str(const Rat& x) { return x.get_str(); }

nlohmann::ordered_json basis_json(const IntMatrix& b) {
  nlohmann::ordered_json cols = nlohmann::ordered_json::array();
  for (long j = 0; j < b.cols; ++j) {
    nlohmann::ordered_json col = nlohmann::ordered_json::array();
    for (long i = 0; i < b.rows; ++i) col.push_back(b.at(i, j).get_si());
    cols.push_back(col);
  }
  return cols;
}

int cmd_list_schemes(const RunConfig& cfg) {
  std::vector<std::string> names = catalog_names();
  if (cfg.format == "json") {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const std::string& name : names) {
      SchemeSpec s = builtin_scheme(name);
      out.push_back({{"name", s.name},
                     {"rank", s.ambient_rank},
                     {"codim", s.codim},
                     {"nu", s.nu()},
                     {"families", s.families.size()}});
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  for (const std::string& name : names) {
    SchemeSpec s = builtin_scheme(name);
    std::cout << s.name << " N=" << s.ambient_rank << " n=" << s.codim << " ν=" << s.nu()
              << " families=" << s.families.size() << "\n";
  }
  return kExitOk;
}

int cmd_arrangement(const RunConfig& cfg) {
  SchemeSpec spec = resolve_scheme(cfg);
  Arrangement arr = close_arrangement(spec);
  CountTables ct = counts(arr);

  if (cfg.format == "json") {
    nlohmann::ordered_json levels = nlohmann::ordered_json::array();
    for (size_t r = 0; r < arr.levels.size(); ++r) {
      nlohmann::ordered_json lvl = nlohmann::ordered_json::array();
      for (const AffineClass& c : arr.levels[r]) {
        nlohmann::ordered_json off = nlohmann::ordered_json::array();
        for (const Rat& x : c.offset) off.push_back(rat_str(x));
        lvl.push_back({{"rank", c.dir.basis.cols},
                       {"dir", basis_json(c.dir.basis)},
                       {"offset", off}});
      }
      levels.push_back(lvl);
    }
    nlohmann::ordered_json out{{"scheme", spec.name},
                               {"rank", arr.ambient_rank},
                               {"codim", arr.codim},
                               {"nu", arr.nu},
                               {"levels", levels},
                               {"counts",
                                {{"L", ct.L},
                                 {"L_sub", ct.L_sub},
                                 {"sum_L1_alpha", ct.sum_L1_alpha},
                                 {"sum_L0_alpha", ct.sum_L0_alpha},
                                 {"sum_L0_theta", ct.sum_L0_theta},
                                 {"sum_nested_L0", ct.sum_nested_L0}}}};
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }

  std::cout << "scheme: " << spec.name << "  N=" << arr.ambient_rank << " n=" << arr.codim
            << " ν=" << arr.nu << "\n";
  for (size_t r = 0; r < arr.levels.size(); ++r)
    std::cout << "level " << r << ": " << arr.levels[r].size() << " classes, stabilizer rank "
              << static_cast<long>(r) * arr.nu << "\n";
  std::cout << "incidence sums: L1^α=" << ct.sum_L1_alpha << " L0^α=" << ct.sum_L0_alpha
            << " L0^θ=" << ct.sum_L0_theta << " nested=" << ct.sum_nested_L0 << "\n";
  if (cfg.verbose) {
    for (size_t k = 1; k < arr.levels.size(); ++k)
      for (size_t i = 0; i < arr.levels[k].size(); ++i) {
        std::cout << "  class (" << k << "," << i << "):";
        for (size_t r = 0; r < k; ++r)
          std::cout << " L" << r << "=" << arr.incident(static_cast<long>(k), static_cast<long>(i),
                                                        static_cast<long>(r))
                                               .size();
        std::cout << "\n";
      }
  }
  return kExitOk;
}

void print_degree_notes(const CohomologyResult& r) {
  for (size_t i = r.degrees.size(); i-- > 0;) {
    const DegreeResult& d = r.degrees[i];
    std::ostringstream head;
    head << "  H^" << i;
    if (d.status == DegreeStatus::extension_ambiguous) {
      std::cout << head.str() << " candidates:";
      for (const AbelianGroup& g : d.candidates) std::cout << " {" << g.str() << "}";
      std::cout << "\n";
      if (d.resolved) std::cout << head.str() << " resolved: " << d.group.str() << "\n";
    } else if (d.status == DegreeStatus::rational_rank_only) {
      std::cout << head.str() << " free rank only; torsion undetermined\n";
    }
    if (!d.annotation.empty()) std::cout << head.str() << " note: " << d.annotation << "\n";
  }
}

void print_table(const CohomologyResult& r) {
  std::cout << "scheme: " << r.scheme << "  N=" << r.ambient_rank << " n=" << r.codim
            << "  method " << r.method << "\n";
  for (size_t i = r.degrees.size(); i-- > 0;) {
    const DegreeResult& d = r.degrees[i];
    std::cout << "H^" << i << " = " << d.group.str();
    if (d.status == DegreeStatus::rational_rank_only)
      std::cout << " (rk)";
    else if (d.status == DegreeStatus::extension_ambiguous && !d.resolved)
      std::cout << " (?)";
    std::cout << (i == 0 ? "\n" : "   ");
  }
  std::cout << "euler = " << r.euler << "\n";
  print_degree_notes(r);
}

void print_diag(const CohomologyResult& r) {
  if (!r.diag) return;
  const Codim3Diagnostics& dg = *r.diag;
  std::cout << "diagnostics: t1'=" << dg.torsion_coker_planes3.str()
            << " t1\"=" << dg.torsion_kernel_quot.str()
            << " t0'=" << dg.torsion_ker_degree0.str() << "\n";
  std::cout << "extension: subobject rank " << dg.ext_sub_rank << ", quotient "
            << dg.ext_quotient.str() << "; " << dg.delta_report << "\n";
  std::cout << "ranks: A3=" << dg.A3 << " A4=" << dg.A4 << " T2=" << dg.T2 << " X=" << dg.X
            << " R1=" << dg.R1 << " rel=" << dg.sum_rel_rank << " ker2=" << dg.ker_lines2
            << " kerφ1=" << dg.ker_phi1_rank << " δ0=" << dg.delta0_rank << "\n";
}

void print_checks(const SchemeSpec& spec, const CohomologyResult& r) {
  Arrangement arr = close_arrangement(spec);
  CheckReport rep;
  if (r.codim == 2) {
    DiagramMaps maps = build_diagram_maps(arr);
    rep = codim2_rank_check(arr, maps, r);
  } else if (r.codim == 3) {
    DiagramMaps maps = build_diagram_maps(arr);
    rep = codim3_rank_check(arr, maps, r);
  }
  CheckReport low = low_degree_check(r);
  CheckReport tor = torsion_bounds_check(r);
  for (const std::string& line : rep.lines) std::cout << "check: " << line << "\n";
  for (const std::string& line : low.lines) std::cout << "check: " << line << "\n";
  for (const std::string& line : tor.lines) std::cout << "check: " << line << "\n";
}

int cmd_cohomology(const RunConfig& cfg) {
  SchemeSpec spec = resolve_scheme(cfg);

  std::optional<CohomologyResult> fhk, mv;
  if (cfg.method == "fhk" || cfg.method == "both") fhk = cohomology(spec);
  if (cfg.method == "mv" || cfg.method == "both") mv = torus_mv(spec);

  std::optional<CheckReport> cross;
  if (fhk && mv) cross = route_crosscheck(*fhk, *mv);

  if (cfg.format == "json") {
    if (fhk && mv) {
      nlohmann::ordered_json out{{"fhk", nlohmann::ordered_json::parse(result_to_json(*fhk))},
                                 {"mv", nlohmann::ordered_json::parse(result_to_json(*mv))},
                                 {"crosscheck", {{"ok", cross->ok}, {"lines", cross->lines}}}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << result_to_json(fhk ? *fhk : *mv);
    }
  } else {
    if (fhk) {
      print_table(*fhk);
      if (cfg.verbose) {
        print_diag(*fhk);
        print_checks(spec, *fhk);
      }
    }
    if (mv) {
      if (fhk) std::cout << "\n";
      print_table(*mv);
    }
    if (cross) {
      std::cout << "\nroute crosscheck: " << (cross->ok ? "agree" : "DISAGREE") << "\n";
      if (cfg.verbose || !cross->ok)
        for (const std::string& line : cross->lines) std::cout << "  " << line << "\n";
    }
  }
  if (cross && !cross->ok) return kExitDisagree;
  return kExitOk;
}

int cmd_ktheory(const RunConfig& cfg) {
  SchemeSpec spec = resolve_scheme(cfg);
  CohomologyResult r = cohomology(spec);
  KTheoryResult k = k_theory(r);

  if (cfg.format == "json") {
    std::cout << ktheory_to_json(k, r);
    return kExitOk;
  }
  std::cout << "scheme: " << r.scheme << "\n";
  const DegreeResult* parts[2] = {&k.k0, &k.k1};
  for (int i = 0; i < 2; ++i) {
    const DegreeResult& d = *parts[i];
    std::cout << "K^" << i << " = " << d.group.str();
    if (d.status == DegreeStatus::rational_rank_only)
      std::cout << " (rk)";
    else if (d.status == DegreeStatus::extension_ambiguous && !d.resolved)
      std::cout << " (?)";
    std::cout << "\n";
    if (d.status == DegreeStatus::extension_ambiguous) {
      std::cout << "  K^" << i << " candidates:";
      for (const AbelianGroup& g : d.candidates) std::cout << " {" << g.str() << "}";
      std::cout << "\n";
      if (d.resolved) std::cout << "  K^" << i << " resolved: " << d.group.str() << "\n";
    }
    if (!d.annotation.empty()) std::cout << "  K^" << i << " note: " << d.annotation << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"integral cohomology and K-theory of rational projection tiling spaces"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto add_common = [&cfg](CLI::App* sub, bool takes_scheme) {
    if (takes_scheme) {
      sub->add_option("scheme,--scheme", cfg.scheme, "built-in scheme name or JSON file path");
      sub->add_option("--gamma", cfg.gamma, "translation parameter p/q (generalized_penrose)");
    }
    sub->add_option("--format", cfg.format, "table|json")
        ->check(CLI::IsMember({"table", "json"}));
    sub->add_flag("--verbose", cfg.verbose, "print per-degree checks and diagnostics");
  };

  CLI::App* list = app.add_subcommand("list-schemes", "list the built-in catalog");
  add_common(list, false);
  CLI::App* arrg = app.add_subcommand("arrangement", "intersection closure and count tables");
  add_common(arrg, true);
  CLI::App* coh = app.add_subcommand("cohomology", "integral Čech cohomology of the tiling space");
  add_common(coh, true);
  coh->add_option("--method", cfg.method, "fhk|mv|both")
      ->check(CLI::IsMember({"fhk", "mv", "both"}));
  CLI::App* kth = app.add_subcommand("ktheory", "K-groups assembled from the cohomology");
  add_common(kth, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (list->parsed()) return cmd_list_schemes(cfg);
    if (arrg->parsed()) return cmd_arrangement(cfg);
    if (coh->parsed()) return cmd_cohomology(cfg);
    if (kth->parsed()) return cmd_ktheory(cfg);
  } catch (const InfiniteOrbits& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfinite;
  } catch (const UnsupportedCodim& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
