// acceptance gate: runs the full catalog through both computation routes and
// checks every shipped claim, printing one PASS/FAIL line per criterion.
// exits nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "projcoh/arrangement.hpp"
#include "projcoh/cohomology.hpp"
#include "projcoh/exterior.hpp"
#include "projcoh/scheme.hpp"
#include "projcoh/torus_mv.hpp"

using namespace projcoh;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Runs {
  std::map<std::string, CohomologyResult> fhk, mv;
  std::map<std::string, double> fhk_seconds;

  const CohomologyResult& get_fhk(const std::string& name) {
    auto it = fhk.find(name);
    if (it == fhk.end()) {
      auto t0 = std::chrono::steady_clock::now();
      CohomologyResult r = cohomology(builtin_scheme(name));
      fhk_seconds[name] = seconds_since(t0);
      it = fhk.emplace(name, std::move(r)).first;
    }
    return it->second;
  }
  const CohomologyResult& get_mv(const std::string& name) {
    auto it = mv.find(name);
    if (it == mv.end()) it = mv.emplace(name, torus_mv(builtin_scheme(name))).first;
    return it->second;
  }
};

struct Gate {
  int failures = 0;
  void report(int id, const std::string& title, bool ok,
              const std::vector<std::string>& notes = {}) {
    std::ostringstream os;
    os << "[" << (id < 10 ? " " : "") << id << "] " << (ok ? "PASS" : "FAIL") << "  " << title;
    std::cout << os.str() << "\n";
    for (const std::string& n : notes) std::cout << "      " << n << "\n";
    if (!ok) ++failures;
  }
};

const std::vector<std::string> kQuartic = {
    "ammann_beenker", "ammann_beenker_coloured", "ammann_beenker_decorated",
    "penrose",        "generalized_penrose",     "ttt",
    "socolar",        "socolar_decorated"};

const std::vector<std::string> kIcosahedral = {"danzer", "ammann_kramer", "canonical_d6",
                                               "dual_canonical_d6"};

std::string degs(const CohomologyResult& r) {
  std::string s;
  for (size_t i = r.degrees.size(); i-- > 0;)
    s += "H^" + std::to_string(i) + "=" + r.degrees[i].group.str() + (i ? "  " : "");
  return s;
}

// ---- criterion bodies -------------------------------------------------------

void crit1_quartic_rows(Gate& g, Runs& runs) {
  const std::map<std::string, std::vector<std::string>> want = {
      {"ammann_beenker", {"Z", "Z^5", "Z^9"}},
      {"ammann_beenker_coloured", {"Z", "Z^5", "Z^14 + Z_2"}},
      {"ammann_beenker_decorated", {"Z", "Z^8", "Z^23"}},
      {"penrose", {"Z", "Z^5", "Z^8"}},
      {"generalized_penrose", {"Z", "Z^10", "Z^34"}},
      {"ttt", {"Z", "Z^5", "Z^24 + Z_5^2"}},
      {"socolar", {"Z", "Z^7", "Z^28"}},
      {"socolar_decorated", {"Z", "Z^12", "Z^59"}},
  };
  std::vector<std::string> notes;
  double slowest = 0;
  for (const auto& [name, row] : want) {
    const CohomologyResult& r = runs.get_fhk(name);
    for (size_t s = 0; s < row.size(); ++s)
      if (r.degrees[s].group.str() != row[s] || r.degrees[s].status != DegreeStatus::exact)
        notes.push_back(name + " H^" + std::to_string(s) + ": computed " +
                        r.degrees[s].group.str() + ", expected " + row[s]);
    double dt = runs.fhk_seconds[name];
    slowest = std::max(slowest, dt);
    if (dt >= 60.0)
      notes.push_back(name + " took " + std::to_string(dt) + " s (budget 60 s)");
  }
  std::ostringstream title;
  title << "quartic catalog rows reproduce exactly (8 rows, slowest " << std::fixed
        << std::setprecision(2) << slowest << " s)";
  g.report(1, title.str(), notes.empty(), notes);
}

void crit2_parameter_independence(Gate& g) {
  CohomologyResult a = cohomology(builtin_scheme("generalized_penrose", Rat(1, 3)));
  CohomologyResult b = cohomology(builtin_scheme("generalized_penrose", Rat(2, 5)));
  bool ok = result_to_json(a) == result_to_json(b);
  std::vector<std::string> notes;
  if (!ok) notes = {"1/3 run: " + degs(a), "2/5 run: " + degs(b)};
  g.report(2, "generalized scheme output is independent of the translation parameter", ok, notes);
}

void crit3_heptagonal_torsion(Gate& g, Runs& runs) {
  const CohomologyResult& r = runs.get_fhk("heptagonal_b");
  AbelianGroup t4 = r.degrees[4].group.torsion_part();
  AbelianGroup t3 = r.degrees[3].group.torsion_part();
  bool ok = t4 == AbelianGroup{0, {7, 7, 7, 7}} && t3 == AbelianGroup{0, {7, 7, 7}} &&
            r.degrees[4].status == DegreeStatus::exact &&
            r.degrees[3].status == DegreeStatus::exact;
  std::vector<std::string> notes;
  if (!ok) notes = {"H^4 torsion " + t4.str() + ", H^3 torsion " + t3.str()};
  g.report(3, "heptagonal scheme carries Z_7^4 in degree four and Z_7^3 in degree three", ok,
           notes);
}

void crit4_icosahedral_rows(Gate& g, Runs& runs) {
  struct Row {
    std::string name, h1, h2, t1p, t1pp, t0p;
    long rk3;
  };
  const std::vector<Row> rows = {
      {"danzer", "Z^7", "Z^16", "0", "Z_2", "0", 20},
      {"ammann_kramer", "Z^12", "Z^72 + Z_2", "0", "Z_2", "0", 181},
      {"canonical_d6", "Z^7", "Z^72", "0", "Z_2^2", "0", 205},
      {"dual_canonical_d6", "Z^12", "Z^102 + Z_2^4 + Z_4", "Z_2^6", "Z_2^7", "Z_2^15", 331},
  };
  std::vector<std::string> notes;
  for (const Row& row : rows) {
    const CohomologyResult& r = runs.get_fhk(row.name);
    double dt = runs.fhk_seconds[row.name];
    if (dt >= 600.0)
      notes.push_back(row.name + " took " + std::to_string(dt) + " s (budget 600 s)");
    if (r.degrees[0].group.str() != "Z")
      notes.push_back(row.name + " H^0: computed " + r.degrees[0].group.str());
    if (r.degrees[1].group.str() != row.h1)
      notes.push_back(row.name + " H^1: computed " + r.degrees[1].group.str() +
                      ", reference row " + row.h1);
    if (r.degrees[2].group.str() != row.h2)
      notes.push_back(row.name + " H^2: computed " + r.degrees[2].group.str() +
                      ", reference row " + row.h2);
    if (r.degrees[3].group.free_rank != row.rk3)
      notes.push_back(row.name + " H^3 rank: computed " +
                      std::to_string(r.degrees[3].group.free_rank) + ", reference " +
                      std::to_string(row.rk3));
    if (!r.diag) {
      notes.push_back(row.name + ": diagnostics missing");
      continue;
    }
    std::string t1p = r.diag->torsion_coker_planes3.str();
    std::string t1pp = r.diag->torsion_kernel_quot.str();
    std::string t0p = r.diag->torsion_ker_degree0.str();
    if (t1p != row.t1p || t1pp != row.t1pp || t0p != row.t0p)
      notes.push_back(row.name + " torsion triple: computed (" + t1p + ", " + t1pp + ", " + t0p +
                      "), reference (" + row.t1p + ", " + row.t1pp + ", " + row.t0p + ")");
  }
  bool ok = notes.empty();
  if (!ok) {
    // the one expected deviation: the reference row for canonical_d6 degree one
    // contradicts its own euler characteristic
    const CohomologyResult& cd6 = runs.get_fhk("canonical_d6");
    long rank_sum = 0;
    for (size_t s = 0; s < cd6.degrees.size(); ++s)
      rank_sum += ((cd6.dim - static_cast<long>(s)) % 2 == 0 ? 1 : -1) *
                  cd6.degrees[s].group.free_rank;
    notes.push_back("note: with the reference degree-one rank 7 the alternating rank sum is " +
                    std::to_string(205 - 72 + 7 - 1) + ", but the scheme's point-count euler " +
                    "characteristic is " + std::to_string(cd6.euler) +
                    " (computed alternating sum " + std::to_string(rank_sum) +
                    "); the independent subtorus route also gives Z^13 in degree one");
  }
  g.report(4, "icosahedral catalog rows and torsion diagnostics match the reference table", ok,
           notes);
}

void crit5_danzer_dichotomy(Gate& g, Runs& runs) {
  const DegreeResult& d = runs.get_fhk("danzer").degrees[3];
  std::vector<std::string> cands;
  for (const AbelianGroup& c : d.candidates) cands.push_back(c.str());
  bool ok = d.status == DegreeStatus::extension_ambiguous &&
            cands == std::vector<std::string>{"Z^20", "Z^20 + Z_2"} && d.resolved &&
            d.group.str() == "Z^20" && !d.annotation.empty();
  std::vector<std::string> notes;
  if (!ok) {
    std::string cs;
    for (const std::string& c : cands) cs += "{" + c + "} ";
    notes = {"candidates " + cs + " resolved=" + (d.resolved ? "yes" : "no") + " value " +
             d.group.str()};
  }
  g.report(5, "danzer top degree: candidate pair {Z^20, Z^20 + Z_2} resolves to Z^20", ok, notes);
}

void crit6_dual_canonical_extension(Gate& g, Runs& runs) {
  const CohomologyResult& r = runs.get_fhk("dual_canonical_d6");
  bool ok = r.diag && r.diag->ext_quotient.str() == "Z^328 + Z_2^15";
  std::vector<std::string> notes;
  if (!ok && r.diag) notes = {"extension quotient computed " + r.diag->ext_quotient.str()};
  g.report(6, "dual canonical scheme reports the extension quotient Z^328 + Z_2^15", ok, notes);
}

void crit7_rank_audits(Gate& g, Runs& runs) {
  std::vector<std::string> notes;
  for (const std::string& name : catalog_names()) {
    const CohomologyResult& r = runs.get_fhk(name);
    Arrangement arr = close_arrangement(builtin_scheme(name));
    DiagramMaps maps = build_diagram_maps(arr);
    CheckReport rep = r.codim == 2 ? codim2_rank_check(arr, maps, r)
                                   : codim3_rank_check(arr, maps, r);
    if (!rep.ok)
      for (const std::string& line : rep.lines)
        if (line.rfind("ok:", 0) != 0) notes.push_back(name + ": " + line);
  }
  g.report(7, "rank-formula audits pass on every catalog scheme", notes.empty(), notes);
}

void crit8_route_agreement(Gate& g, Runs& runs) {
  std::vector<std::string> notes;
  for (const std::string& name : kIcosahedral) {
    const CohomologyResult& a = runs.get_fhk(name);
    const CohomologyResult& b = runs.get_mv(name);
    for (size_t s = 0; s < a.degrees.size(); ++s)
      if (a.degrees[s].group.free_rank != b.degrees[s].group.free_rank)
        notes.push_back(name + " degree " + std::to_string(s) + " free ranks differ");
    CheckReport rep = route_crosscheck(a, b);
    if (!rep.ok)
      for (const std::string& line : rep.lines)
        if (line.rfind("ok:", 0) != 0) notes.push_back(name + ": " + line);
  }
  g.report(8, "both routes agree on every codimension-3 scheme", notes.empty(), notes);
}

void crit9_low_degree_freeness(Gate& g, Runs& runs) {
  const CohomologyResult& r = runs.get_fhk("heptagonal_b");
  bool ok = r.degrees[0].group.str() == "Z" && r.degrees[1].group.str() == "Z^6";
  std::vector<std::string> notes;
  if (!ok) notes = {degs(r)};
  g.report(9, "low degrees below the symmetry bound are free (heptagonal: Z, Z^6)", ok, notes);
}

void crit10_torsion_ranges(Gate& g, Runs& runs) {
  std::vector<std::string> notes;
  for (const std::string& name : catalog_names()) {
    CheckReport rep = torsion_bounds_check(runs.get_fhk(name));
    if (!rep.ok)
      for (const std::string& line : rep.lines)
        if (line.rfind("ok:", 0) != 0) notes.push_back(name + " (fhk): " + line);
    CheckReport repm = torsion_bounds_check(runs.get_mv(name));
    if (!repm.ok)
      for (const std::string& line : repm.lines)
        if (line.rfind("ok:", 0) != 0) notes.push_back(name + " (mv): " + line);
  }
  g.report(10, "mandated torsion-free ranges hold on every catalog run", notes.empty(), notes);
}

void crit11_linalg_properties(Gate& g) {
  std::mt19937 rng(20260815);
  std::uniform_int_distribution<long> dim(1, 6), ent(-9, 9), coef(-3, 3), op(0, 2);
  auto random_unimodular = [&](long n) {
    IntMatrix u = IntMatrix::identity(n);
    std::uniform_int_distribution<long> pick(0, n - 1);
    for (int step = 0; step < 12; ++step) {
      long i = pick(rng), j = pick(rng);
      switch (op(rng)) {
        case 0:
          if (i != j) u.addmul_col(i, j, Int(coef(rng)));
          break;
        case 1:
          u.swap_cols(i, j);
          break;
        default:
          u.negate_col(i);
      }
    }
    return u;
  };
  auto det1 = [](const IntMatrix& m) {
    Int d = wedge_matrix(m, m.rows).at(0, 0);
    return d == 1 || d == -1;
  };

  std::vector<std::string> notes;
  auto t0 = std::chrono::steady_clock::now();
  for (int instance = 0; instance < 200 && notes.empty(); ++instance) {
    IntMatrix a(dim(rng), dim(rng));
    for (Int& e : a.entries) e = ent(rng);
    SmithDecomposition d = snf(a);
    IntMatrix uav = mul(mul(d.u, a), d.v);
    bool diag_ok = true;
    for (long i = 0; i < uav.rows; ++i)
      for (long j = 0; j < uav.cols; ++j) {
        Int want = (i == j && i < static_cast<long>(d.invariants.size())) ? d.invariants[i]
                                                                          : Int(0);
        if (uav.at(i, j) != want) diag_ok = false;
      }
    if (!diag_ok) notes.push_back("u a v is not the invariant diagonal");
    if (!det1(d.u) || !det1(d.v)) notes.push_back("transform is not unimodular");
    for (size_t i = 0; i + 1 < d.invariants.size(); ++i)
      if (d.invariants[i + 1] % d.invariants[i] != 0)
        notes.push_back("invariants break the divisibility chain");
    HermiteBasis h = hnf(a);
    if (!(hnf(mul(a, random_unimodular(a.cols))) == h))
      notes.push_back("hnf is not invariant under unimodular column changes");
  }
  double dt = seconds_since(t0);
  if (dt >= 10.0) notes.push_back("property suite took " + std::to_string(dt) + " s (budget 10)");
  std::ostringstream title;
  title << "exact linear algebra property suite (200 instances, " << std::fixed
        << std::setprecision(2) << dt << " s)";
  g.report(11, title.str(), notes.empty(), notes);
}

// -- criterion 12: closure versus direct enumeration on planar toys ----------

Rat frac1(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return x - Rat(q);
}

std::string point_str(const std::vector<Rat>& p) {
  std::string s;
  for (const Rat& x : p) s += frac1(x).get_str() + ",";
  return s;
}

SchemeSpec lines2d(const std::vector<std::pair<std::vector<long>, std::vector<std::string>>>& fs) {
  SchemeSpec s;
  int k = 0;
  std::vector<SingularFamily> fams;
  for (const auto& [dir, off] : fs) {
    SingularFamily f;
    f.label = "l" + std::to_string(k++);
    IntMatrix m(2, 1);
    m.at(0, 0) = dir[0];
    m.at(1, 0) = dir[1];
    f.direction = hnf(m);
    for (const std::string& x : off) f.offset.push_back(parse_rational(x));
    fams.push_back(std::move(f));
  }
  return make_scheme("toy", 2, 2, fams);
}

std::set<std::string> brute_points(const SchemeSpec& s, long box) {
  std::set<std::string> out;
  for (size_t a = 0; a < s.families.size(); ++a)
    for (size_t b = a + 1; b < s.families.size(); ++b) {
      const SingularFamily& fa = s.families[a];
      const SingularFamily& fb = s.families[b];
      Rat va0(fa.direction.basis.at(0, 0)), va1(fa.direction.basis.at(1, 0));
      Rat vb0(fb.direction.basis.at(0, 0)), vb1(fb.direction.basis.at(1, 0));
      Rat det = va0 * vb1 - va1 * vb0;
      if (det == 0) continue;
      for (long d0 = -box; d0 <= box; ++d0)
        for (long d1 = -box; d1 <= box; ++d1) {
          Rat r0 = fb.offset[0] + d0 - fa.offset[0];
          Rat r1 = fb.offset[1] + d1 - fa.offset[1];
          Rat t = (r0 * vb1 - r1 * vb0) / det;
          out.insert(point_str({fa.offset[0] + t * va0, fa.offset[1] + t * va1}));
        }
    }
  return out;
}

void crit12_brute_force(Gate& g) {
  std::vector<SchemeSpec> toys;
  toys.push_back(lines2d({{{1, 0}, {"0", "0"}}, {{0, 1}, {"0", "0"}}, {{1, 1}, {"0", "0"}}}));
  toys.push_back(
      lines2d({{{1, 0}, {"0", "1/3"}}, {{0, 1}, {"0", "0"}}, {{1, 1}, {"1/2", "0"}}}));
  toys.push_back(lines2d({{{2, 1}, {"0", "1/2"}}, {{0, 1}, {"1/2", "0"}}}));
  toys.push_back(lines2d({{{1, 2}, {"0", "0"}}, {{1, -2}, {"0", "0"}}}));

  std::vector<std::string> notes;
  for (size_t ti = 0; ti < toys.size(); ++ti) {
    Arrangement arr = close_arrangement(toys[ti]);
    std::set<std::string> expect = brute_points(toys[ti], 12);
    if (expect != brute_points(toys[ti], 15)) notes.push_back("toy enumeration box unsaturated");
    std::set<std::string> got;
    for (const AffineClass& c : arr.levels[0]) got.insert(point_str(c.offset));
    if (got != expect) {
      std::string have, want;
      for (const std::string& x : got) have += x + " ";
      for (const std::string& x : expect) want += x + " ";
      notes.push_back("toy " + std::to_string(ti) + ": closure points [" + have +
                      "] vs enumeration [" + want + "]");
    }
  }
  g.report(12, "arrangement closure matches brute-force intersection enumeration (4 planar toys)",
           notes.empty(), notes);
}

void crit13_ktheory(Gate& g, Runs& runs) {
  KTheoryResult kp = k_theory(runs.get_fhk("penrose"));
  KTheoryResult kd = k_theory(runs.get_fhk("danzer"));
  std::vector<std::string> notes;
  if (kp.k0.group.str() != "Z^9" || kp.k1.group.str() != "Z^5")
    notes.push_back("penrose: K^0 " + kp.k0.group.str() + ", K^1 " + kp.k1.group.str());
  if (kd.k0.group.str() != "Z^17" || kd.k1.group.str() != "Z^27" || !kd.k1.resolved)
    notes.push_back("danzer: K^0 " + kd.k0.group.str() + ", K^1 " + kd.k1.group.str());
  g.report(13, "K-groups assemble to the reference values (penrose Z^9/Z^5, danzer Z^17/Z^27)",
           notes.empty(), notes);
}

}  // namespace

int main() {
  Gate g;
  Runs runs;
  struct Item {
    int id;
    std::function<void()> body;
    std::string title;
  };
  std::vector<Item> items = {
      {1, [&] { crit1_quartic_rows(g, runs); }, "quartic catalog rows"},
      {2, [&] { crit2_parameter_independence(g); }, "parameter independence"},
      {3, [&] { crit3_heptagonal_torsion(g, runs); }, "heptagonal torsion"},
      {4, [&] { crit4_icosahedral_rows(g, runs); }, "icosahedral rows"},
      {5, [&] { crit5_danzer_dichotomy(g, runs); }, "danzer dichotomy"},
      {6, [&] { crit6_dual_canonical_extension(g, runs); }, "dual canonical extension"},
      {7, [&] { crit7_rank_audits(g, runs); }, "rank audits"},
      {8, [&] { crit8_route_agreement(g, runs); }, "route agreement"},
      {9, [&] { crit9_low_degree_freeness(g, runs); }, "low-degree freeness"},
      {10, [&] { crit10_torsion_ranges(g, runs); }, "torsion ranges"},
      {11, [&] { crit11_linalg_properties(g); }, "linear algebra properties"},
      {12, [&] { crit12_brute_force(g); }, "brute-force arrangement oracle"},
      {13, [&] { crit13_ktheory(g, runs); }, "K-theory sums"},
  };
  for (const Item& item : items) {
    try {
      item.body();
    } catch (const std::exception& e) {
      g.report(item.id, item.title, false, {std::string("exception: ") + e.what()});
    }
  }
  std::cout << (g.failures == 0 ? "all criteria passed"
                                : std::to_string(g.failures) + " criterion(s) failed")
            << "\n";
  return g.failures == 0 ? 0 : 1;
}
