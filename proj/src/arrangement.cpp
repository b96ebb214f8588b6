#include "projcoh/arrangement.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace projcoh {

namespace {

std::string class_key(const AffineClass& c) {
  std::ostringstream ss;
  ss << c.dir.basis.str();
  for (const Rat& x : c.offset) ss << "|" << x.get_str();
  return ss.str();
}

// integer matrix K with K·basis = 0 whose rows span a saturated lattice, so
// that K maps Z^N onto Z^rows: an integral target is hit iff it is integral
IntMatrix left_kernel_rows(const HermiteBasis& h) {
  return kernel_basis(h.basis.transposed()).transposed();
}

// K·w if it is integral, nothing otherwise
std::optional<std::vector<Int>> integral_image(const IntMatrix& k, const std::vector<Rat>& w) {
  std::vector<Int> out;
  for (long i = 0; i < k.rows; ++i) {
    Rat s(0);
    for (long j = 0; j < k.cols; ++j) s += Rat(k.at(i, j)) * w[j];
    if (s.get_den() != 1) return std::nullopt;
    out.push_back(s.get_num());
  }
  return out;
}

// some γ ∈ Z^N with γ − w ∈ span (given K·w integral); K = left_kernel_rows
std::vector<Int> particular_translate(const IntMatrix& k, const std::vector<Int>& kw) {
  std::vector<Int> g(k.cols, 0);
  if (k.rows == 0) return g;
  auto sol = solve_integer(k, kw);
  if (!sol) throw std::logic_error("saturated left kernel must be onto");
  return *sol;
}

}  // namespace

bool class_less(const AffineClass& a, const AffineClass& b) {
  if (a.dir.rank() != b.dir.rank()) return a.dir.rank() < b.dir.rank();
  const IntMatrix& x = a.dir.basis;
  const IntMatrix& y = b.dir.basis;
  for (long i = 0; i < x.rows; ++i)
    for (long j = 0; j < x.cols; ++j)
      if (x.at(i, j) != y.at(i, j)) return x.at(i, j) < y.at(i, j);
  for (size_t i = 0; i < a.offset.size(); ++i)
    if (a.offset[i] != b.offset[i]) return a.offset[i] < b.offset[i];
  return false;
}

std::vector<std::pair<AffineClass, long>> intersect_classes(const AffineClass& a,
                                                            const AffineClass& b,
                                                            long ambient_rank, long nu) {
  assert(a.dir.ambient_rank == ambient_rank && b.dir.ambient_rank == ambient_rank);
  HermiteBasis stab_sum = lattice_sum({a.dir, b.dir});  // Γ^A + Γ^B, not saturated
  HermiteBasis span_sum = saturate(stab_sum);           // Z^N ∩ (span a + span b)
  if (stab_sum.rank() != span_sum.rank())
    throw InfiniteOrbits("component classes have infinite index");  // defensive: impossible

  // translate solvability: γ − (offset_a − offset_b) ∈ span a + span b
  IntMatrix k = left_kernel_rows(span_sum);
  std::vector<Rat> w(ambient_rank);
  for (long i = 0; i < ambient_rank; ++i) w[i] = a.offset[i] - b.offset[i];
  auto kw = integral_image(k, w);
  if (!kw) return {};
  std::vector<Int> gamma0 = particular_translate(k, *kw);

  HermiteBasis dirc = lattice_intersection(a.dir, b.dir);
  if (dirc.rank() % nu != 0)
    throw InfiniteOrbits("intersection direction of rank " + std::to_string(dirc.rank()) +
                         " with nu = " + std::to_string(nu));

  // component orbits ↔ cosets of Γ^A + Γ^B in the solution lattice
  std::vector<std::vector<Int>> reps = coset_representatives(stab_sum, span_sum);

  long ra = a.dir.rank(), rb = b.dir.rank();
  RatMatrix m(ambient_rank, ra + rb);  // [A | −B] for locating component points
  for (long i = 0; i < ambient_rank; ++i) {
    for (long j = 0; j < ra; ++j) m.at(i, j) = Rat(a.dir.basis.at(i, j));
    for (long j = 0; j < rb; ++j) m.at(i, ra + j) = -Rat(b.dir.basis.at(i, j));
  }

  std::map<std::string, std::pair<AffineClass, long>> acc;
  for (const std::vector<Int>& rep : reps) {
    std::vector<Rat> rhs(ambient_rank);
    for (long i = 0; i < ambient_rank; ++i)
      rhs[i] = b.offset[i] + Rat(gamma0[i]) + Rat(rep[i]) - a.offset[i];
    auto sol = solve_rational(m, rhs);
    if (!sol) throw std::logic_error("solvable intersection without rational point");
    std::vector<Rat> p(ambient_rank);
    for (long i = 0; i < ambient_rank; ++i) {
      p[i] = a.offset[i];
      for (long j = 0; j < ra; ++j) p[i] += Rat(a.dir.basis.at(i, j)) * (*sol)[j];
    }
    AffineClass c{dirc, canonical_offset(dirc, p), dirc.rank() / nu};
    std::string key = class_key(c);
    auto [it, fresh] = acc.emplace(std::move(key), std::make_pair(std::move(c), 0L));
    it->second.second += 1;
  }

  std::vector<std::pair<AffineClass, long>> out;
  out.reserve(acc.size());
  for (auto& [key, v] : acc) out.push_back(std::move(v));
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return class_less(x.first, y.first); });
  return out;
}

Arrangement close_arrangement(const SchemeSpec& s) {
  long n = s.codim, nu = s.nu(), ambient = s.ambient_rank;
  Arrangement arr;
  arr.ambient_rank = ambient;
  arr.codim = n;
  arr.nu = nu;
  arr.levels.assign(n, {});

  std::vector<AffineClass> fams;
  std::vector<AffineClass> table;
  std::map<std::string, char> seen;
  for (const SingularFamily& f : s.families) {
    AffineClass c{f.direction, f.offset, f.direction.rank() / nu};
    fams.push_back(c);
    if (seen.emplace(class_key(c), 1).second) table.push_back(std::move(c));
  }

  // close new classes against the generating families; any iterated
  // intersection of translates is reached through such a chain
  size_t frontier = 0;
  for (long pass = 0;; ++pass) {
    if (pass > n) throw DepthExceeded("closure did not stabilize within codim passes");
    size_t end = table.size();
    if (frontier == end) break;
    for (size_t ci = frontier; ci < end; ++ci) {
      if (table[ci].dim_perp == 0) continue;
      for (const AffineClass& f : fams)
        for (auto& [cls, mult] : intersect_classes(table[ci], f, ambient, nu)) {
          if (cls.dir.rank() == table[ci].dir.rank() || cls.dir.rank() == f.dir.rank())
            continue;  // nested or equal: no new class
          if (seen.emplace(class_key(cls), 1).second) table.push_back(std::move(cls));
        }
    }
    frontier = end;
  }

  for (AffineClass& c : table) arr.levels[c.dim_perp].push_back(std::move(c));
  for (std::vector<AffineClass>& lv : arr.levels) std::sort(lv.begin(), lv.end(), class_less);

  // incidence: an r-class C lies inside Θ iff span(C) ⊆ span(Θ) and some
  // integer translate lands in Θ's representative; each incident Γ-class
  // contributes exactly one Γ^Θ-orbit
  arr.incidence.assign(n, {});
  for (long k = 0; k < n; ++k)
    arr.incidence[k].assign(arr.levels[k].size(),
                            std::vector<std::vector<IncidenceEntry>>(std::max<long>(k, 0)));
  for (long k = 1; k < n; ++k)
    for (size_t i = 0; i < arr.levels[k].size(); ++i) {
      const AffineClass& big = arr.levels[k][i];
      IntMatrix kk = left_kernel_rows(big.dir);
      for (long r = 0; r < k; ++r)
        for (size_t j = 0; j < arr.levels[r].size(); ++j) {
          const AffineClass& small = arr.levels[r][j];
          if (!span_contained(small.dir.basis, big.dir.basis)) continue;
          std::vector<Rat> w(ambient);
          for (long t = 0; t < ambient; ++t) w[t] = big.offset[t] - small.offset[t];
          auto kw = integral_image(kk, w);
          if (!kw) continue;
          std::vector<Int> g0 = particular_translate(kk, *kw);
          IncidenceEntry e;
          e.cls = static_cast<long>(j);
          e.rel_offset.resize(ambient);
          for (long t = 0; t < ambient; ++t)
            e.rel_offset[t] = small.offset[t] + Rat(g0[t]) - big.offset[t];
          arr.incidence[k][i][r].push_back(std::move(e));
        }
    }
  return arr;
}

CountTables counts(const Arrangement& arr) {
  CountTables t;
  long n = arr.codim;
  t.L.resize(n);
  for (long r = 0; r < n; ++r) t.L[r] = static_cast<long>(arr.levels[r].size());
  t.L_sub.assign(n, {});
  for (long k = 0; k < n; ++k) {
    t.L_sub[k].assign(arr.levels[k].size(), std::vector<long>(std::max<long>(k, 0), 0));
    for (size_t i = 0; i < arr.levels[k].size(); ++i)
      for (long r = 0; r < k; ++r)
        t.L_sub[k][i][r] = static_cast<long>(arr.incidence[k][i][r].size());
  }
  long top = n - 1;
  if (top >= 1)
    for (size_t i = 0; i < arr.levels[top].size(); ++i) {
      if (top >= 2) t.sum_L1_alpha += t.L_sub[top][i][1];
      t.sum_L0_alpha += t.L_sub[top][i][0];
    }
  if (n >= 2)
    for (size_t i = 0; i < arr.levels[1].size(); ++i) t.sum_L0_theta += t.L_sub[1][i][0];
  if (top >= 2)
    for (size_t i = 0; i < arr.levels[top].size(); ++i)
      for (const IncidenceEntry& e : arr.incidence[top][i][1])
        t.sum_nested_L0 += t.L_sub[1][e.cls][0];
  return t;
}

ValidationReport validate_rationality(const SchemeSpec& s) {
  ValidationReport rep;
  try {
    Arrangement arr = close_arrangement(s);
    for (long r = 0; r < arr.codim; ++r)
      for (const AffineClass& c : arr.levels[r]) {
        if (!(saturate(c.dir) == c.dir))
          rep.violations.push_back("intersection direction not saturated at level " +
                                   std::to_string(r));
        if (c.dir.rank() % arr.nu != 0)
          rep.violations.push_back("intersection direction rank not divisible by nu at level " +
                                   std::to_string(r));
      }
  } catch (const InfiniteOrbits& e) {
    rep.violations.push_back(std::string("infinitely many translation orbits: ") + e.what());
  } catch (const DepthExceeded& e) {
    rep.violations.push_back(std::string("intersection closure did not stabilize: ") + e.what());
  }
  rep.ok = rep.violations.empty();
  return rep;
}

}  // namespace projcoh
