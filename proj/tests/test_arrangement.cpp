#include "projcoh/arrangement.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "projcoh/catalog_data.hpp"
#include "projcoh/scheme.hpp"

using namespace projcoh;

namespace {

HermiteBasis lat(long n, const std::vector<std::vector<long>>& cols) {
  IntMatrix m(n, static_cast<long>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j)
    for (long i = 0; i < n; ++i) m.at(i, static_cast<long>(j)) = cols[j][i];
  return hnf(m);
}

IntMatrix from_rows_ll(const std::vector<std::vector<long long>>& rows) {
  IntMatrix m(static_cast<long>(rows.size()), static_cast<long>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j)
      m.at(static_cast<long>(i), static_cast<long>(j)) = static_cast<long>(rows[i][j]);
  return m;
}

std::vector<Rat> rvec(const std::vector<std::string>& xs) {
  std::vector<Rat> v;
  for (const std::string& x : xs) v.push_back(parse_rational(x));
  return v;
}

SchemeSpec lines2d(const std::vector<std::pair<std::vector<long>, std::vector<std::string>>>& fs) {
  SchemeSpec s;
  s.name = "toy";
  s.ambient_rank = 2;
  s.codim = 2;
  int k = 0;
  for (const auto& [dir, off] : fs) {
    SingularFamily f;
    f.label = "l" + std::to_string(k++);
    f.direction = lat(2, {dir});
    f.offset = rvec(off);
    s.families.push_back(std::move(f));
  }
  return make_scheme(s.name, s.ambient_rank, s.codim, s.families);
}

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

// all intersection points of translated line pairs, reduced into [0,1)^2
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

// number of translation-inequivalent intersection points on one fixed line of
// family `th` (equivalence = shift along the line by its stabilizer)
long brute_orbits_on_line(const SchemeSpec& s, size_t th, long box) {
  const SingularFamily& ft = s.families[th];
  Rat v0(ft.direction.basis.at(0, 0)), v1(ft.direction.basis.at(1, 0));
  std::set<std::string> ts;
  for (size_t b = 0; b < s.families.size(); ++b) {
    if (b == th) continue;
    const SingularFamily& fb = s.families[b];
    Rat w0(fb.direction.basis.at(0, 0)), w1(fb.direction.basis.at(1, 0));
    Rat det = v0 * w1 - v1 * w0;
    if (det == 0) continue;
    for (long d0 = -box; d0 <= box; ++d0)
      for (long d1 = -box; d1 <= box; ++d1) {
        Rat r0 = fb.offset[0] + d0 - ft.offset[0];
        Rat r1 = fb.offset[1] + d1 - ft.offset[1];
        Rat t = (r0 * w1 - r1 * w0) / det;
        ts.insert(frac1(t).get_str());
      }
  }
  return static_cast<long>(ts.size());
}

// is some integer translate of point p on the stored line of family `th`?
bool brute_point_on_line(const SchemeSpec& s, size_t th, const std::vector<Rat>& p, long box) {
  const SingularFamily& ft = s.families[th];
  Rat v0(ft.direction.basis.at(0, 0)), v1(ft.direction.basis.at(1, 0));
  for (long d0 = -box; d0 <= box; ++d0)
    for (long d1 = -box; d1 <= box; ++d1) {
      Rat x0 = p[0] + d0 - ft.offset[0];
      Rat x1 = p[1] + d1 - ft.offset[1];
      if (x0 * v1 - x1 * v0 == 0) return true;
    }
  return false;
}

bool class_in(const std::vector<AffineClass>& v, const AffineClass& c) {
  return std::find(v.begin(), v.end(), c) != v.end();
}

AffineClass cls_of(const HermiteBasis& dir, const std::vector<Rat>& off, long nu) {
  return AffineClass{dir, canonical_offset(dir, off), dir.rank() / nu};
}

std::vector<Rat> mat_apply(const IntMatrix& m, const std::vector<Rat>& v) {
  std::vector<Rat> out(m.rows, Rat(0));
  for (long i = 0; i < m.rows; ++i)
    for (long j = 0; j < m.cols; ++j) out[i] += Rat(m.at(i, j)) * v[j];
  return out;
}

// structural battery shared by all catalog schemes under test
void check_arrangement(const SchemeSpec& s, const Arrangement& arr) {
  long n = s.codim, nu = s.nu();
  REQUIRE(static_cast<long>(arr.levels.size()) == n);
  // top level is exactly the family classes, no more
  CHECK(arr.levels[n - 1].size() == s.families.size());
  for (const SingularFamily& f : s.families)
    CHECK(class_in(arr.levels[n - 1], AffineClass{f.direction, f.offset, n - 1}));
  // rank law and saturation at every level
  for (long r = 0; r < n; ++r)
    for (const AffineClass& c : arr.levels[r]) {
      CHECK(c.dim_perp == r);
      CHECK(c.dir.rank() == r * nu);
      CHECK(saturate(c.dir) == c.dir);
      CHECK(canonical_offset(c.dir, c.offset) == c.offset);
    }
  // deterministic strict ordering
  for (long r = 0; r < n; ++r)
    for (size_t i = 0; i + 1 < arr.levels[r].size(); ++i)
      CHECK(class_less(arr.levels[r][i], arr.levels[r][i + 1]));
  // closure idempotence: intersecting any two known classes yields only known
  // classes, each with multiplicity one
  for (long ra = 0; ra < n; ++ra)
    for (const AffineClass& a : arr.levels[ra])
      for (long rb = 0; rb <= ra; ++rb)
        for (const AffineClass& b : arr.levels[rb]) {
          auto out = intersect_classes(a, b, s.ambient_rank, nu);
          for (const auto& [c, mult] : out) {
            CHECK(mult == 1);
            CHECK(class_in(arr.levels[c.dim_perp], c));
          }
        }
  // incidence lists agree with intersect_classes, and relative offsets place
  // the sub-class inside the parent's representative
  for (long k = 1; k < n; ++k)
    for (size_t i = 0; i < arr.levels[k].size(); ++i) {
      const AffineClass& big = arr.levels[k][i];
      RatMatrix bd(s.ambient_rank, big.dir.rank());
      for (long r = 0; r < s.ambient_rank; ++r)
        for (long c = 0; c < big.dir.rank(); ++c) bd.at(r, c) = Rat(big.dir.basis.at(r, c));
      for (long r = 0; r < k; ++r) {
        std::set<long> listed;
        for (const IncidenceEntry& e : arr.incident(k, i, r)) {
          listed.insert(e.cls);
          const AffineClass& small = arr.levels[r][e.cls];
          CHECK(solve_rational(bd, e.rel_offset).has_value());
          std::vector<Rat> pt(s.ambient_rank);
          for (long t = 0; t < s.ambient_rank; ++t) pt[t] = big.offset[t] + e.rel_offset[t];
          CHECK(canonical_offset(small.dir, pt) == small.offset);
        }
        for (size_t j = 0; j < arr.levels[r].size(); ++j) {
          const AffineClass& small = arr.levels[r][j];
          auto out = intersect_classes(big, small, s.ambient_rank, nu);
          bool inside = false;
          for (const auto& [c, m] : out) inside = inside || c == small;
          if (listed.count(static_cast<long>(j))) {
            // contained class: the intersection is the class itself, once
            REQUIRE(out.size() == 1);
            CHECK(inside);
            CHECK(out[0].second == 1);
          } else {
            // not incident: either disjoint from every translate or transverse
            CHECK(!inside);
            for (const auto& [c, m] : out) CHECK(c.dir.rank() < small.dir.rank());
          }
        }
      }
    }
}

}  // namespace

TEST_CASE("pairwise intersection of lattice lines") {
  long nu = 1;
  AffineClass h = cls_of(lat(2, {{1, 0}}), rvec({"0", "0"}), nu);
  AffineClass v = cls_of(lat(2, {{0, 1}}), rvec({"0", "0"}), nu);

  auto out = intersect_classes(h, v, 2, nu);
  REQUIRE(out.size() == 1);
  CHECK(out[0].first == cls_of(lat(2, {}), rvec({"0", "0"}), nu));
  CHECK(out[0].second == 1);

  // shifting the horizontal line transversally shifts the point class
  AffineClass h2 = cls_of(lat(2, {{1, 0}}), rvec({"0", "1/2"}), nu);
  out = intersect_classes(h2, v, 2, nu);
  REQUIRE(out.size() == 1);
  CHECK(out[0].first.offset == rvec({"0", "1/2"}));

  // shifting the vertical line along itself is a no-op on classes
  AffineClass v2 = cls_of(lat(2, {{0, 1}}), rvec({"0", "1/2"}), nu);
  CHECK(v2 == v);
  out = intersect_classes(h, v2, 2, nu);
  REQUIRE(out.size() == 1);
  CHECK(out[0].first.offset == rvec({"0", "0"}));

  // index two: two point classes
  AffineClass d = cls_of(lat(2, {{1, 2}}), rvec({"0", "0"}), nu);
  out = intersect_classes(h, d, 2, nu);
  REQUIRE(out.size() == 2);
  CHECK(out[0].first.offset == rvec({"0", "0"}));
  CHECK(out[1].first.offset == rvec({"1/2", "0"}));
  CHECK(out[0].second == 1);
  CHECK(out[1].second == 1);

  // index four
  AffineClass d2 = cls_of(lat(2, {{1, -2}}), rvec({"0", "0"}), nu);
  out = intersect_classes(d, d2, 2, nu);
  REQUIRE(out.size() == 4);
  std::set<std::string> offs;
  for (const auto& [c, m] : out) {
    CHECK(m == 1);
    offs.insert(point_str(c.offset));
  }
  CHECK(offs == std::set<std::string>{"0,0,", "1/4,1/2,", "1/2,0,", "3/4,1/2,"});

  // parallel distinct classes never meet; a class meets itself in itself
  AffineClass h3 = cls_of(lat(2, {{1, 0}}), rvec({"0", "1/3"}), nu);
  CHECK(intersect_classes(h, h3, 2, nu).empty());
  out = intersect_classes(h, h, 2, nu);
  REQUIRE(out.size() == 1);
  CHECK(out[0].first == h);

  // nested spans return the smaller class
  AffineClass p = cls_of(lat(2, {}), rvec({"1/2", "0"}), nu);
  out = intersect_classes(h, p, 2, nu);
  REQUIRE(out.size() == 1);
  CHECK(out[0].first == p);
  out = intersect_classes(p, h, 2, nu);
  REQUIRE(out.size() == 1);
  CHECK(out[0].first == p);
  // point classes: equal or disjoint
  out = intersect_classes(p, p, 2, nu);
  REQUIRE(out.size() == 1);
  CHECK(out[0].first == p);
  AffineClass q = cls_of(lat(2, {}), rvec({"1/3", "0"}), nu);
  CHECK(intersect_classes(p, q, 2, nu).empty());
  // point classes against a line class: hit iff some translate lands on it
  AffineClass off_line = cls_of(lat(2, {{1, 2}}), rvec({"0", "1/3"}), nu);
  AffineClass p2 = cls_of(lat(2, {}), rvec({"1/2", "1/3"}), nu);
  out = intersect_classes(off_line, p2, 2, nu);
  REQUIRE(out.size() == 1);
  CHECK(out[0].first == p2);
  AffineClass p3 = cls_of(lat(2, {}), rvec({"1/5", "0"}), nu);
  CHECK(intersect_classes(off_line, p3, 2, nu).empty());
}

TEST_CASE("rank-one intersections with nu=2 are rejected") {
  long nu = 2;
  AffineClass a = cls_of(lat(4, {{1, 0, 0, 0}, {0, 1, 0, 0}}), rvec({"0", "0", "0", "0"}), nu);
  AffineClass b = cls_of(lat(4, {{0, 1, 0, 0}, {0, 0, 1, 0}}), rvec({"0", "0", "0", "0"}), nu);
  CHECK_THROWS_AS(intersect_classes(a, b, 4, nu), InfiniteOrbits);

  SchemeSpec s;
  s.name = "bad";
  SingularFamily f1{"a", lat(4, {{1, 0, 0, 0}, {0, 1, 0, 0}}), rvec({"0", "0", "0", "0"})};
  SingularFamily f2{"b", lat(4, {{0, 1, 0, 0}, {0, 0, 1, 0}}), rvec({"0", "0", "0", "0"})};
  s = make_scheme("bad", 4, 2, {f1, f2});
  CHECK_THROWS_AS(close_arrangement(s), InfiniteOrbits);
  ValidationReport rep = validate_rationality(s);
  CHECK(!rep.ok);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].find("infinite") != std::string::npos);

  SchemeSpec good = builtin_scheme("ammann_beenker");
  ValidationReport ok = validate_rationality(good);
  CHECK(ok.ok);
  CHECK(ok.violations.empty());
}

TEST_CASE("toy grid arrangement") {
  SchemeSpec s = lines2d({{{1, 0}, {"0", "0"}}, {{0, 1}, {"0", "0"}}});
  Arrangement arr = close_arrangement(s);
  check_arrangement(s, arr);
  CountTables t = counts(arr);
  CHECK(t.L == std::vector<long>{1, 2});
  REQUIRE(arr.levels[0].size() == 1);
  CHECK(arr.levels[0][0].offset == rvec({"0", "0"}));
  CHECK(t.L_sub[1][0][0] == 1);
  CHECK(t.L_sub[1][1][0] == 1);
  CHECK(t.sum_L0_alpha == 2);
  CHECK(t.sum_L0_theta == 2);
  CHECK(t.sum_L1_alpha == 0);
  CHECK(t.sum_nested_L0 == 0);
}

TEST_CASE("2d arrangements against brute-force enumeration") {
  std::vector<SchemeSpec> toys;
  toys.push_back(lines2d({{{1, 0}, {"0", "0"}}, {{0, 1}, {"0", "0"}}, {{1, 1}, {"0", "0"}}}));
  toys.push_back(lines2d({{{1, 0}, {"0", "0"}}, {{1, 2}, {"0", "0"}}}));
  toys.push_back(lines2d(
      {{{1, 0}, {"0", "1/3"}}, {{0, 1}, {"0", "0"}}, {{1, 1}, {"1/2", "0"}}}));
  toys.push_back(lines2d({{{1, 2}, {"0", "0"}}, {{1, -2}, {"0", "0"}}}));
  toys.push_back(lines2d({{{2, 1}, {"0", "1/2"}}, {{0, 1}, {"1/2", "0"}}}));

  for (size_t ti = 0; ti < toys.size(); ++ti) {
    CAPTURE(ti);
    const SchemeSpec& s = toys[ti];
    Arrangement arr = close_arrangement(s);
    check_arrangement(s, arr);

    std::set<std::string> expect = brute_points(s, 12);
    CHECK(expect == brute_points(s, 15));  // box is saturated
    std::set<std::string> got;
    for (const AffineClass& c : arr.levels[0]) got.insert(point_str(c.offset));
    CHECK(got == expect);

    // incidence versus brute force: membership and per-line orbit counts
    CountTables t = counts(arr);
    for (size_t th = 0; th < s.families.size(); ++th) {
      AffineClass fc{s.families[th].direction, s.families[th].offset, 1};
      long idx = -1;
      for (size_t i = 0; i < arr.levels[1].size(); ++i)
        if (arr.levels[1][i] == fc) idx = static_cast<long>(i);
      REQUIRE(idx >= 0);
      CHECK(t.L_sub[1][idx][0] == brute_orbits_on_line(s, th, 12));
      std::set<long> listed;
      for (const IncidenceEntry& e : arr.incident(1, idx, 0)) listed.insert(e.cls);
      for (size_t j = 0; j < arr.levels[0].size(); ++j) {
        bool hit = brute_point_on_line(s, th, arr.levels[0][j].offset, 12);
        CHECK(hit == (listed.count(static_cast<long>(j)) > 0));
      }
    }
  }

  // frozen class lists for the two index toys
  Arrangement a3 = close_arrangement(toys[3]);
  REQUIRE(a3.levels[0].size() == 4);
  Arrangement a4 = close_arrangement(toys[4]);
  REQUIRE(a4.levels[0].size() == 2);
  std::set<std::string> offs;
  for (const AffineClass& c : a4.levels[0]) offs.insert(point_str(c.offset));
  CHECK(offs == std::set<std::string>{"1/2,1/4,", "1/2,3/4,"});
}

TEST_CASE("octagonal scheme arrangement") {
  SchemeSpec s = builtin_scheme("ammann_beenker");
  Arrangement arr = close_arrangement(s);
  check_arrangement(s, arr);
  CountTables t = counts(arr);
  CHECK(t.L[1] == 4);
  CHECK(t.L[0] >= 1);
  // every line family passes through the lattice point class
  AffineClass origin = cls_of(lat(4, {}), rvec({"0", "0", "0", "0"}), 2);
  REQUIRE(class_in(arr.levels[0], origin));
  for (size_t i = 0; i < arr.levels[1].size(); ++i) CHECK(t.L_sub[1][i][0] >= 1);
  // the rotation symmetry permutes every level
  IntMatrix r8 = from_rows_ll(detail::rotation_8());
  for (long r = 0; r < arr.codim; ++r)
    for (const AffineClass& c : arr.levels[r]) {
      AffineClass img = cls_of(hnf(mul(r8, c.dir.basis)), mat_apply(r8, c.offset), 2);
      CHECK(class_in(arr.levels[r], img));
    }
}

TEST_CASE("pentagonal scheme arrangements") {
  SchemeSpec s = builtin_scheme("penrose");
  Arrangement arr = close_arrangement(s);
  check_arrangement(s, arr);
  CHECK(counts(arr).L[1] == 5);
  IntMatrix r10 = from_rows_ll(detail::rotation_10());
  for (long r = 0; r < arr.codim; ++r)
    for (const AffineClass& c : arr.levels[r]) {
      AffineClass img = cls_of(hnf(mul(r10, c.dir.basis)), mat_apply(r10, c.offset), 2);
      CHECK(class_in(arr.levels[r], img));
    }

  SchemeSpec ttt = builtin_scheme("ttt");
  Arrangement at = close_arrangement(ttt);
  check_arrangement(ttt, at);
  CHECK(counts(at).L[1] == 5);

  SchemeSpec gp = builtin_scheme("generalized_penrose");
  Arrangement ag = close_arrangement(gp);
  check_arrangement(gp, ag);
  CHECK(counts(ag).L[1] == 10);
  // fivefold symmetry of the generalized scheme
  IntMatrix r5 = mul(r10, r10);
  for (long r = 0; r < ag.codim; ++r)
    for (const AffineClass& c : ag.levels[r]) {
      AffineClass img = cls_of(hnf(mul(r5, c.dir.basis)), mat_apply(r5, c.offset), 2);
      CHECK(class_in(ag.levels[r], img));
    }
}

TEST_CASE("codimension-three arrangement structure") {
  SchemeSpec s = builtin_scheme("danzer");
  Arrangement arr = close_arrangement(s);
  check_arrangement(s, arr);
  CountTables t = counts(arr);
  CHECK(t.L[2] == 6);
  CHECK(t.L[1] >= 1);
  CHECK(t.L[0] >= 1);
  // plane/line/point ranks 4/2/0
  CHECK(arr.levels[2][0].dir.rank() == 4);
  CHECK(arr.levels[1][0].dir.rank() == 2);
  CHECK(arr.levels[0][0].dir.rank() == 0);
  // aggregates are internally consistent
  long s10 = 0, s00 = 0, nest = 0;
  for (size_t i = 0; i < arr.levels[2].size(); ++i) {
    s10 += t.L_sub[2][i][1];
    s00 += t.L_sub[2][i][0];
    for (const IncidenceEntry& e : arr.incident(2, i, 1)) nest += t.L_sub[1][e.cls][0];
  }
  CHECK(t.sum_L1_alpha == s10);
  CHECK(t.sum_L0_alpha == s00);
  CHECK(t.sum_nested_L0 == nest);
  long s0t = 0;
  for (size_t i = 0; i < arr.levels[1].size(); ++i) s0t += t.L_sub[1][i][0];
  CHECK(t.sum_L0_theta == s0t);
}
