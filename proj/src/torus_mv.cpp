#include "projcoh/torus_mv.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "projcoh/exterior.hpp"

namespace projcoh {

namespace {

std::vector<long> sorted_incident(const Arrangement& arr, long k, long i, long r) {
  std::vector<long> out;
  for (const IncidenceEntry& e : arr.incident(k, i, r)) out.push_back(e.cls);
  std::sort(out.begin(), out.end());
  return out;
}

// integer coordinates of the lower stabilizer basis in the upper one
IntMatrix inclusion_coords(const IntMatrix& upper, const IntMatrix& lower) {
  IntMatrix coord(upper.cols, lower.cols);
  for (long j = 0; j < lower.cols; ++j) {
    std::optional<std::vector<Int>> sol = solve_integer(upper, lower.col(j));
    if (!sol) throw std::logic_error("incident stabilizer not inside the larger one");
    for (long i = 0; i < upper.cols; ++i) coord.at(i, j) = (*sol)[static_cast<size_t>(i)];
  }
  return coord;
}

}  // namespace

long MVPage::col0_offset(long q, long level, long idx) const {
  long off = 0;
  for (long r = 0; r < level; ++r) off += level_count[r] * binomial_l(level_rank[r], q);
  return off + idx * binomial_l(level_rank[level], q);
}

MVPage build_e1(const Arrangement& arr) {
  MVPage page;
  page.ambient_rank = arr.ambient_rank;
  page.codim = arr.codim;
  page.nu = arr.nu;
  const long N = arr.ambient_rank;
  const long nlev = static_cast<long>(arr.levels.size());
  for (long r = 0; r < nlev; ++r) {
    page.level_rank.push_back(r * arr.nu);
    page.level_count.push_back(static_cast<long>(arr.levels[r].size()));
  }

  // chains of length one, with the inclusion coordinates of their lower basis
  std::vector<IntMatrix> chain_coord;
  std::map<std::tuple<long, long, long, long>, long> chain_pos;
  for (long u = 1; u < nlev; ++u)
    for (long j = 0; j < page.level_count[u]; ++j)
      for (long l = 0; l < u; ++l)
        for (long i : sorted_incident(arr, u, j, l)) {
          chain_pos[{l, i, u, j}] = static_cast<long>(page.chains1.size());
          page.chains1.push_back(ChainPair{l, i, u, j});
          chain_coord.push_back(inclusion_coords(arr.levels[static_cast<size_t>(u)][static_cast<size_t>(j)].dir.basis,
                                                 arr.levels[static_cast<size_t>(l)][static_cast<size_t>(i)].dir.basis));
        }
  // chains of length two: point < line < plane
  if (nlev == 3)
    for (long a = 0; a < page.level_count[2]; ++a)
      for (long t : sorted_incident(arr, 2, a, 1))
        for (long p : sorted_incident(arr, 1, t, 0)) page.chains2.push_back(ChainTriple{p, t, a});

  page.col0.assign(N + 1, 0);
  page.col1.assign(N + 1, 0);
  page.col2.assign(N + 1, 0);
  for (long q = 0; q <= N; ++q) {
    for (long r = 0; r < nlev; ++r)
      page.col0[q] += page.level_count[r] * binomial_l(page.level_rank[r], q);
    for (const ChainPair& c : page.chains1)
      page.col1[q] += binomial_l(page.level_rank[c.lower_level], q);
  }
  page.col2[0] = static_cast<long>(page.chains2.size());

  // d1 on column one: drop the smaller stratum via inclusion (+), drop the
  // larger one via identity (-)
  for (long q = 0; q <= N; ++q) {
    IntMatrix d(page.col0[q], page.col1[q]);
    long c0 = 0;
    for (size_t ci = 0; ci < page.chains1.size(); ++ci) {
      const ChainPair& c = page.chains1[ci];
      long w = binomial_l(page.level_rank[c.lower_level], q);
      if (w == 0) continue;
      IntMatrix inc = wedge_matrix(chain_coord[ci], q);
      long up = page.col0_offset(q, c.upper_level, c.upper);
      long lo = page.col0_offset(q, c.lower_level, c.lower);
      for (long jj = 0; jj < w; ++jj) {
        for (long ii = 0; ii < inc.rows; ++ii) d.at(up + ii, c0 + jj) = inc.at(ii, jj);
        d.at(lo + jj, c0 + jj) -= 1;
      }
      c0 += w;
    }
    page.d1_1.push_back(d);
  }

  // d1 on column two (all in q = 0): alternate over the three faces
  page.d1_2 = IntMatrix(page.col1[0], page.col2[0]);
  for (size_t ci = 0; ci < page.chains2.size(); ++ci) {
    const ChainTriple& c = page.chains2[ci];
    long col = static_cast<long>(ci);
    page.d1_2.at(chain_pos.at({1, c.line, 2, c.plane}), col) += 1;   // drop the point
    page.d1_2.at(chain_pos.at({0, c.point, 2, c.plane}), col) -= 1;  // drop the line
    page.d1_2.at(chain_pos.at({0, c.point, 1, c.line}), col) += 1;   // drop the plane
  }
  if (!mul(page.d1_1[0], page.d1_2).is_zero())
    throw std::logic_error("incidence differentials do not compose to zero");

  // comparison stacks into the ambient torus
  for (long q = 0; q <= N; ++q) {
    IntMatrix stack(binomial_l(N, q), 0);
    for (long r = 0; r < nlev; ++r)
      for (long i = 0; i < page.level_count[r]; ++i)
        stack = hstack(stack, wedge_matrix(arr.levels[static_cast<size_t>(r)][static_cast<size_t>(i)].dir.basis, q));
    if (!mul(stack, page.d1_1[static_cast<size_t>(q)]).is_zero())
      throw std::logic_error("comparison stack does not annihilate the differential");
    page.alpha.push_back(stack);
  }
  return page;
}

ArrangementHomology homology_of_A(const MVPage& page) {
  const long N = page.ambient_rank;
  ArrangementHomology out;
  out.h.assign(static_cast<size_t>(N) + 1, AbelianGroup{0, {}});

  AbelianGroup h0 = cokernel(page.d1_1[0]);
  if (!(h0 == AbelianGroup{1, {}}))
    throw std::logic_error("union of subtori is not connected: H_0 = " + h0.str());
  out.h[0] = h0;

  if (page.codim == 2) {
    long k10 = page.d1_1[0].cols - rank(page.d1_1[0]);
    out.h[1] = AbelianGroup{page.col0[1] + k10, {}};
    for (long q = 2; q <= N; ++q) {
      if (page.col1[static_cast<size_t>(q)] != 0)
        throw std::logic_error("unexpected chain contribution above degree one");
      out.h[static_cast<size_t>(q)] = AbelianGroup{page.col0[static_cast<size_t>(q)], {}};
    }
  } else if (page.codim == 3 && page.nu == 2) {
    // the exterior-algebra model of each subtorus carries zero internal
    // differential and is functorial for lattice inclusions, so the order
    // double complex has zero vertical differential and its total homology
    // splits by rows: H_n = sum over q of H_{n-q}(row q)
    IntMatrix kb = kernel_basis(page.d1_1[0]);
    std::optional<IntMatrix> tri = solve_integer_many(kb, page.d1_2);
    if (!tri) throw std::logic_error("triangle boundary escapes the edge-cycle lattice");
    out.h[1] = direct_sum(cokernel(*tri), cokernel(page.d1_1[1]));

    long e2_20 = page.d1_2.cols - rank(page.d1_2);
    long k11 = page.d1_1[1].cols - rank(page.d1_1[1]);
    out.h[2] = direct_sum(cokernel(page.d1_1[2]), AbelianGroup{k11 + e2_20, {}});
    if (page.col1[3] != 0) throw std::logic_error("unexpected chain contribution in degree three");
    long k12 = page.d1_1[2].cols - rank(page.d1_1[2]);
    out.h[3] = AbelianGroup{page.col0[3] + k12, {}};
    out.h[4] = AbelianGroup{page.col0[4], {}};
  } else {
    throw UnsupportedCodim("second route covers codimension 2, and codimension 3 at rank 6");
  }

  long chi_page = 0, chi_h = 0;
  for (long q = 0; q <= N; ++q) {
    long sgn = (q % 2 == 0) ? 1 : -1;
    chi_page += sgn * (page.col0[static_cast<size_t>(q)] - page.col1[static_cast<size_t>(q)] +
                       page.col2[static_cast<size_t>(q)]);
    chi_h += sgn * out.h[static_cast<size_t>(q)].free_rank;
  }
  if (chi_page != chi_h)
    throw std::logic_error("euler characteristic of the page disagrees with the homology");
  return out;
}

CohomologyResult alpha_assembly(const MVPage& page, const ArrangementHomology& ha) {
  const long N = page.ambient_rank;
  CohomologyResult r;
  r.method = "mv";
  r.ambient_rank = N;
  r.codim = page.codim;
  r.dim = N - page.codim;
  r.degrees.resize(static_cast<size_t>(r.dim) + 1);
  for (long s = 0; s <= r.dim; ++s) {
    long rr = N - s;
    const AbelianGroup& below = ha.h[static_cast<size_t>(rr - 1)];
    AbelianGroup coker_r = cokernel(page.alpha[static_cast<size_t>(rr)]);
    long f = below.free_rank - rank(page.alpha[static_cast<size_t>(rr - 1)]);
    if (f < 0) throw std::logic_error("comparison rank exceeds the homology rank");
    DegreeResult& d = r.degrees[static_cast<size_t>(s)];
    if (below.is_free()) {
      d.group = direct_sum(coker_r, AbelianGroup{f, {}});
      d.status = DegreeStatus::exact;
    } else {
      // the pair-sequence kernel carries the torsion of the homology below;
      // its contribution to this degree is not determined by the page
      d.group = AbelianGroup{coker_r.free_rank + f, {}};
      d.status = DegreeStatus::rational_rank_only;
      d.annotation = "torsion undetermined along this route: the pair-sequence kernel carries " +
                     below.torsion_part().str() + " and the image cokernel carries " +
                     coker_r.torsion_part().str();
    }
  }
  long e = 0;
  for (long s = 0; s <= r.dim; ++s)
    e += (((r.dim - s) % 2 == 0) ? 1 : -1) * r.degrees[static_cast<size_t>(s)].group.free_rank;
  r.euler = e;
  return r;
}

CohomologyResult torus_mv(const SchemeSpec& spec) {
  if (spec.codim != 2 && spec.codim != 3)
    throw UnsupportedCodim("second route covers codimension 2 and 3 only");
  Arrangement arr = close_arrangement(spec);
  MVPage page = build_e1(arr);
  ArrangementHomology ha = homology_of_A(page);
  CohomologyResult r = alpha_assembly(page, ha);
  r.scheme = spec.name;
  return r;
}

CheckReport route_crosscheck(const CohomologyResult& fhk, const CohomologyResult& mv) {
  CheckReport rep;
  rep.expect(fhk.scheme == mv.scheme && fhk.dim == mv.dim,
             "routes describe the same scheme and dimension");
  if (fhk.dim != mv.dim) return rep;
  for (long s = 0; s <= fhk.dim; ++s) {
    const DegreeResult& a = fhk.degrees[static_cast<size_t>(s)];
    const DegreeResult& b = mv.degrees[static_cast<size_t>(s)];
    std::ostringstream os;
    os << "degree " << s << " free rank: " << a.group.free_rank << " vs " << b.group.free_rank;
    rep.expect(a.group.free_rank == b.group.free_rank, os.str());

    auto exact = [](const DegreeResult& d) { return d.status == DegreeStatus::exact; };
    if (exact(a) && exact(b)) {
      std::ostringstream ot;
      ot << "degree " << s << " group: " << a.group.str() << " vs " << b.group.str();
      rep.expect(a.group == b.group, ot.str());
    } else if (a.status == DegreeStatus::extension_ambiguous && exact(b)) {
      bool listed = std::find(a.candidates.begin(), a.candidates.end(), b.group) !=
                    a.candidates.end();
      std::ostringstream ot;
      ot << "degree " << s << ": exact value " << b.group.str() << " among candidates";
      rep.expect(listed, ot.str());
    } else if (b.status == DegreeStatus::extension_ambiguous && exact(a)) {
      bool listed = std::find(b.candidates.begin(), b.candidates.end(), a.group) !=
                    b.candidates.end();
      std::ostringstream ot;
      ot << "degree " << s << ": exact value " << a.group.str() << " among candidates";
      rep.expect(listed, ot.str());
    } else if (a.status == DegreeStatus::extension_ambiguous &&
               b.status == DegreeStatus::extension_ambiguous) {
      std::vector<AbelianGroup> common;
      for (const AbelianGroup& g : a.candidates)
        if (std::find(b.candidates.begin(), b.candidates.end(), g) != b.candidates.end())
          common.push_back(g);
      std::ostringstream ot;
      ot << "degree " << s << ": candidate sets intersect (" << common.size() << " common)";
      rep.expect(!common.empty(), ot.str());
    }
    // a rank-only degree on either side constrains nothing beyond the rank
  }
  {
    std::ostringstream os;
    os << "euler characteristic: " << fhk.euler << " vs " << mv.euler;
    rep.expect(fhk.euler == mv.euler, os.str());
  }
  return rep;
}

}  // namespace projcoh
