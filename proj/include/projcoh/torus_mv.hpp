#pragma once

// second, independent computation route: the singular classes glue into a
// union of subtori inside T^N.  modelling every subtorus by its exterior
// algebra (zero differential, functorial for lattice inclusions) turns the
// incidence poset into a double complex whose total homology is that of the
// union and splits by rows; the long exact sequence of the torus pair then
// assembles the tiling-space cohomology from it.

#include <string>
#include <vector>

#include "projcoh/arrangement.hpp"
#include "projcoh/cohomology.hpp"

namespace projcoh {

// a strict incidence x < y between classes of different levels
struct ChainPair {
  long lower_level = 0, lower = 0, upper_level = 0, upper = 0;
};

// a two-step chain point < line < plane (codimension 3 only)
struct ChainTriple {
  long point = 0, line = 0, plane = 0;
};

// first page of the poset spectral sequence, with the incidence differentials
// assembled as integer matrices. column p collects length-p chains, carrying
// the q-th exterior power of the smallest stratum's stabilizer.
struct MVPage {
  long ambient_rank = 0, codim = 0, nu = 0;
  std::vector<long> level_rank;   // stabilizer rank per level
  std::vector<long> level_count;  // classes per level
  std::vector<ChainPair> chains1;
  std::vector<ChainTriple> chains2;
  std::vector<long> col0, col1, col2;  // dim E1_{p,q} for p = 0,1,2, q = 0..N
  std::vector<IntMatrix> d1_1;         // [q]: E1_{1,q} -> E1_{0,q}
  IntMatrix d1_2;                      // E1_{2,0} -> E1_{1,0}
  std::vector<IntMatrix> alpha;        // [q]: E1_{0,q} -> Λ_q Z^N, the torus comparison stack

  // column offset of class (level, idx) inside E1_{0,q}
  long col0_offset(long q, long level, long idx) const;
};

// builds the page from the closed arrangement alone (no shared state with the
// group-homology route beyond the arrangement itself)
MVPage build_e1(const Arrangement& arr);

// integral homology of the union of subtori, degrees 0..N.
// hard-fails (std::logic_error) if the structural facts the assembly relies
// on do not hold on the nose: d1 composes to zero, the degree-(1,0) spot is
// exact, the degree-(0,1) quotient is the full lattice, the comparison stack
// is onto in degree one, and the union is connected.
struct ArrangementHomology {
  std::vector<AbelianGroup> h;
};
ArrangementHomology homology_of_A(const MVPage& page);

// tiling-space cohomology via the pair sequence of the torus modulo its
// singular union. exact wherever the relevant homology is torsion-free;
// otherwise that degree carries its rational rank only.
CohomologyResult alpha_assembly(const MVPage& page, const ArrangementHomology& ha);

// driver: close, build, assemble; method = "mv"
CohomologyResult torus_mv(const SchemeSpec& spec);

// degree-by-degree comparison of the two routes; disagreement anywhere that
// both routes make a claim is a hard failure of the report
CheckReport route_crosscheck(const CohomologyResult& fhk, const CohomologyResult& mv);

}  // namespace projcoh
