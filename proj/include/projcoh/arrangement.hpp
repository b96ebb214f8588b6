#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "projcoh/linalg.hpp"
#include "projcoh/scheme.hpp"

namespace projcoh {

// the scheme generates infinitely many translation orbits (an intersection
// direction whose rank is not a multiple of ν)
struct InfiniteOrbits : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// defensive: the intersection closure failed to stabilize within codim passes
struct DepthExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Γ-translation class of a singular affine subspace, in the lifted picture:
// the direction doubles as the stabilizer Γ^Θ (it is saturated), the offset is
// canonical modulo Z^N + Q-span(dir)
struct AffineClass {
  HermiteBasis dir;
  std::vector<Rat> offset;
  long dim_perp = 0;  // internal dimension r = rank(dir)/ν

  bool same_class(const AffineClass& o) const {
    return dir == o.dir && offset == o.offset;
  }
  bool operator==(const AffineClass&) const = default;
};

// deterministic ordering: (rank, direction entries row-major, offset entries)
bool class_less(const AffineClass& a, const AffineClass& b);

// one r-class lying inside a parent class Θ: the ambient class index at its
// level, plus a representative offset relative to Θ (a vector in span dir_Θ)
struct IncidenceEntry {
  long cls = 0;
  std::vector<Rat> rel_offset;
};

struct Arrangement {
  long ambient_rank = 0;
  long codim = 0;
  long nu = 0;
  // levels[r] = classes of internal dimension r, r = 0..codim-1, sorted
  std::vector<std::vector<AffineClass>> levels;
  // incidence[k][i][r] = classes of level r < k inside levels[k][i], one entry
  // per incident ambient class (a Γ-class contributes at most one Γ^Θ-orbit)
  std::vector<std::vector<std::vector<std::vector<IncidenceEntry>>>> incidence;

  const std::vector<IncidenceEntry>& incident(long k, long i, long r) const {
    return incidence[k][i][r];
  }
};

// all Γ-orbit classes of nonempty components A ∩ (B + γ), γ ∈ Z^N, with the
// number of distinct component orbits mapping to that class (provably 1; kept
// for bookkeeping). Throws InfiniteOrbits when a component direction has rank
// not divisible by nu.
std::vector<std::pair<AffineClass, long>> intersect_classes(const AffineClass& a,
                                                            const AffineClass& b,
                                                            long ambient_rank, long nu);

// intersection closure of the scheme's families down to point classes
Arrangement close_arrangement(const SchemeSpec& s);

// count tables: L[r] = |levels[r]|, L_sub[k][i][r] = |incidence[k][i][r]|, and
// the aggregates consumed by the codimension-3 rank formulas
struct CountTables {
  std::vector<long> L;
  std::vector<std::vector<std::vector<long>>> L_sub;
  long sum_L1_alpha = 0;  // Σ_α L₁^α over top-level classes α
  long sum_L0_alpha = 0;  // Σ_α L₀^α
  long sum_L0_theta = 0;  // Σ_θ L₀^θ over level-1 classes θ
  long sum_nested_L0 = 0; // Σ_α Σ_{θ ∈ I₁^α} L₀^θ
};
CountTables counts(const Arrangement& arr);

}  // namespace projcoh
