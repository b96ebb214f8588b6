#pragma once
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "projcoh/intmatrix.hpp"

namespace projcoh {

// Canonical basis of a sublattice of Z^ambient_rank: columns in column-style
// Hermite normal form (pivot rows strictly increasing, pivots positive,
// entries left of a pivot reduced into [0, pivot)). Zero columns dropped, so
// equal sublattices compare equal.
struct HermiteBasis {
  long ambient_rank = 0;
  IntMatrix basis;  // ambient_rank x rank, may have 0 columns

  bool operator==(const HermiteBasis& o) const = default;
  long rank() const { return basis.cols; }
};

struct SmithDecomposition {
  IntMatrix u, s, v;          // u*a*v = s, u and v unimodular
  std::vector<Int> invariants;  // positive diagonal entries, d1 | d2 | ...
};

// Finitely generated abelian group up to isomorphism.
struct AbelianGroup {
  long free_rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1, ascending divisibility

  bool operator==(const AbelianGroup& o) const = default;
  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  bool is_free() const { return torsion.empty(); }
  AbelianGroup torsion_part() const { return {0, torsion}; }
  std::string str() const;  // e.g. "Z^24 + Z_5^2", "0"
};

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);
// all isomorphism types of subgroups of the (finite) torsion part of g,
// deterministic order (by order, then invariants); includes the trivial group
std::vector<AbelianGroup> subgroup_types(const AbelianGroup& g);

// --- normal forms -----------------------------------------------------------

HermiteBasis hnf(const IntMatrix& a);
SmithDecomposition snf(const IntMatrix& a);
std::vector<Int> snf_invariants(const IntMatrix& a);  // no transforms
long rank(const IntMatrix& a);
long rank(const RatMatrix& a);

// columns = HNF-canonical basis of {x in Z^cols : a x = 0} (saturated)
IntMatrix kernel_basis(const IntMatrix& a);

// Z^rows / colspan(a)
AbelianGroup cokernel(const IntMatrix& a);

// --- lattice operations ------------------------------------------------------

HermiteBasis lattice_sum(const std::vector<HermiteBasis>& xs);
HermiteBasis lattice_intersection(const HermiteBasis& x, const HermiteBasis& y);
// Z^N  ∩  Q-span(x)
HermiteBasis saturate(const HermiteBasis& x);
bool lattice_contains(const HermiteBasis& lat, const std::vector<Int>& v);
// span containment test: Q-span(x) ⊆ Q-span(y)
bool span_contained(const IntMatrix& x, const IntMatrix& y);
// all representatives of super/sub (requires sub ⊆ super of equal rank,
// i.e. finite index); deterministic order, ambient coordinates
std::vector<std::vector<Int>> coset_representatives(const HermiteBasis& sub,
                                                    const HermiteBasis& super);

// --- solving -----------------------------------------------------------------

// one rational solution of a x = b, if any
std::optional<std::vector<Rat>> solve_rational(const RatMatrix& a, const std::vector<Rat>& b);

// integer solutions x of  a x ≡ b  (mod colspan(l)):  particular + homogeneous.
// absent when unsolvable.
struct ModLatticeSolution {
  std::vector<Rat> particular;  // integer-valued, stored rational
  HermiteBasis homogeneous;     // lattice of homogeneous integer solutions
};
std::optional<ModLatticeSolution> solve_mod_lattice(const RatMatrix& a, const std::vector<Rat>& b,
                                                    const HermiteBasis& l);

// integer solutions of a x = b over Z (particular only), if any
std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, const std::vector<Int>& b);

// columnwise integer solutions of a X = B (particular only); absent when any
// column is unsolvable.  one normal form serves the whole batch
std::optional<IntMatrix> solve_integer_many(const IntMatrix& a, const IntMatrix& b);

}  // namespace projcoh
