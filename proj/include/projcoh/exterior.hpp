#pragma once
#include <vector>

#include "projcoh/linalg.hpp"

namespace projcoh {

// the C(N,k) strictly increasing k-subsets of {0..N-1}, lexicographic
struct WedgeIndex {
  long ambient_rank = 0;
  long degree = 0;
  std::vector<std::vector<long>> subsets;
};

WedgeIndex wedge_index(long n, long k);

// matrix of the functor Λ_k applied to an integer matrix (all k x k minors,
// rows and columns in lexicographic subset order, no extra sign)
IntMatrix wedge_matrix(const IntMatrix& m, long k);

struct ExteriorMap {
  HermiteBasis source_basis;
  long degree = 0;
  IntMatrix matrix;  // C(N,k) x C(m,k)
};

// Λ_k of the inclusion of a sublattice into Z^N
ExteriorMap exterior_power_map(const HermiteBasis& basis, long k);

// rank of the subgroup of Λ_k Z^N generated by all image columns (R_k input)
long generated_rank(const std::vector<ExteriorMap>& maps);

}  // namespace projcoh
