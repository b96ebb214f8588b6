#include "projcoh/presented.hpp"

#include <stdexcept>

namespace projcoh {

AbelianGroup group_of(const Presentation& p) { return cokernel(p.rels); }

bool well_defined(const PresentedMorphism& f) {
  IntMatrix image = mul(f.map, f.src.rels);
  HermiteBasis s = hnf(f.dst.rels);
  for (long j = 0; j < image.cols; ++j)
    if (!lattice_contains(s, image.col(j))) return false;
  return true;
}

AbelianGroup morphism_cokernel(const PresentedMorphism& f) {
  return cokernel(hstack(f.map, f.dst.rels));
}

AbelianGroup morphism_kernel(const PresentedMorphism& f) {
  // preimage lattice P = {x in Z^n : map x in colspan(dst.rels)}
  IntMatrix k = kernel_basis(hstack(f.map, f.dst.rels.negated()));
  std::vector<long> top(f.src.gens);
  for (long i = 0; i < f.src.gens; ++i) top[i] = i;
  HermiteBasis p = hnf(k.rows_slice(top));
  // kernel = P / im(src.rels); express the relations in the P basis
  IntMatrix z(p.rank(), f.src.rels.cols);
  for (long j = 0; j < f.src.rels.cols; ++j) {
    std::optional<std::vector<Int>> sol = solve_integer(p.basis, f.src.rels.col(j));
    if (!sol) throw std::logic_error("morphism_kernel: relation outside preimage lattice");
    for (long i = 0; i < p.rank(); ++i) z.at(i, j) = (*sol)[i];
  }
  return cokernel(z);
}

long morphism_rank(const PresentedMorphism& f) {
  return rank(hstack(f.map, f.dst.rels)) - rank(f.dst.rels);
}

}  // namespace projcoh
