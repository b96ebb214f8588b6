#pragma once
#include "projcoh/linalg.hpp"

namespace projcoh {

// finitely generated abelian group presented as Z^gens / colspan(rels)
struct Presentation {
  long gens = 0;
  IntMatrix rels;  // gens x k, k >= 0

  static Presentation free_group(long n) { return {n, IntMatrix(n, 0)}; }
};

AbelianGroup group_of(const Presentation& p);

// morphism (Z^n, R) -> (Z^m, S) induced by an m x n matrix carrying im R into im S
struct PresentedMorphism {
  Presentation src, dst;
  IntMatrix map;
};

// checks that map * src.rels lands in colspan(dst.rels)
bool well_defined(const PresentedMorphism& f);

AbelianGroup morphism_cokernel(const PresentedMorphism& f);
AbelianGroup morphism_kernel(const PresentedMorphism& f);
// rank of the induced map after tensoring with Q
long morphism_rank(const PresentedMorphism& f);

}  // namespace projcoh
