#include <doctest.h>

#include <random>

#include "projcoh/exterior.hpp"
#include "projcoh/presented.hpp"

using namespace projcoh;

TEST_CASE("wedge index enumeration") {
  WedgeIndex w = wedge_index(4, 2);
  REQUIRE(w.subsets.size() == 6);
  CHECK(w.subsets[0] == std::vector<long>{0, 1});
  CHECK(w.subsets[1] == std::vector<long>{0, 2});
  CHECK(w.subsets[2] == std::vector<long>{0, 3});
  CHECK(w.subsets[3] == std::vector<long>{1, 2});
  CHECK(w.subsets[4] == std::vector<long>{1, 3});
  CHECK(w.subsets[5] == std::vector<long>{2, 3});
  CHECK(wedge_index(5, 0).subsets == std::vector<std::vector<long>>{{}});
  CHECK(wedge_index(3, 4).subsets.empty());
}

TEST_CASE("exterior power oracle cases") {
  // stabilizer <v1, v2 - v4> in Z^4, degree 2
  IntMatrix b(4, 2);
  b.at(0, 0) = 1;
  b.at(1, 1) = 1;
  b.at(3, 1) = -1;
  ExteriorMap m = exterior_power_map(hnf(b), 2);
  REQUIRE(m.matrix.rows == 6);
  REQUIRE(m.matrix.cols == 1);
  CHECK(m.matrix.col(0) ==
        std::vector<Int>{Int(1), Int(0), Int(-1), Int(0), Int(0), Int(0)});

  // full lattice: identity of size C(N,k)
  ExteriorMap full = exterior_power_map(hnf(IntMatrix::identity(4)), 2);
  CHECK(full.matrix == IntMatrix::identity(6));

  // k = 0: the 1x1 identity
  CHECK(exterior_power_map(hnf(b), 0).matrix == IntMatrix::from_rows({{1}}));

  // k > rank of the sublattice: C(N,k) x 0
  ExteriorMap over = exterior_power_map(hnf(b), 3);
  CHECK(over.matrix.rows == 4);
  CHECK(over.matrix.cols == 0);

  CHECK(generated_rank({}) == 0);
  CHECK(generated_rank({full}) == 6);
}

TEST_CASE("functoriality on nested sublattices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> ent(-3, 3);
  int done = 0;
  while (done < 25) {
    long n = 3 + static_cast<long>(rng() % 3);  // ambient 3..5
    long mid = 1 + static_cast<long>(rng() % n);
    long low = 1 + static_cast<long>(rng() % mid);
    IntMatrix a(n, mid), c(mid, low);
    for (Int& e : a.entries) e = ent(rng);
    for (Int& e : c.entries) e = ent(rng);
    if (rank(a) < mid || rank(c) < low) continue;
    ++done;
    IntMatrix inner = mul(a, c);  // L' = a*c inside L = a
    for (long k = 0; k <= std::min(low, static_cast<long>(3)); ++k) {
      CHECK(wedge_matrix(inner, k) == mul(wedge_matrix(a, k), wedge_matrix(c, k)));
    }
    // rank of the wedge of a full-column-rank matrix
    for (long k = 0; k <= mid; ++k)
      CHECK(rank(wedge_matrix(a, k)) == binomial_l(mid, k));
  }
}

TEST_CASE("determinant consistency at top degree") {
  IntMatrix a = IntMatrix::from_rows({{2, 1, 0}, {0, 1, 0}, {1, 1, 3}});
  HermiteBasis h = hnf(a);
  ExteriorMap top = exterior_power_map(h, 3);
  REQUIRE(top.matrix.rows == 1);
  REQUIRE(top.matrix.cols == 1);
  CHECK(top.matrix.at(0, 0) == abs(det(a)));  // HNF pivots positive
}

TEST_CASE("presented group machinery") {
  // Z/2 --x2--> Z/4 is injective with cokernel Z/2
  PresentedMorphism f{{1, IntMatrix::from_rows({{2}})},
                      {1, IntMatrix::from_rows({{4}})},
                      IntMatrix::from_rows({{2}})};
  CHECK(well_defined(f));
  CHECK(morphism_kernel(f).is_trivial());
  CHECK(morphism_cokernel(f) == AbelianGroup{0, {Int(2)}});
  CHECK(morphism_rank(f) == 0);

  // natural surjection Z/4 -> Z/2 has kernel Z/2
  PresentedMorphism g{{1, IntMatrix::from_rows({{4}})},
                      {1, IntMatrix::from_rows({{2}})},
                      IntMatrix::from_rows({{1}})};
  CHECK(well_defined(g));
  CHECK(morphism_kernel(g) == AbelianGroup{0, {Int(2)}});
  CHECK(morphism_cokernel(g).is_trivial());

  // Z^2 --[[1,0],[0,2]]--> Z^2 plain lattice map
  PresentedMorphism h{Presentation::free_group(2), Presentation::free_group(2),
                      IntMatrix::from_rows({{1, 0}, {0, 2}})};
  CHECK(morphism_kernel(h).is_trivial());
  CHECK(morphism_cokernel(h) == AbelianGroup{0, {Int(2)}});
  CHECK(morphism_rank(h) == 2);

  // projection Z^2 -> Z has free kernel of rank 1
  PresentedMorphism pr{Presentation::free_group(2), Presentation::free_group(1),
                       IntMatrix::from_rows({{1, 0}})};
  CHECK(morphism_kernel(pr) == AbelianGroup{1, {}});

  // Z -> Z/6, 1 |-> 2: kernel 3Z (free rank 1), cokernel Z/2
  PresentedMorphism q{Presentation::free_group(1),
                      {1, IntMatrix::from_rows({{6}})},
                      IntMatrix::from_rows({{2}})};
  CHECK(morphism_kernel(q) == AbelianGroup{1, {}});
  CHECK(morphism_cokernel(q) == AbelianGroup{0, {Int(2)}});
  CHECK(morphism_rank(q) == 0);
}
