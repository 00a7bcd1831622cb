#include <doctest.h>

#include "orbitfold/catalog.hpp"
#include "orbitfold/error.hpp"
#include "orbitfold/fold.hpp"

using namespace orbitfold;

namespace {
using RMatI = std::vector<std::vector<long>>;

// Display convention: row i holds the Dynkin labels of alpha_i, i.e. the
// transpose of the internal pairing matrix.
RMatI display(const CartanMatrix& cm) {
  int n = cm.n();
  RMatI out(n, std::vector<long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = cm.at(j, i);
  return out;
}
}  // namespace

TEST_CASE("A3 order-2 flip folds to A1 with asymmetric pairing") {
  Algebra g = catalog("A3");
  FoldResult fr = fold(g, {{2, 1, 0}});
  CHECK(fr.alg.n() == 2);
  CHECK(display(fr.alg.cm) == RMatI{{2, -2}, {-1, 2}});
  CHECK(fr.orbits.order == 2);
  CHECK(fr.orbits.linking);  // all orbit weights s lie in {1, 2}
}

TEST_CASE("D4 triality folds to the rank-2 orbit algebra") {
  Algebra g = catalog("D4");
  FoldResult fr = fold(g, {{2, 1, 3, 0}});
  CHECK(display(fr.alg.cm) == RMatI{{2, -3}, {-1, 2}});
  CHECK(fr.orbits.order == 3);
}

TEST_CASE("A2 flip hits the linking condition") {
  Algebra g = catalog("A2");
  FoldResult fr = fold(g, {{1, 0}});
  CHECK(fr.orbits.linking);
  CHECK(display(fr.alg.cm) == RMatI{{2}});
}

TEST_CASE("affine half-rotation of A3aff") {
  Algebra g = catalog("A3aff");
  FoldResult fr = fold(g, {{2, 3, 0, 1}});
  CHECK(fr.alg.affine());
  CHECK(display(fr.alg.cm) == RMatI{{2, -2}, {-2, 2}});
}

TEST_CASE("C4aff flip folds to rank-2 affine") {
  Algebra g = catalog("C4aff");
  FoldResult fr = fold(g, {{4, 3, 2, 1, 0}});
  CHECK(fr.alg.affine());
  CHECK(display(fr.alg.cm) == RMatI{{2, -2, 0}, {-1, 2, -2}, {0, -1, 2}});
}

TEST_CASE("identity fold returns the original matrix") {
  for (const char* name : {"A4", "B3", "D4", "A3aff"}) {
    Algebra g = catalog(name);
    FoldResult fr = fold(g, identity_automorphism(g.n()));
    CHECK(fr.alg.cm == g.cm);
  }
}

TEST_CASE("non-automorphisms are rejected") {
  Algebra g = catalog("A3");
  CHECK_THROWS_AS(fold(g, {{1, 0, 2}}), error);   // not a diagram symmetry
  CHECK_THROWS_AS(fold(g, {{0, 0, 1}}), error);   // not a permutation
}

TEST_CASE("weight projection and lifting are mutually consistent") {
  Algebra g = catalog("A3");
  FoldResult fr = fold(g, {{2, 1, 0}});
  Weight w = weight_of({3, 5, 3});
  CHECK(weight_symmetric(fr, w));
  Weight p = project_weight(fr, w);
  CHECK(lift_weight(fr, p) == w);
  CHECK_FALSE(weight_symmetric(fr, weight_of({1, 0, 2})));
}
