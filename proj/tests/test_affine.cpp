#include <doctest.h>

#include "orbitfold/affine.hpp"
#include "orbitfold/catalog.hpp"
#include "orbitfold/coset.hpp"

using namespace orbitfold;

TEST_CASE("conformal weights and central charges of A1 at small levels") {
  Algebra g = catalog("A1aff");
  CHECK(central_charge(g, 1) == Rat(1));
  CHECK(central_charge(g, 2) == rat(3, 2));
  CHECK(conformal_weight(g, weight_of({1, 1})) == rat(3, 16));  // level 2, spin 1/2
  CHECK(conformal_weight(g, weight_of({2, 2})) == rat(1, 3));   // level 4, spin 1
  CHECK(conformal_weight(g, weight_of({1, 0})) == 0);           // vacuum
}

TEST_CASE("dominant weight counts match level truncation") {
  Algebra g = catalog("A1aff");
  CHECK(dominant_weights(g, 1).size() == 2);
  CHECK(dominant_weights(g, 4).size() == 5);
  CHECK(dominant_weights(catalog("A2aff"), 1).size() == 3);
}

TEST_CASE("modular data is consistent at small levels") {
  for (auto [name, k] : {std::pair{"A1aff", 3L}, {"A2aff", 1L}}) {
    ModularData md = kac_peterson(catalog(name), k);
    ModularChecks c = modular_consistency(md.S, md.T);
    CHECK(c.ok(1e-10));
  }
}

TEST_CASE("simple currents of A1 level 2 and their monodromy charges") {
  Algebra g = catalog("A1aff");
  auto cur = simple_currents(g, 2);
  REQUIRE(cur.size() == 1);
  CHECK(cur[0].order == 2);
  Weight vac = weight_of({2, 0});
  CHECK(current_act(cur[0].aut, vac) == weight_of({0, 2}));
  CHECK(rat_mod1(monodromy_charge(g, cur[0].aut, weight_of({1, 1}))) == rat(1, 2));
  CHECK(rat_mod1(monodromy_charge(g, cur[0].aut, vac)) == 0);
}

TEST_CASE("folded dual labels of the C4aff flip") {
  Algebra g = catalog("C4aff");
  Automorphism aut{{4, 3, 2, 1, 0}};
  FoldResult fr = fold(g, aut);
  DualLabels dl = folded_dual_labels(g, fr);
  CHECK(fr.orbits.order * dl.gvee == Rat(g.dual_coxeter()));
  Weight sym = weight_of({1, 1, 0, 1, 1});  // level 4, flip-symmetric
  CHECK(folded_level(g, fr, project_weight(fr, sym)) == 2);
}

TEST_CASE("conformal weight matching holds for the half-rotation of A3aff") {
  Algebra g = catalog("A3aff");
  Automorphism aut{{2, 3, 0, 1}};
  FoldResult fr = fold(g, aut);
  for (long k : {1L, 2L}) {
    for (const Weight& w : dominant_weights(g, k)) {
      if (!weight_symmetric(fr, w)) continue;
      CHECK(check_cd2(g, fr, w).holds);
    }
  }
}
