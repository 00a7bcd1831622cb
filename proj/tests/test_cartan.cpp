#include <doctest.h>

#include "orbitfold/catalog.hpp"
#include "orbitfold/error.hpp"

using namespace orbitfold;

TEST_CASE("catalog classification") {
  CHECK(catalog("A1").info.kind == Kind::Finite);
  CHECK(catalog("D4").info.kind == Kind::Finite);
  CHECK(catalog("A3aff").info.kind == Kind::Affine);
  CHECK(catalog("C4aff").info.kind == Kind::Affine);
  CHECK(catalog("A3aff").affine_node == 0);
}

TEST_CASE("symmetrizer makes the bilinear form symmetric") {
  for (const auto& name : catalog_names()) {
    Algebra g = catalog(name);
    for (int i = 0; i < g.n(); ++i)
      for (int j = 0; j < g.n(); ++j)
        CHECK(g.info.sym[i] * g.cm.at(i, j) == g.info.sym[j] * g.cm.at(j, i));
  }
}

TEST_CASE("B3 and C2 Cartan entries") {
  Algebra b3 = catalog("B3");
  CHECK(b3.cm.at(1, 2) == -1);
  CHECK(b3.cm.at(2, 1) == -2);
  Algebra c2 = catalog("C2");
  CHECK(c2.cm.at(0, 1) == -2);
  CHECK(c2.cm.at(1, 0) == -1);
}

TEST_CASE("affine null root") {
  Algebra g = catalog("A2aff");
  // marks a_i with a_0 = 1 annihilate the Cartan matrix from the right
  CHECK(g.info.marks == std::vector<long>{1, 1, 1});
  for (int i = 0; i < g.n(); ++i) {
    long acc = 0;
    for (int j = 0; j < g.n(); ++j) acc += g.cm.at(i, j) * g.info.marks[j];
    CHECK(acc == 0);
  }
  CHECK(g.dual_coxeter() == 3);
  CHECK(catalog("C4aff").dual_coxeter() == 5);
}

TEST_CASE("invalid Cartan matrices are rejected") {
  CartanMatrix bad{{{2, -1}, {0, 2}}};  // asymmetric zero pattern
  CHECK_THROWS_AS(validate_cartan(bad), error);
  CartanMatrix bad2{{{2, 1}, {1, 2}}};  // positive off-diagonal
  CHECK_THROWS_AS(validate_cartan(bad2), error);
}
