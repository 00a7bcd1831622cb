#include <doctest.h>

#include "orbitfold/catalog.hpp"
#include "orbitfold/json_io.hpp"

using namespace orbitfold;

TEST_CASE("rational round trip") {
  for (const Rat& q : {rat(3, 16), Rat(-7), Rat(0), rat(-1, 48)})
    CHECK(rat_parse(rat_json(q)) == q);
}

TEST_CASE("Cartan matrix round trip through the row convention") {
  for (const char* name : {"A3", "B3", "C2", "C4aff"}) {
    Algebra g = catalog(name);
    CHECK(cartan_parse(cartan_json(g.cm)) == g.cm);
  }
}

TEST_CASE("displayed Cartan rows carry the Dynkin labels of the rows' roots") {
  Algebra g = catalog("C2");
  Json j = cartan_json(g.cm);
  // row i, column j of the display is the j-th label of alpha_i
  for (int i = 0; i < g.n(); ++i)
    for (int k = 0; k < g.n(); ++k)
      CHECK(j[i][k].get<long>() == g.simple_root(i).labels[k]);
}

TEST_CASE("weight round trip keeps the grade") {
  Weight w = weight_of({1, -2, 0}, rat(-3, 4));
  CHECK(weight_parse(weight_json(w)) == w);
}

TEST_CASE("folded Cartan display of the A3 flip") {
  Algebra g = catalog("A3");
  FoldResult fr = fold(g, {{2, 1, 0}});
  Json j = fold_json(g, fr);
  Json cm = j["orbit_algebra"]["cartan"];
  CHECK(cm[0][0].get<long>() == 2);
  CHECK(cm[0][1].get<long>() == -2);
  CHECK(cm[1][0].get<long>() == -1);
  CHECK(cm[1][1].get<long>() == 2);
  CHECK(j["order"].get<int>() == 2);
  CHECK(j["linking_condition"].get<bool>() == true);
}

TEST_CASE("algebra specs accept catalog names") {
  Algebra g = algebra_from_spec("D4");
  CHECK(g.n() == 4);
  CHECK_THROWS(algebra_from_spec("Z9"));
}

TEST_CASE("permutation and weight parsing") {
  Automorphism aut = perm_parse("2,1,0", 3);
  CHECK(aut.perm == std::vector<int>{2, 1, 0});
  CHECK_THROWS(perm_parse("0,0,1", 3));
  Weight hw = hw_parse("1,0,1", 3);
  CHECK(hw == weight_of({1, 0, 1}));
  CHECK_THROWS(hw_parse("1,2", 3));
}
