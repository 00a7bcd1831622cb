#include <doctest.h>

#include "orbitfold/catalog.hpp"
#include "orbitfold/characters.hpp"

using namespace orbitfold;

TEST_CASE("adjoint of A2: dimension 8, zero weight multiplicity 2") {
  Algebra g = catalog("A2");
  Weight hw = weight_of({1, 1});
  CHECK(weyl_dimension(g, hw) == 8);
  MultTable t = irreducible_multiplicities(g, hw, 6);
  CHECK(t.at({1, 1}) == 2);  // depth coordinates of the zero weight
  CHECK(t.at({0, 0}) == 1);
  CHECK(t.at({1, 0}) == 1);
  long total = 0;
  for (const auto& [n, m] : t.mult) total += m;
  CHECK(total == 8);
}

TEST_CASE("Weyl dimension formula on known modules") {
  CHECK(weyl_dimension(catalog("A1"), weight_of({3})) == 4);
  CHECK(weyl_dimension(catalog("A3"), weight_of({1, 0, 1})) == 15);
  CHECK(weyl_dimension(catalog("D4"), weight_of({1, 0, 0, 0})) == 8);
  CHECK(weyl_dimension(catalog("B3"), weight_of({0, 0, 1})) == 8);
}

TEST_CASE("Verma multiplicities are Kostant partition counts") {
  Algebra g = catalog("A2");
  MultTable v = verma_multiplicities(g, 4);
  // partitions of n1*a1 + n2*a2 into {a1, a2, a1+a2}
  CHECK(v.at({0, 0}) == 1);
  CHECK(v.at({1, 0}) == 1);
  CHECK(v.at({1, 1}) == 2);
  CHECK(v.at({2, 1}) == 2);
  CHECK(v.at({2, 2}) == 3);
}

TEST_CASE("affine vacuum module of A1 at level 1") {
  Algebra g = catalog("A1aff");
  Weight hw = weight_of({1, 0});
  MultTable t = irreducible_multiplicities(g, hw, depth_for_grade(g, hw, 4));
  QSeries ch = virasoro_specialize(g, t, 4);
  // normalized character sum_m q^{m^2} / phi(q)
  std::vector<long> want = {1, 3, 4, 7, 13};
  for (size_t k = 0; k < want.size(); ++k) {
    auto c = ch.c[k].as_rational();
    REQUIRE(c.has_value());
    CHECK(*c == Rat(want[k]));
  }
}

TEST_CASE("affine root multiplicities: real roots 1, imaginary roots rank") {
  Algebra g = catalog("A2aff");
  MultTable r = root_multiplicities(g, 6);
  CHECK(r.at({1, 0, 0}) == 1);       // real root alpha_0
  CHECK(r.at({1, 1, 1}) == 2);       // delta has multiplicity = horizontal rank
  CHECK(r.at({2, 2, 2}) == 2);       // 2*delta likewise
  CHECK(r.at({2, 1, 1}) == 1);       // real root delta + alpha_0... (alpha_0 + delta)
}
