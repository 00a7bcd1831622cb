#include <doctest.h>

#include <set>

#include "orbitfold/catalog.hpp"
#include "orbitfold/coset.hpp"

using namespace orbitfold;

namespace {
std::vector<long> int_coeffs(const QSeries& s) {
  std::vector<long> out;
  for (const auto& c : s.c) {
    auto r = c.as_rational();
    REQUIRE(r.has_value());
    REQUIRE(r->get_den() == 1);
    out.push_back(r->get_num().get_si());
  }
  return out;
}
}  // namespace

TEST_CASE("the (A1;1,1) coset is the Ising model") {
  CosetSpec spec = build_coset(catalog("A1"), 1, 1);
  CHECK(spec.cdot == rat(1, 2));
  IdGroup g = identification_group(spec);
  CHECK(g.elems.size() == 2);
  auto orbits = selection_and_orbits(spec, g);
  CHECK(orbits.size() == 3);
  for (const auto& o : orbits) CHECK(o.stab.size() == 1);  // all free

  ResolvedSpectrum rs = resolve(spec, g, orbits, 6);
  REQUIRE(rs.fields.size() == 3);
  std::set<Rat> exps;
  for (const auto& f : rs.fields) exps.insert(f.exponent - (-spec.cdot / 24));
  CHECK(exps == std::set<Rat>{Rat(0), rat(1, 2), rat(1, 16)});

  // vacuum character 1 + q^2 + q^3 + 2q^4 + 2q^5 + 3q^6 + ...
  std::vector<long> vac = int_coeffs(rs.fields[rs.vacuum].character);
  REQUIRE(vac.size() >= 7);
  CHECK(std::vector<long>(vac.begin(), vac.begin() + 7) ==
        std::vector<long>{1, 0, 1, 1, 2, 2, 3});

  CHECK(modular_consistency(rs.S, rs.T).ok(1e-12));
  VerlindeReport vr = verlinde_check(rs.S, rs.vacuum);
  CHECK(vr.integral);
  // sigma x sigma = 1 + epsilon: the sigma row of its own fusion matrix
  int sigma = -1;
  for (size_t i = 0; i < rs.fields.size(); ++i)
    if (rs.fields[i].exponent - (-spec.cdot / 24) == rat(1, 16)) sigma = (int)i;
  REQUIRE(sigma >= 0);
  int total = 0;
  for (int k = 0; k < 3; ++k) total += vr.fusion[sigma](sigma, k);
  CHECK(total == 2);
  CHECK(vr.fusion[sigma](sigma, sigma) == 0);
}

TEST_CASE("branching functions are constant on identification orbits") {
  CosetSpec spec = build_coset(catalog("A1"), 1, 1);
  IdGroup g = identification_group(spec);
  for (const auto& orb : selection_and_orbits(spec, g)) {
    QSeries ref = branching_function(spec, orb.rep, 3);
    // lead exponents of orbit members may differ by zero-padded integers
    for (const auto& m : orb.members)
      CHECK(qsub(branching_function(spec, m, 3), ref).is_zero());
  }
}

TEST_CASE("selection rule: forbidden triples have vanishing branching functions") {
  CosetSpec spec = build_coset(catalog("A1"), 1, 1);
  // (0; 0; 1): spins 0 + 0 cannot contain spin 1/2
  Triple bad = {0, 0, 1};
  CHECK(branching_function(spec, bad, 4).is_zero());
}

TEST_CASE("the (A1;2,2) coset resolves its fixed point into integer characters") {
  CosetSpec spec = build_coset(catalog("A1"), 2, 2);
  CHECK(spec.cdot == Rat(1));
  IdGroup g = identification_group(spec);
  auto orbits = selection_and_orbits(spec, g);
  CHECK(orbits.size() == 12);
  int fixed = -1;
  for (size_t i = 0; i < orbits.size(); ++i)
    if (orbits[i].stab.size() == 2) {
      CHECK(fixed == -1);
      fixed = (int)i;
      CHECK(orbits[i].rep == Triple{1, 1, 2});
    }
  REQUIRE(fixed >= 0);

  ResolvedSpectrum rs = resolve(spec, g, orbits, 6);
  CHECK(rs.fields.size() == 13);
  std::map<int, std::vector<long>> resolved;  // psi -> coefficients from grade 0
  std::map<int, Rat> exps;
  for (const auto& f : rs.fields)
    if (f.orbit == fixed) {
      resolved[f.psi] = int_coeffs(f.character);
      exps[f.psi] = f.exponent;
    }
  REQUIRE(resolved.size() == 2);
  CHECK(exps[0] == 0);
  CHECK(exps[1] == 1);
  CHECK(std::vector<long>(resolved[0].begin(), resolved[0].begin() + 7) ==
        std::vector<long>{1, 1, 2, 3, 5, 8, 12});
  CHECK(std::vector<long>(resolved[1].begin(), resolved[1].begin() + 7) ==
        std::vector<long>{0, 1, 2, 3, 5, 8, 12});

  // the two resolved characters recombine to the ordinary branching function
  QSeries b = branching_function(spec, orbits[fixed].rep, 6);
  const ResolvedField* fp[2] = {nullptr, nullptr};
  for (const auto& f : rs.fields)
    if (f.orbit == fixed) fp[f.psi] = &f;
  REQUIRE((fp[0] && fp[1]));
  CHECK(qadd(fp[0]->character, fp[1]->character) == b);

  CHECK(modular_consistency(rs.S, rs.T).ok(1e-12));
  CHECK(verlinde_check(rs.S, rs.vacuum).integral);
}
