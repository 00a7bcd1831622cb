#include <doctest.h>

#include "orbitfold/catalog.hpp"
#include "orbitfold/fold.hpp"
#include "orbitfold/weyl.hpp"

using namespace orbitfold;

namespace {
Weight perm_weight(const Automorphism& aut, const Weight& w) {
  Weight out = w;
  for (int i = 0; i < aut.n(); ++i) out.labels[aut.apply(i)] = w.labels[i];
  return out;
}
}  // namespace

TEST_CASE("simple reflections are involutive and negate the i-th label") {
  Algebra g = catalog("B3");
  Weight w = weight_of({2, -1, 3});
  for (int i = 0; i < g.n(); ++i) {
    Weight r = reflect(g, i, w);
    CHECK(reflect(g, i, r) == w);
    CHECK(r.labels[i] == -w.labels[i]);
  }
}

TEST_CASE("reflections preserve the bilinear form") {
  Algebra g = catalog("C2");
  Weight x = weight_of({1, 2}), y = weight_of({-3, 1});
  for (int i = 0; i < g.n(); ++i)
    CHECK(g.inner(reflect(g, i, x), reflect(g, i, y)) == g.inner(x, y));
}

TEST_CASE("orbit Weyl group embeds into the symmetric part") {
  Algebra g = catalog("A3");
  Automorphism aut{{2, 1, 0}};
  FoldResult fr = fold(g, aut);
  for (int t = 0; t < fr.alg.n(); ++t) {
    // hat-reflections commute with the automorphism action on weights
    Weight w = weight_of({1, -2, 4});
    Weight a = hat_reflection(g, fr, t, perm_weight(aut, w));
    Weight b = perm_weight(aut, hat_reflection(g, fr, t, w));
    CHECK(a == b);
    // and project to the folded simple reflection on symmetric weights
    Weight s = weight_of({3, -1, 3});
    CHECK(project_weight(fr, hat_reflection(g, fr, t, s)) ==
          reflect(fr.alg, t, project_weight(fr, s)));
  }
}

TEST_CASE("hat-reflection Coxeter relations match the folded Cartan matrix") {
  Algebra g = catalog("D4");
  FoldResult fr = fold(g, {{2, 1, 3, 0}});
  std::vector<Weight> samples = {weight_of({1, 0, 0, 0}), weight_of({2, -1, 3, 5}),
                                 weight_of({-4, 2, 1, -1}), weight_of({0, 7, -2, 3})};
  for (int t = 0; t < fr.alg.n(); ++t)
    for (int u = 0; u < fr.alg.n(); ++u)
      CHECK(coxeter_relation_check(g, fr, t, u, samples));
}

TEST_CASE("to_dominant reaches the dominant chamber with a valid word") {
  Algebra g = catalog("A4");
  Weight w = weight_of({-2, 3, -5, 1});
  DominantResult d = to_dominant(g, w);
  for (const Rat& l : d.weight.labels) CHECK(l >= 0);
  CHECK(apply_word(g, d.word, w) == d.weight);
  CHECK(d.sign == (d.word.size() % 2 ? -1 : 1));
}
