#include "orbitfold/weyl.hpp"

#include <cstdlib>

#include "orbitfold/error.hpp"

namespace orbitfold {

Weight reflect(const Algebra& alg, int i, const Weight& w) {
  Weight out = w;
  Rat li = w.labels[i];
  if (li == 0) return out;
  for (int j = 0; j < alg.n(); ++j) out.labels[j] -= li * Rat(alg.cm.at(j, i));
  out.grade -= li * alg.root_grade(i);
  return out;
}

std::vector<int> hat_word(const FoldResult& fr, int t) {
  const auto& orb = fr.orbits.orbits[t];
  std::vector<int> word;
  if (fr.orbits.s[t] == 1) {
    // The orbit nodes are mutually disconnected, so the reflections commute.
    word.assign(orb.begin(), orb.end());
    return word;
  }
  // s = 2: the orbit diagram is a disjoint union of A2 pairs {j, w^m j} with
  // m the unique power linking back to the start node.
  // orb is in cyclic order (orb[l] = w^l(orb[0])), so the A2 partner of
  // orb[l] is orb[l + Ni/2].
  int ni = static_cast<int>(orb.size());
  int m = ni / 2;
  require(ni % 2 == 0 && fr.alg.cm.at(t, t) == 2, errc::internal, "s=2 orbit of odd length");
  for (int l = 0; l < m; ++l) {
    int j = orb[l], jp = orb[l + m];
    word.push_back(j);
    word.push_back(jp);
    word.push_back(j);
  }
  return word;
}

Weight apply_word(const Algebra& alg, const std::vector<int>& word, Weight w) {
  for (int i : word) w = reflect(alg, i, w);
  return w;
}

Weight hat_reflection(const Algebra& alg, const FoldResult& fr, int t, const Weight& w) {
  return apply_word(alg, hat_word(fr, t), w);
}

int hat_sign(int num_hat_generators) { return num_hat_generators % 2 == 0 ? 1 : -1; }

int coxeter_order(const Algebra& alg, int i, int j) {
  if (i == j) return 1;
  long p = alg.cm.at(i, j) * alg.cm.at(j, i);
  switch (p) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return 0;  // infinite order
  }
}

bool coxeter_relation_check(const Algebra& alg, const FoldResult& fr, int t, int u,
                            const std::vector<Weight>& samples) {
  int m = coxeter_order(fr.alg, t, u);
  if (m == 0) return true;
  std::vector<int> wt = hat_word(fr, t), wu = hat_word(fr, u);
  for (const Weight& w0 : samples) {
    Weight w = w0;
    for (int r = 0; r < m; ++r) {
      w = apply_word(alg, wu, w);
      w = apply_word(alg, wt, w);
    }
    if (!(w == w0)) return false;
  }
  return true;
}

DominantResult to_dominant(const Algebra& alg, Weight w) {
  DominantResult out;
  out.sign = 1;
  long depth = 0;
  for (const Rat& l : w.labels) {
    Rat a = l < 0 ? -l : l;
    depth += rat_floor(a) + 1;
  }
  long budget = 10 * (depth + 1) * alg.n();
  long steps = 0;
  for (;;) {
    int neg = -1;
    for (int i = 0; i < alg.n(); ++i)
      if (w.labels[i] < 0) { neg = i; break; }
    if (neg < 0) break;
    require(++steps <= budget, errc::step_budget_exceeded,
            "no dominant conjugate found within the step budget");
    w = reflect(alg, neg, w);
    out.word.push_back(neg);
    out.sign = -out.sign;
  }
  out.weight = std::move(w);
  return out;
}

}  // namespace orbitfold
