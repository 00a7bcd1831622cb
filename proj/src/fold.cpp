#include "orbitfold/fold.hpp"

#include <algorithm>
#include <numeric>

#include "orbitfold/error.hpp"

namespace orbitfold {

Automorphism identity_automorphism(int n) {
  Automorphism a;
  a.perm.resize(n);
  for (int i = 0; i < n; ++i) a.perm[i] = i;
  return a;
}

Automorphism compose(const Automorphism& a, const Automorphism& b) {
  Automorphism c;
  c.perm.resize(b.n());
  for (int i = 0; i < b.n(); ++i) c.perm[i] = a.perm[b.perm[i]];
  return c;
}

int validate_automorphism(const Algebra& alg, const Automorphism& aut) {
  int n = alg.n();
  require(aut.n() == n, errc::not_automorphism, "permutation size mismatch");
  std::vector<bool> hit(n, false);
  for (int i = 0; i < n; ++i) {
    require(aut.perm[i] >= 0 && aut.perm[i] < n && !hit[aut.perm[i]],
            errc::not_automorphism, "not a permutation");
    hit[aut.perm[i]] = true;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      require(alg.cm.at(aut.perm[i], aut.perm[j]) == alg.cm.at(i, j),
              errc::not_automorphism, "permutation does not preserve the Cartan matrix");
  // Order = lcm of cycle lengths.
  int order = 1;
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    do {
      seen[j] = true;
      j = aut.perm[j];
      ++len;
    } while (j != i);
    order = std::lcm(order, len);
  }
  return order;
}

OrbitData orbit_data(const Algebra& alg, const Automorphism& aut) {
  OrbitData od;
  od.order = validate_automorphism(alg, aut);
  int n = alg.n();
  od.orbit_of.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    if (od.orbit_of[i] >= 0) continue;
    std::vector<int> orb;
    int j = i;
    do {
      od.orbit_of[j] = static_cast<int>(od.orbits.size());
      orb.push_back(j);
      j = aut.perm[j];
    } while (j != i);
    od.orbits.push_back(std::move(orb));
  }
  for (const auto& orb : od.orbits) {
    od.length.push_back(static_cast<int>(orb.size()));
    long s = 1;
    for (size_t l = 1; l < orb.size(); ++l) s -= alg.cm.at(orb[l], orb[0]);
    od.s.push_back(s);
    if (s != 1 && s != 2) od.linking = false;
  }
  return od;
}

FoldResult fold(const Algebra& alg, const Automorphism& aut) {
  FoldResult fr;
  fr.orbits = orbit_data(alg, aut);
  const OrbitData& od = fr.orbits;
  for (size_t t = 0; t < od.orbits.size(); ++t)
    require(od.s[t] == 1 || od.s[t] == 2, errc::linking_condition_violated,
            "orbit weight s = " + std::to_string(od.s[t]));
  int m = static_cast<int>(od.orbits.size());
  CartanMatrix fc;
  fc.a.assign(m, std::vector<long>(m, 0));
  for (int t = 0; t < m; ++t) {
    for (int u = 0; u < m; ++u) {
      // With labels(alpha_j) = column j of A, the folded simple root over
      // orbit [u] has labels A^fold_{[i][u]} = s_u sum_l A_{i, w^l u}; this
      // is what the induced Weyl action on orbit-constant labels produces.
      int i = od.orbits[t][0];
      long v = 0;
      for (int node : od.orbits[u]) v += alg.cm.at(i, node);
      fc.a[t][u] = od.s[u] * v;
    }
  }
  int affine_node = 0;
  if (alg.affine()) affine_node = od.orbit_of[alg.affine_node];
  fr.alg = make_algebra(std::move(fc), affine_node);
  for (int t = 0; t < m; ++t) {
    int i = od.orbits[t][0];
    fr.dsym.push_back(rat(od.s[t] * od.length[t] * alg.info.sym[i], od.order));
  }
  return fr;
}

RVec project_cartan_element(const FoldResult& fr, const RVec& v) {
  // P(h) = (1/N) sum_l w^l(h), expressed over the folded coroots
  // H^{[i]} = (1/N_i) sum_k H^k (k running over the orbit), which evaluate
  // symmetric weights at their common orbit label.  On invariant h this is
  // the identity map under that identification; the coefficient over orbit
  // [i] is the sum of v over the orbit (= N_i v_i for invariant h).
  RVec out(fr.orbits.orbits.size(), 0);
  for (size_t t = 0; t < fr.orbits.orbits.size(); ++t) {
    Rat sum = 0;
    for (int node : fr.orbits.orbits[t]) sum += v[node];
    out[t] = sum;
  }
  return out;
}

Rat cartan_inner(const Algebra& alg, const RVec& v, const RVec& w) {
  // (H^i|H^j) = A_ij / d_j
  Rat out = 0;
  for (int i = 0; i < alg.n(); ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < alg.n(); ++j)
      out += v[i] * w[j] * rat(alg.cm.at(i, j), alg.info.sym[j]);
  }
  return out;
}

Rat folded_cartan_inner(const FoldResult& fr, const RVec& v, const RVec& w) {
  Rat out = 0;
  int m = fr.alg.n();
  for (int i = 0; i < m; ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < m; ++j)
      out += v[i] * w[j] * Rat(fr.alg.cm.at(i, j)) / fr.dsym[j];
  }
  return out;
}

bool check_norm_relation(const Algebra& alg, const FoldResult& fr, const RVec& v,
                         const RVec& w) {
  RVec pv = project_cartan_element(fr, v);
  RVec pw = project_cartan_element(fr, w);
  // The folded form is N times the restriction of the unfolded form, so for
  // invariant h1, h2 the identification P gives (P h1 | P h2) = N (h1|h2).
  return folded_cartan_inner(fr, pv, pw) ==
         Rat(fr.orbits.order) * cartan_inner(alg, v, w);
}

bool weight_symmetric(const FoldResult& fr, const Weight& w) {
  for (const auto& orb : fr.orbits.orbits)
    for (int node : orb)
      if (w.labels[node] != w.labels[orb[0]]) return false;
  return true;
}

Weight project_weight(const FoldResult& fr, const Weight& w) {
  require(weight_symmetric(fr, w), errc::not_symmetric_weight,
          "weight labels are not constant on orbits");
  Weight out;
  for (const auto& orb : fr.orbits.orbits) out.labels.push_back(w.labels[orb[0]]);
  out.grade = w.grade;
  return out;
}

Weight lift_weight(const FoldResult& fr, const Weight& w) {
  Weight out;
  out.labels.assign(fr.orbits.orbit_of.size(), 0);
  for (size_t i = 0; i < fr.orbits.orbit_of.size(); ++i)
    out.labels[i] = w.labels[fr.orbits.orbit_of[i]];
  out.grade = w.grade;
  return out;
}

}  // namespace orbitfold
