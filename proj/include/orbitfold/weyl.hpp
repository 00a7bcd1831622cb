#pragma once

#include "orbitfold/fold.hpp"

namespace orbitfold {

// Simple reflection w_i on Dynkin labels (and grade, for affine weights):
// w_i(lambda) = lambda - lambda^i alpha_i.
Weight reflect(const Algebra& alg, int i, const Weight& w);

// Hat reflection: the Weyl-group element of the unfolded algebra induced by
// the simple reflection of orbit t in the folded algebra, returned as a word
// in simple reflections (to be read left to right as application order).
// For s=1 orbits it is the product of the commuting reflections of the
// orbit; an s=2 orbit is a disjoint union of A2 pairs {j, w^{Ni/2} j}, each
// contributing the longest element w_j w_j' w_j of its A2.
std::vector<int> hat_word(const FoldResult& fr, int t);

Weight apply_word(const Algebra& alg, const std::vector<int>& word, Weight w);

// Hat reflection applied to a weight of the unfolded algebra.
Weight hat_reflection(const Algebra& alg, const FoldResult& fr, int t, const Weight& w);

// Sign of a product of hat reflections: each hat generator contributes -1.
int hat_sign(int num_hat_generators);

// Order of w_i w_j in the Weyl group, from A_ij A_ji: 0,1,2,3 -> 2,3,4,6,
// and 0 (infinite) otherwise.
int coxeter_order(const Algebra& alg, int i, int j);

// Verifies (hat_i hat_j)^m = id on the given sample weights, where m is the
// Coxeter order read off from the folded Cartan matrix (skipped, returning
// true, when the order is infinite).
bool coxeter_relation_check(const Algebra& alg, const FoldResult& fr, int t, int u,
                            const std::vector<Weight>& samples);

struct DominantResult {
  Weight weight;
  std::vector<int> word;  // simple reflections applied, in application order
  int sign;               // (-1)^{length}
};

// Reflects negative labels until the weight is dominant.  The step budget is
// 10 * (depth + 1) * n, with depth = sum of |negative labels|; exceeding it
// raises step_budget_exceeded (for affine weights of negative level the loop
// cannot terminate).
DominantResult to_dominant(const Algebra& alg, Weight w);

}  // namespace orbitfold
