#pragma once

#include "orbitfold/cartan.hpp"

namespace orbitfold {

// A diagram automorphism, given as a permutation of the nodes.
struct Automorphism {
  std::vector<int> perm;
  int apply(int i) const { return perm[i]; }
  int n() const { return static_cast<int>(perm.size()); }
};

Automorphism identity_automorphism(int n);
Automorphism compose(const Automorphism& a, const Automorphism& b);  // a after b

// Checks that perm is a permutation with A_{w(i),w(j)} = A_{ij}; returns its
// order.  Throws not_automorphism.
int validate_automorphism(const Algebra& alg, const Automorphism& aut);

struct OrbitData {
  int order = 1;                        // N, order of the automorphism
  std::vector<std::vector<int>> orbits; // each orbit in cyclic order i, w(i), ...,
                                        // sorted by smallest element
  std::vector<int> orbit_of;            // node -> orbit index
  std::vector<int> length;              // N_i per orbit
  std::vector<long> s;                  // orbit weight s_i = 1 - sum A_{w^l i, i}
  bool linking = true;                  // all s_i in {1, 2}
};

OrbitData orbit_data(const Algebra& alg, const Automorphism& aut);

// The folded (orbit) algebra.
struct FoldResult {
  Algebra alg;            // validated folded algebra
  OrbitData orbits;
  std::vector<Rat> dsym;  // folded symmetrizer in the scale s_i N_i d_i / N
};

// Folds along the automorphism; throws linking_condition_violated when some
// s_i is outside {1, 2}.  For affine input the folded affine node is the
// orbit of the input's affine node.
FoldResult fold(const Algebra& alg, const Automorphism& aut);

// Projection P(h) = (1/N) sum_l w^l(h) of a Cartan subalgebra element, given
// by coefficients v_i over the simple coroots H^i; the result is expressed
// over the folded coroots H^{[i]} = (1/N_i) sum_{k in orbit} H^k.  On
// automorphism-invariant h this is the natural identification.
RVec project_cartan_element(const FoldResult& fr, const RVec& v);

// Bilinear form on Cartan elements in coroot coordinates, (H^i|H^j) = A_ij/d_j.
Rat cartan_inner(const Algebra& alg, const RVec& v, const RVec& w);
// Folded form over the folded coroots; equals N times the restriction of the
// unfolded form.
Rat folded_cartan_inner(const FoldResult& fr, const RVec& v, const RVec& w);

// Verifies (P(h1)|P(h2)) = N (h1|h2) for the given elements, the left side
// evaluated with the folded form.  Holds for automorphism-invariant inputs.
bool check_norm_relation(const Algebra& alg, const FoldResult& fr, const RVec& v,
                         const RVec& w);

// True if the weight is symmetric (labels constant on orbits).
bool weight_symmetric(const FoldResult& fr, const Weight& w);

// Restriction of a symmetric weight to the orbit algebra: the orbit label is
// the common label on the orbit; the grade is preserved.  Throws
// not_symmetric_weight.
Weight project_weight(const FoldResult& fr, const Weight& w);

// Inverse of project_weight.
Weight lift_weight(const FoldResult& fr, const Weight& w);

}  // namespace orbitfold
