#pragma once

#include <memory>
#include <string>
#include <vector>

#include "orbitfold/rational.hpp"

namespace orbitfold {

enum class Kind { Finite, Affine, Indefinite };

const char* kind_name(Kind k);

// A generalized Cartan matrix with integer entries, 0-based node labels.
struct CartanMatrix {
  std::vector<std::vector<long>> a;
  int n() const { return static_cast<int>(a.size()); }
  long at(int i, int j) const { return a[i][j]; }
  bool operator==(const CartanMatrix& o) const { return a == o.a; }
};

struct CartanInfo {
  Kind kind = Kind::Finite;
  bool hyperbolic = false;         // meaningful for Indefinite only
  std::vector<long> sym;           // minimal positive integer symmetrizer d_i
  std::vector<long> marks;         // affine: coprime positive right kernel a_i
  std::vector<long> comarks;       // affine: coprime positive left kernel a_i^vee
};

// Checks GCM axioms and symmetrizability; classifies Finite/Affine/Indefinite
// via the inertia of D*A.  Throws not_gcm / not_symmetrizable.
CartanInfo validate_cartan(const CartanMatrix& cm);

// A weight in Dynkin-label coordinates.  For affine algebras `grade` is the
// coefficient of delta in lambda = sum_i lambda^i Lambda_i + grade * delta.
struct Weight {
  RVec labels;
  Rat grade = 0;

  bool operator==(const Weight& o) const { return labels == o.labels && grade == o.grade; }
};

Weight weight_of(std::vector<long> labels, Rat grade = 0);

// A validated Cartan matrix bundled with derived geometric data.  For affine
// type, `affine_node` designates which node plays the role of node 0 (no
// labeling is hardcoded; folding chooses the image orbit of the source node).
class Algebra {
 public:
  Algebra() = default;
  CartanMatrix cm;
  CartanInfo info;
  int affine_node = 0;

  int n() const { return cm.n(); }
  bool affine() const { return info.kind == Kind::Affine; }

  // Invariant bilinear form on weights, in the normalization induced by the
  // minimal integer symmetrizer: (alpha_i|alpha_j) = d_i A_ij.
  Rat inner(const Weight& x, const Weight& y) const;

  // Scale factor putting the form into the standard normalization in which
  // the highest root of the (horizontal) finite algebra has norm 2.
  Rat norm_scale() const;

  // Level k^vee = sum_i comark_i * lambda^i (affine only).
  Rat level(const Weight& w) const;

  // Level in the symmetrizer normalization, sum_i a_i d_i lambda^i; this is
  // the value of (delta | w).
  Rat level_sym(const Weight& w) const;

  // Grade carried by simple root alpha_i (delta-coefficient); nonzero only
  // at the affine node.
  Rat root_grade(int i) const;

  // Simple root alpha_i as a Weight (labels A_{ji}, grade root_grade(i)).
  Weight simple_root(int i) const;

  // Weyl vector: all labels 1, grade 0.
  Weight rho() const;

  // Dual Coxeter number g^vee = sum comarks (affine only).
  long dual_coxeter() const;

  // Horizontal subalgebra (affine only): the finite algebra on the nodes
  // other than affine_node, in increasing node order.
  const Algebra& horizontal() const;
  const std::vector<int>& horizontal_nodes() const;
  Weight horizontal_part(const Weight& w) const;

  // Inner product of two horizontal weights of this *finite* algebra in the
  // highest-root-norm-2 normalization.
  Rat inner_norm(const Weight& x, const Weight& y) const;

 private:
  mutable std::shared_ptr<Algebra> horizontal_;
  mutable std::vector<int> hnodes_;
  mutable RMat gram_;  // fundamental weight metric (finite type), lazily built
  const RMat& gram() const;
  void build_horizontal() const;
};

Algebra make_algebra(CartanMatrix cm, int affine_node = 0);

// Dynkin-diagram utilities shared by classification and folding.
bool diagram_connected(const CartanMatrix& cm, const std::vector<int>& nodes);
CartanMatrix submatrix(const CartanMatrix& cm, const std::vector<int>& nodes);

}  // namespace orbitfold
