#pragma once

#include <Eigen/Dense>

#include "orbitfold/fold.hpp"

namespace orbitfold {

// Number of roots plus rank, i.e. the dimension of the finite algebra.
long finite_dimension(const Algebra& alg);

// Conformal weight Delta = (hw_bar, hw_bar + 2 rho_bar) / ((theta,theta)(k+g))
// of the affine primary, exact.
Rat conformal_weight(const Algebra& alg, const Weight& hw);

// Central charge c = k * dim(g_bar) / (k + g^vee) at level k.
Rat central_charge(const Algebra& alg, const Rat& level);

// Modular anomaly s = Delta - c/24.
Rat modular_anomaly(const Algebra& alg, const Weight& hw);

// All dominant integral weights at the given level (grade 0), ordered
// lexicographically by labels.
std::vector<Weight> dominant_weights(const Algebra& alg, long level);

struct ModularData {
  std::vector<Weight> weights;
  Eigen::MatrixXcd S;
  Eigen::VectorXcd T;  // diagonal of T
};

// Kac-Peterson S-matrix and T at the given level.  Inner products are exact
// rationals; only the final exponentials are evaluated in double precision.
ModularData kac_peterson(const Algebra& alg, long level);

struct SimpleCurrent {
  Automorphism aut;  // action on affine Dynkin labels
  int order;
};

// Simple currents of the affine algebra at the given level, identified as
// the diagram automorphisms sigma satisfying the simple current relation
// S_{sigma(L),M} = exp(2 pi i Q_J(M)) S_{L,M} with J = sigma(vacuum).
// The identity is not included.
std::vector<SimpleCurrent> simple_currents(const Algebra& alg, long level);

Weight current_act(const Automorphism& aut, const Weight& w);

// Monodromy charge Q_J(w) = Delta_w + Delta_J - Delta_{J*w} mod 1.
Rat monodromy_charge(const Algebra& alg, const Automorphism& aut, const Weight& w);

// Dual labels of an affine orbit algebra in the normalization induced by the
// folding: breve-a^vee_[i] = (N_i/N) a^vee_i, so that the folded level of a
// projected weight is level/N and their sum is g^vee/N.  (This differs from
// the coprime left kernel of the folded Cartan matrix for twisted folds.)
struct DualLabels {
  RVec marks;  // per orbit
  Rat gvee;    // sum, equal to g^vee / N
};
DualLabels folded_dual_labels(const Algebra& alg, const FoldResult& fr);

// Level of a folded weight with respect to the duality-normalized dual
// labels; equals level(lifted weight) / N.
Rat folded_level(const Algebra& alg, const FoldResult& fr, const Weight& wf);

// Conformal weight with explicitly supplied level and dual Coxeter number
// (for orbit algebras, whose intrinsic normalization differs from the one
// induced by the folding).
Rat conformal_weight_at(const Algebra& alg, const Weight& hw, const Rat& k, const Rat& g);

struct Cd2Report {
  Rat delta;        // conformal weight in g
  Rat delta_fold;   // conformal weight of the projected weight in the orbit algebra
  Rat gamma00;      // sum over l,l' of (Lambda_bar_{w^l 0}, Lambda_bar_{w^l' 0})
  Rat correction;   // Gamma00 k (1 + g/(k+g)) / (2 N^2)
  Rat anomaly_shift;  // s_Lambda - s-breve_Lambda-breve, which should be
                      // (k/g)(D - D-breve)/24 independently of Lambda
  bool holds;       // delta == delta_fold + correction, and the shift matches
};

// Conformal weight matching between a symmetric weight and its projection.
Cd2Report check_cd2(const Algebra& alg, const FoldResult& fr, const Weight& hw);

}  // namespace orbitfold
