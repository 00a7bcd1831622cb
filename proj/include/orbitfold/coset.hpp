#pragma once

#include <array>

#include "orbitfold/affine.hpp"
#include "orbitfold/characters.hpp"

namespace orbitfold {

// Diagonal coset h_{k1} (+) h_{k2} / h_{k1+k2} over a finite simple algebra.
struct CosetSpec {
  Algebra h;     // finite simple algebra
  Algebra haff;  // its (untwisted) affinization, node 0 affine
  long k1 = 0, k2 = 0, kp = 0;
  std::vector<Weight> w1, w2, wp;  // dominant affine weights per level
  Rat c1, c2, cp, cdot;            // factor central charges and coset charge
};

CosetSpec build_coset(const Algebra& h, long k1, long k2);

// A coset field candidate as indices into (w1, w2, wp).
using Triple = std::array<int, 3>;

// Branching function of one triple: coefficients count the multiplicity of
// the diagonal primary at each grade, leading exponent Delta1 + Delta2 -
// Delta' - cdot/24.
QSeries branching_function(const CosetSpec& spec, const Triple& t, int q_order);

// All branching functions sharing the factor pair (i1, i2), keyed by the
// diagonal weight index; one tensor decomposition serves every diagonal
// weight.
std::map<int, QSeries> branching_functions(const CosetSpec& spec, int i1, int i2,
                                           int q_order);

// Identification group: the simple-current diagram automorphisms common to
// all three factors, acting componentwise.  elems[0] is the identity.
struct IdGroup {
  std::vector<Automorphism> elems;
};

IdGroup identification_group(const CosetSpec& spec);

// Action of a group element on a triple (componentwise Dynkin-label
// permutation on all three factors).
Triple group_act(const CosetSpec& spec, const Automorphism& aut, const Triple& t);

struct FieldOrbit {
  Triple rep;                   // lexicographically smallest member
  std::vector<Triple> members;  // sorted
  std::vector<int> stab;        // indices into IdGroup::elems, 0 first
};

// Triples with nonzero monodromy charge under any identification current are
// discarded; the survivors are partitioned into identification orbits.
std::vector<FieldOrbit> selection_and_orbits(const CosetSpec& spec, const IdGroup& g);

// Twining branching function of a fixed point under a stabilizing current.
// The identity gives the ordinary branching function.  Rotation-family
// automorphisms (linking condition violated) give the single-term series of
// the twined factor characters; linking-condition automorphisms delegate to
// the ordinary branching function of the folded coset at projected weights.
QSeries twining_branching(const CosetSpec& spec, const Triple& t,
                          const Automorphism& aut, int q_order);

struct ResolvedField {
  int orbit = 0;      // index into the orbit list
  int psi = 0;        // stabilizer character index, 0..|stab|-1
  QSeries character;  // b^(Psi), nonnegative integer coefficients
  Rat exponent;       // leading exponent of the first nonzero coefficient
};

struct ResolvedSpectrum {
  std::vector<FieldOrbit> orbits;
  std::vector<ResolvedField> fields;
  Eigen::MatrixXcd S;
  Eigen::VectorXcd T;
  int vacuum = 0;  // field index of the coset vacuum
};

// Fixed-point resolution: every orbit contributes |stabilizer| fields with
// characters |S|^-1 sum_w Psi*(w) b^[w]; the resolved S-matrix carries the
// |G|/(|S_a||S_b|) prefactor with the twined blocks of the rotation family
// taken as 1.
ResolvedSpectrum resolve(const CosetSpec& spec, const IdGroup& g,
                         const std::vector<FieldOrbit>& orbits, int q_order);

// Residuals of the standard modular consistency relations.
struct ModularChecks {
  double symmetry = 0;     // max |S - S^T|
  double unitarity = 0;    // max |S S^dagger - 1|
  double conjugation = 0;  // max distance of S^2 from a permutation matrix
  double st_cubed = 0;     // max |(ST)^3 - S^2|
  bool ok(double tol) const {
    return symmetry < tol && unitarity < tol && conjugation < tol && st_cubed < tol;
  }
};

ModularChecks modular_consistency(const Eigen::MatrixXcd& S, const Eigen::VectorXcd& T);

// Verlinde fusion coefficients N_{ij}^k = sum_m S_im S_jm S*_km / S_vm.
struct VerlindeReport {
  std::vector<Eigen::MatrixXi> fusion;  // fusion[i](j, k)
  double residual = 0;                  // max distance from the rounded integers
  bool integral = false;                // residual < tol and all entries >= 0
};

VerlindeReport verlinde_check(const Eigen::MatrixXcd& S, int vacuum, double tol = 1e-6);

}  // namespace orbitfold
