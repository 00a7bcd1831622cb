#pragma once

#include <map>
#include <optional>

#include "orbitfold/characters.hpp"
#include "orbitfold/cyclotomic.hpp"
#include "orbitfold/fold.hpp"
#include "orbitfold/qseries.hpp"

namespace orbitfold {

enum class ModuleKind { Irreducible, Verma };

// Twining character data for a highest weight module and a diagram
// automorphism: at every automorphism-symmetric depth vector n the graded
// trace of the twining map tau (normalized by tau v_hw = v_hw) on the weight
// space hw - sum n_i alpha_i, together with the ordinary multiplicities of
// all computed weight spaces.
struct TwiningTable {
  Weight hw;
  int depth = 0;
  std::optional<NVec> box;
  std::map<NVec, Rat> trace;  // symmetric n only; zero entries kept
  std::map<NVec, long> dim;   // ordinary multiplicities, all computed n

  Rat trace_at(const NVec& n) const {
    auto it = trace.find(n);
    return it == trace.end() ? Rat(0) : it->second;
  }
};

// Brute-force twining character: constructs the module layer by layer in
// depth coordinates, selecting a weight-space basis among the vectors
// f_j(basis of the layer above) by exact Gram-matrix rank tests of the
// contravariant form, and transports the twining map through the f-action.
// For ModuleKind::Verma the construction runs at a generic symmetric weight
// (Verma twining traces are independent of the highest weight) and the layer
// dimensions are cross-checked against Kostant partition counts.
// Requires a symmetric highest weight; depth bounds the total height sum(n),
// box (optional) bounds each n_i, max_grade (optional, affine) bounds the
// grade drop below the highest weight.
TwiningTable twining_character_oracle(const Algebra& alg, const Automorphism& aut,
                                      const Weight& hw, int depth, ModuleKind kind,
                                      const std::optional<NVec>& box = std::nullopt,
                                      const std::optional<Rat>& max_grade = std::nullopt);

// Twining character through the orbit Lie algebra: character of the folded
// module at the projected highest weight, lifted back to unfolded depth
// coordinates n_j = s_[j] * n_fold_[j].  Keys of the result are unfolded
// depth vectors; entries are the predicted twining traces.
MultTable twining_character_via_orbit(const Algebra& alg, const Automorphism& aut,
                                      const Weight& hw, int depth, ModuleKind kind,
                                      const std::optional<NVec>& box = std::nullopt);

// Depth coordinates of hw - lambda, when lambda lies under hw in the root
// lattice with the given integer coordinates; nullopt otherwise.
std::optional<NVec> depth_coordinates(const Algebra& alg, const Weight& hw,
                                      const Weight& lambda);

// Rotation automorphisms of A_{N-1}^(1) violate the linking condition; the
// twining character is a single term (only the highest weight vector
// survives): chi^[omega](t, tau) = e^{2 pi i t k} q^Delta, with Delta
// replaced by the modular anomaly Delta - c/24 when anomaly is true.
struct RotationCharacter {
  Cyclotomic prefactor;  // e^{2 pi i t k} for the requested rational t
  Rat exponent;
  QSeries series;        // single monomial q^exponent
};
RotationCharacter twining_rotation_character(const Algebra& alg, const Automorphism& aut,
                                             const Weight& hw, const Rat& t,
                                             int q_order, bool anomaly);

}  // namespace orbitfold
