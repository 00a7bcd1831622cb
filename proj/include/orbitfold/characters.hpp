#pragma once

#include <map>
#include <optional>

#include "orbitfold/cartan.hpp"
#include "orbitfold/qseries.hpp"

namespace orbitfold {

// Depth coordinates: a weight lambda = hw - sum_i n_i alpha_i is keyed by the
// vector n.  Tables store multiplicities for all n with sum(n) <= depth (and
// n <= box componentwise when a box is given).
using NVec = std::vector<int>;

struct MultTable {
  Weight hw;                  // ignored for root/Verma tables
  int depth = 0;
  std::optional<NVec> box;
  std::map<NVec, long> mult;  // zero entries are omitted

  long at(const NVec& n) const {
    auto it = mult.find(n);
    return it == mult.end() ? 0 : it->second;
  }
};

// Weight at depth coordinates n below hw.
Weight weight_at(const Algebra& alg, const Weight& hw, const NVec& n);

// Multiplicities of positive roots up to the given height, via the Peterson
// recursion.  Keys are root-lattice coordinates.
MultTable root_multiplicities(const Algebra& alg, int depth);

// Graded dimensions of the Verma module (Kostant partition counts); these do
// not depend on the highest weight.
MultTable verma_multiplicities(const Algebra& alg, int depth,
                               const std::optional<NVec>& box = std::nullopt);

// Weight multiplicities of the irreducible highest weight module, via the
// Freudenthal recursion.
MultTable irreducible_multiplicities(const Algebra& alg, const Weight& hw, int depth,
                                     const std::optional<NVec>& box = std::nullopt);

// Weyl dimension formula (finite type).
Int weyl_dimension(const Algebra& alg, const Weight& hw);

// Depth that guarantees an irreducible multiplicity table holds every weight
// of grade <= q_order (affine type; Casimir bound, conservative).
int depth_for_grade(const Algebra& alg, const Weight& hw, int q_order);

// Specialized (Virasoro) character: coefficients count states per grade, with
// leading exponent Delta - c/24 for affine type (0 for finite type, graded by
// height).  Throws depth_insufficient when the table cannot cover q_order.
QSeries virasoro_specialize(const Algebra& alg, const MultTable& table, int q_order);

}  // namespace orbitfold
