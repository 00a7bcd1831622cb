#pragma once

#include <string>

#include "orbitfold/cartan.hpp"

namespace orbitfold {

// Finite Cartan matrices of the classical families, nodes 0..n-1.
// A_n: simple chain.  B_n: arrow onto the short last node (A_{n-2,n-1} = -2).
// C_n: last node long (A_{n-1,n-2} = -2).  D_n: chain 0..n-3 with the fork
// nodes n-2 and n-1 both attached to n-3 (so D4 has center node 1).
CartanMatrix classical_cartan(char family, int rank);

// Highest root of a finite algebra, in simple-root coordinates.
std::vector<long> highest_root(const Algebra& alg);

// Untwisted affine extension: new affine node inserted at index 0, the finite
// nodes shifted up by one.
Algebra affinize(const Algebra& finite);

// Named presets: "A2", "C4", ... for finite algebras and "A1aff", "B3aff",
// ... for their untwisted affine extensions (affine node = node 0).
Algebra catalog(const std::string& name);

std::vector<std::string> catalog_names();

}  // namespace orbitfold
