#pragma once

#include <optional>

#include "orbitfold/rational.hpp"

namespace orbitfold {

// Exact linear algebra over the rationals.  Matrices are dense row-major
// vectors of rows; sizes here are tiny (ranks and Gram matrices of low-depth
// weight spaces), so plain Gaussian elimination with exact pivoting is plenty.

RMat rmat_zero(int rows, int cols);
RMat rmat_identity(int n);
RMat rmat_mul(const RMat& a, const RMat& b);
RVec rmat_apply(const RMat& a, const RVec& x);
RMat rmat_transpose(const RMat& a);

int rank(RMat a);

// Right nullspace basis of a (vectors x with a*x = 0).
std::vector<RVec> nullspace(const RMat& a);

// Solve a*x = b; empty optional if inconsistent.  If underdetermined an
// arbitrary particular solution is returned.
std::optional<RVec> solve(RMat a, RVec b);

// Inverse of a square nonsingular matrix; throws bad_input when singular.
RMat inverse(const RMat& a);

// Incremental row-space tracker: feeds rows one at a time and reports whether
// each enlarged the span.  Used for greedy basis selection from Gram matrices.
class RowSpan {
 public:
  explicit RowSpan(int cols) : cols_(cols) {}
  bool add(RVec row);  // true if the row was independent of the span so far
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  int cols_;
  std::vector<RVec> rows_;  // kept in echelon form
  std::vector<int> pivot_;  // pivot column per stored row
};

}  // namespace orbitfold
