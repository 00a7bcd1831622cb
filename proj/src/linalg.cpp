#include "orbitfold/linalg.hpp"

#include "orbitfold/error.hpp"

namespace orbitfold {

RMat rmat_zero(int rows, int cols) { return RMat(rows, RVec(cols, 0)); }

RMat rmat_identity(int n) {
  RMat m = rmat_zero(n, n);
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RMat rmat_mul(const RMat& a, const RMat& b) {
  int r = static_cast<int>(a.size());
  int k = static_cast<int>(b.size());
  int c = k ? static_cast<int>(b[0].size()) : 0;
  RMat out = rmat_zero(r, c);
  for (int i = 0; i < r; ++i)
    for (int t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (int j = 0; j < c; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

RVec rmat_apply(const RMat& a, const RVec& x) {
  RVec out(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j)
      if (a[i][j] != 0) out[i] += a[i][j] * x[j];
  return out;
}

RMat rmat_transpose(const RMat& a) {
  if (a.empty()) return {};
  RMat out = rmat_zero(static_cast<int>(a[0].size()), static_cast<int>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) out[j][i] = a[i][j];
  return out;
}

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<int> echelon(RMat& a) {
  std::vector<int> pivots;
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) { p = i; break; }
    if (p < 0) continue;
    std::swap(a[r], a[p]);
    Rat inv = 1 / a[r][c];
    for (int j = c; j < cols; ++j) a[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(RMat a) { return static_cast<int>(echelon(a).size()); }

std::vector<RVec> nullspace(const RMat& a) {
  if (a.empty()) return {};
  RMat m = a;
  std::vector<int> piv = echelon(m);
  int cols = static_cast<int>(a[0].size());
  std::vector<bool> is_piv(cols, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<RVec> basis;
  for (int c = 0; c < cols; ++c) {
    if (is_piv[c]) continue;
    RVec v(cols, 0);
    v[c] = 1;
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RVec> solve(RMat a, RVec b) {
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  for (int i = 0; i < rows; ++i) a[i].push_back(b[i]);
  std::vector<int> piv = echelon(a);
  // Inconsistent iff some pivot lands in the appended column.
  for (int c : piv)
    if (c == cols) return std::nullopt;
  RVec x(cols, 0);
  for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = a[r][cols];
  return x;
}

RMat inverse(const RMat& a) {
  int n = static_cast<int>(a.size());
  RMat m = a;
  for (int i = 0; i < n; ++i) {
    RVec id(n, 0);
    id[i] = 1;
    m[i].insert(m[i].end(), id.begin(), id.end());
  }
  std::vector<int> piv = echelon(m);
  require(static_cast<int>(piv.size()) == n && (n == 0 || piv.back() == n - 1),
          errc::bad_input, "matrix is singular");
  RMat out = rmat_zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = m[i][n + j];
  return out;
}

bool RowSpan::add(RVec row) {
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (row[pivot_[r]] == 0) continue;
    Rat f = row[pivot_[r]];
    for (int j = 0; j < cols_; ++j) row[j] -= f * rows_[r][j];
  }
  int p = -1;
  for (int j = 0; j < cols_; ++j)
    if (row[j] != 0) { p = j; break; }
  if (p < 0) return false;
  Rat inv = 1 / row[p];
  for (int j = 0; j < cols_; ++j) row[j] *= inv;
  rows_.push_back(std::move(row));
  pivot_.push_back(p);
  return true;
}

}  // namespace orbitfold
