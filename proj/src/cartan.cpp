#include "orbitfold/cartan.hpp"

#include <algorithm>
#include <numeric>

#include "orbitfold/error.hpp"
#include "orbitfold/linalg.hpp"

namespace orbitfold {

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Finite: return "Finite";
    case Kind::Affine: return "Affine";
    case Kind::Indefinite: return "Indefinite";
  }
  return "?";
}

bool diagram_connected(const CartanMatrix& cm, const std::vector<int>& nodes) {
  if (nodes.empty()) return true;
  std::vector<int> stack = {nodes[0]};
  std::vector<bool> seen(cm.n(), false), in_set(cm.n(), false);
  for (int v : nodes) in_set[v] = true;
  seen[nodes[0]] = true;
  size_t count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : nodes)
      if (!seen[w] && cm.at(v, w) != 0) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == nodes.size();
}

CartanMatrix submatrix(const CartanMatrix& cm, const std::vector<int>& nodes) {
  CartanMatrix out;
  out.a.resize(nodes.size(), std::vector<long>(nodes.size()));
  for (size_t i = 0; i < nodes.size(); ++i)
    for (size_t j = 0; j < nodes.size(); ++j) out.a[i][j] = cm.at(nodes[i], nodes[j]);
  return out;
}

namespace {

std::vector<std::vector<int>> components(const CartanMatrix& cm) {
  int n = cm.n();
  std::vector<int> comp(n, -1);
  int nc = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack = {s};
    comp[s] = nc;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < n; ++w)
        if (comp[w] < 0 && cm.at(v, w) != 0) {
          comp[w] = nc;
          stack.push_back(w);
        }
    }
    ++nc;
  }
  std::vector<std::vector<int>> out(nc);
  for (int i = 0; i < n; ++i) out[comp[i]].push_back(i);
  return out;
}

// Minimal positive integer symmetrizer, or failure.
std::vector<long> symmetrizer(const CartanMatrix& cm) {
  int n = cm.n();
  std::vector<Rat> d(n, 0);
  for (const auto& comp : components(cm)) {
    // Propagate d_j = d_i A_ij / A_ji along a spanning tree of the component.
    d[comp[0]] = 1;
    std::vector<int> stack = {comp[0]};
    std::vector<bool> seen(n, false);
    seen[comp[0]] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : comp) {
        if (seen[w] || cm.at(v, w) == 0) continue;
        seen[w] = true;
        d[w] = d[v] * cm.at(v, w) / cm.at(w, v);
        stack.push_back(w);
      }
    }
    // Rescale the component to minimal positive integers.
    Int l = 1;
    for (int i : comp) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d[i].get_den().get_mpz_t());
    Int g = 0;
    for (int i : comp) {
      d[i] *= Rat(l);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d[i].get_num().get_mpz_t());
    }
    for (int i : comp) d[i] /= Rat(g);
  }
  // Global consistency check d_i A_ij = d_j A_ji (catches cycles the spanning
  // tree did not constrain).
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      require(d[i] * cm.at(i, j) == d[j] * cm.at(j, i), errc::not_symmetrizable,
              "no symmetrizer exists");
  std::vector<long> out(n);
  for (int i = 0; i < n; ++i) {
    require(d[i] > 0, errc::not_symmetrizable, "symmetrizer not positive");
    out[i] = d[i].get_num().get_si();
  }
  return out;
}

// Inertia of a symmetric rational matrix: (#positive, #negative, nullity),
// via symmetric congruence elimination.  For the zero-diagonal corner case a
// nonzero off-diagonal pair contributes one positive and one negative.
struct Inertia {
  int pos = 0, neg = 0, zero = 0;
};

Inertia inertia(RMat b) {
  Inertia out;
  int n = static_cast<int>(b.size());
  std::vector<bool> done(n, false);
  for (;;) {
    int p = -1;
    for (int i = 0; i < n; ++i)
      if (!done[i] && b[i][i] != 0) { p = i; break; }
    if (p < 0) break;
    if (b[p][p] > 0)
      ++out.pos;
    else
      ++out.neg;
    for (int i = 0; i < n; ++i) {
      if (done[i] || i == p || b[i][p] == 0) continue;
      Rat f = b[i][p] / b[p][p];
      for (int j = 0; j < n; ++j)
        if (!done[j]) b[i][j] -= f * b[p][j];
      // keep symmetry exactly
      for (int j = 0; j < n; ++j)
        if (!done[j]) b[j][i] = b[i][j];
    }
    done[p] = true;
  }
  // Remaining block has zero diagonal; each nonzero pair b_ij = b_ji != 0 is a
  // hyperbolic plane (+1, -1).
  for (int i = 0; i < n; ++i) {
    if (done[i]) continue;
    int q = -1;
    for (int j = 0; j < n; ++j)
      if (!done[j] && j != i && b[i][j] != 0) { q = j; break; }
    if (q < 0) {
      ++out.zero;
      done[i] = true;
      continue;
    }
    ++out.pos;
    ++out.neg;
    // Eliminate the plane spanned by rows i, q from the rest.
    for (int r = 0; r < n; ++r) {
      if (done[r] || r == i || r == q) continue;
      Rat fi = b[r][q] / b[i][q];  // kill r's coupling to i
      Rat fq = b[r][i] / b[q][i];  // kill r's coupling to q
      for (int j = 0; j < n; ++j)
        if (!done[j]) b[r][j] -= fi * b[i][j] + fq * b[q][j];
      for (int j = 0; j < n; ++j)
        if (!done[j]) b[j][r] = b[r][j];
    }
    done[i] = done[q] = true;
  }
  return out;
}

std::vector<long> kernel_marks(const CartanMatrix& cm, bool transpose) {
  int n = cm.n();
  RMat a = rmat_zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = transpose ? cm.at(j, i) : cm.at(i, j);
  auto ker = nullspace(a);
  require(ker.size() == 1, errc::internal, "affine kernel is not one-dimensional");
  RVec v = ker[0];
  Int l = 1;
  for (auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  Int g = 0;
  for (auto& x : v) {
    x *= Rat(l);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num().get_mpz_t());
  }
  std::vector<long> out(n);
  bool neg = false;
  for (int i = 0; i < n; ++i) {
    v[i] /= Rat(g);
    if (v[i] < 0) neg = true;
  }
  for (int i = 0; i < n; ++i) {
    long m = (neg ? -v[i] : v[i]).get_num().get_si();
    require(m > 0, errc::internal, "affine marks are not strictly positive");
    out[i] = m;
  }
  return out;
}

bool one_node_deleted_subdiagrams_tame(const CartanMatrix& cm) {
  int n = cm.n();
  for (int del = 0; del < n; ++del) {
    std::vector<int> rest;
    for (int i = 0; i < n; ++i)
      if (i != del) rest.push_back(i);
    CartanMatrix sub = submatrix(cm, rest);
    for (const auto& comp : components(sub)) {
      CartanInfo ci = validate_cartan(submatrix(sub, comp));
      if (ci.kind == Kind::Indefinite) return false;
    }
  }
  return true;
}

}  // namespace

CartanInfo validate_cartan(const CartanMatrix& cm) {
  int n = cm.n();
  require(n > 0, errc::not_gcm, "empty matrix");
  for (int i = 0; i < n; ++i) {
    require(static_cast<int>(cm.a[i].size()) == n, errc::not_gcm, "matrix is not square");
    require(cm.at(i, i) == 2, errc::not_gcm, "diagonal entry is not 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      require(cm.at(i, j) <= 0, errc::not_gcm, "positive off-diagonal entry");
      require((cm.at(i, j) == 0) == (cm.at(j, i) == 0), errc::not_gcm,
              "asymmetric zero pattern");
    }
  }
  CartanInfo info;
  info.sym = symmetrizer(cm);
  RMat b = rmat_zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b[i][j] = Rat(info.sym[i] * cm.at(i, j));
  Inertia in = inertia(b);
  if (in.neg == 0 && in.zero == 0) {
    info.kind = Kind::Finite;
  } else if (in.neg == 0 && in.zero == 1 && diagram_connected(cm, [&] {
               std::vector<int> all(n);
               std::iota(all.begin(), all.end(), 0);
               return all;
             }())) {
    info.kind = Kind::Affine;
    info.marks = kernel_marks(cm, false);
    info.comarks = kernel_marks(cm, true);
  } else {
    info.kind = Kind::Indefinite;
    info.hyperbolic = one_node_deleted_subdiagrams_tame(cm);
  }
  return info;
}

Weight weight_of(std::vector<long> labels, Rat grade) {
  Weight w;
  for (long v : labels) w.labels.push_back(Rat(v));
  w.grade = grade;
  return w;
}

Rat Algebra::root_grade(int i) const {
  if (!affine()) return 0;
  return i == affine_node ? rat(1, info.marks[affine_node]) : Rat(0);
}

Weight Algebra::simple_root(int i) const {
  Weight w;
  w.labels.resize(n());
  for (int j = 0; j < n(); ++j) w.labels[j] = Rat(cm.at(j, i));
  w.grade = root_grade(i);
  return w;
}

Weight Algebra::rho() const {
  Weight w;
  w.labels.assign(n(), Rat(1));
  return w;
}

Rat Algebra::level(const Weight& w) const {
  require(affine(), errc::bad_input, "level is defined for affine algebras");
  Rat k = 0;
  for (int i = 0; i < n(); ++i) k += Rat(info.comarks[i]) * w.labels[i];
  return k;
}

Rat Algebra::level_sym(const Weight& w) const {
  Rat k = 0;
  for (int i = 0; i < n(); ++i) k += Rat(info.marks[i] * info.sym[i]) * w.labels[i];
  return k;
}

long Algebra::dual_coxeter() const {
  require(affine(), errc::bad_input, "dual Coxeter number is defined for affine algebras");
  long g = 0;
  for (long c : info.comarks) g += c;
  return g;
}

void Algebra::build_horizontal() const {
  if (horizontal_ || !affine()) return;
  hnodes_.clear();
  for (int i = 0; i < n(); ++i)
    if (i != affine_node) hnodes_.push_back(i);
  horizontal_ = std::make_shared<Algebra>(make_algebra(submatrix(cm, hnodes_)));
}

const Algebra& Algebra::horizontal() const {
  require(affine(), errc::bad_input, "horizontal subalgebra requires affine type");
  build_horizontal();
  return *horizontal_;
}

const std::vector<int>& Algebra::horizontal_nodes() const {
  require(affine(), errc::bad_input, "horizontal subalgebra requires affine type");
  build_horizontal();
  return hnodes_;
}

Weight Algebra::horizontal_part(const Weight& w) const {
  Weight out;
  for (int i : horizontal_nodes()) out.labels.push_back(w.labels[i]);
  return out;
}

const RMat& Algebra::gram() const {
  if (!gram_.empty()) return gram_;
  // Fundamental weight metric.  Finite type: G = (A^T)^{-1} D.  Affine type:
  // the metric of the horizontal nodes with the symmetrizer inherited from
  // the full matrix (so that cross terms computed from level_sym match).
  if (!affine()) {
    int m = n();
    RMat at = rmat_zero(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) at[i][j] = Rat(cm.at(j, i));
    RMat inv = inverse(at);
    gram_ = rmat_zero(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) gram_[i][j] = inv[i][j] * Rat(info.sym[j]);
  } else {
    const auto& hn = horizontal_nodes();
    int m = static_cast<int>(hn.size());
    RMat at = rmat_zero(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) at[i][j] = Rat(cm.at(hn[j], hn[i]));
    RMat inv = inverse(at);
    gram_ = rmat_zero(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) gram_[i][j] = inv[i][j] * Rat(info.sym[hn[j]]);
  }
  return gram_;
}

Rat Algebra::inner(const Weight& x, const Weight& y) const {
  const RMat& g = gram();
  Rat out = 0;
  if (!affine()) {
    for (int i = 0; i < n(); ++i) {
      if (x.labels[i] == 0) continue;
      for (int j = 0; j < n(); ++j) out += x.labels[i] * g[i][j] * y.labels[j];
    }
    return out;
  }
  const auto& hn = horizontal_nodes();
  int m = static_cast<int>(hn.size());
  for (int i = 0; i < m; ++i) {
    if (x.labels[hn[i]] == 0) continue;
    for (int j = 0; j < m; ++j) out += x.labels[hn[i]] * g[i][j] * y.labels[hn[j]];
  }
  out += level_sym(x) * y.grade + level_sym(y) * x.grade;
  return out;
}

Rat Algebra::norm_scale() const {
  long dmax = 0;
  if (!affine()) {
    for (long d : info.sym) dmax = std::max(dmax, d);
  } else {
    for (int i : horizontal_nodes()) dmax = std::max(dmax, info.sym[i]);
  }
  return Rat(1, dmax);
}

Rat Algebra::inner_norm(const Weight& x, const Weight& y) const {
  return inner(x, y) * norm_scale();
}

Algebra make_algebra(CartanMatrix cm, int affine_node) {
  Algebra alg;
  alg.cm = std::move(cm);
  alg.info = validate_cartan(alg.cm);
  alg.affine_node = affine_node;
  if (alg.affine())
    require(affine_node >= 0 && affine_node < alg.n(), errc::bad_input,
            "affine node out of range");
  return alg;
}

}  // namespace orbitfold
