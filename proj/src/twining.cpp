#include "orbitfold/twining.hpp"

#include <algorithm>

#include "orbitfold/affine.hpp"
#include "orbitfold/error.hpp"
#include "orbitfold/linalg.hpp"

namespace orbitfold {

namespace {

// One weight space hw - sum n_i alpha_i of the module under construction.
struct Layer {
  int dim = 0;
  RMat gram;            // contravariant form on the selected basis
  std::vector<RMat> e;  // e[i]: coords of e_i(basis) in layer n - e_i
  std::vector<RMat> f;  // f[j]: coords of f_j(basis of layer n - e_j) here
  std::vector<std::pair<int, int>> source;  // basis vector a = f_j x_b: (j, b)
  RMat twist;           // coords of tau(basis) in layer w(n)
};

NVec shifted(const NVec& n, int j, int delta) {
  NVec m = n;
  m[j] += delta;
  return m;
}

NVec permuted(const Automorphism& aut, const NVec& n) {
  NVec m(n.size());
  for (size_t j = 0; j < n.size(); ++j) m[aut.apply(static_cast<int>(j))] = n[j];
  return m;
}

struct ModuleBuilder {
  const Algebra& alg;
  const Automorphism& aut;
  Weight hw;  // weight driving the h-action (generic for Verma)
  std::map<NVec, Layer> layers;

  const Layer* at(const NVec& n) const {
    auto it = layers.find(n);
    return it == layers.end() ? nullptr : &it->second;
  }

  // Build layer n from the already-built layers above it (all n - e_j).
  // Candidates are f_j x for each basis vector x of layer n - e_j; the basis
  // is a maximal subset whose candidate-Gram rows are independent, which for
  // a symmetric matrix yields an invertible principal Gram block.
  void build_layer(const NVec& n) {
    int r = alg.n();
    Layer out;
    out.e.assign(r, RMat{});
    out.f.assign(r, RMat{});
    std::vector<std::pair<int, int>> cand;  // (j, basis index in layer n-e_j)
    for (int j = 0; j < r; ++j) {
      if (n[j] == 0) continue;
      const Layer* up = at(shifted(n, j, -1));
      if (!up) continue;
      for (int b = 0; b < up->dim; ++b) cand.emplace_back(j, b);
    }
    int c = static_cast<int>(cand.size());
    if (c == 0) {
      layers.emplace(n, std::move(out));
      return;
    }
    // Raising action on candidates: e_i f_j x = f_j (e_i x) + [i==j] mu^i x,
    // mu the weight of layer n - e_j.  Column k of ecand[i] holds the
    // coordinates of e_i(candidate k) in layer n - e_i.
    std::vector<RMat> ecand(r);
    for (int i = 0; i < r; ++i) {
      const Layer* low = (n[i] > 0) ? at(shifted(n, i, -1)) : nullptr;
      int rows = low ? low->dim : 0;
      ecand[i] = rmat_zero(rows, c);
      if (rows == 0) continue;
      for (int k = 0; k < c; ++k) {
        auto [j, b] = cand[k];
        const NVec up_n = shifted(n, j, -1);
        const Layer& up = *at(up_n);
        const RMat& ei = up.e[i];        // dim(n-e_j-e_i) x dim(n-e_j)
        const RMat& fj = low->f[j];      // dim(n-e_i) x dim(n-e_i-e_j)
        if (!ei.empty() && !fj.empty() && !fj[0].empty()) {
          for (int row = 0; row < rows; ++row) {
            Rat acc = 0;
            for (size_t m = 0; m < ei.size(); ++m) acc += fj[row][m] * ei[m][b];
            ecand[i][row][k] = acc;
          }
        }
        if (i == j) ecand[i][b][k] += weight_at(alg, hw, up_n).labels[i];
      }
    }
    // Candidate Gram: <f_i x_a, .> = row of G_{n-e_i} * ecand_i.  The form is
    // symmetric, so only the upper triangle is computed.
    RMat cg = rmat_zero(c, c);
    for (int l = 0; l < c; ++l) {
      auto [i, a] = cand[l];
      const Layer& low = *at(shifted(n, i, -1));
      for (int k = l; k < c; ++k) {
        Rat acc = 0;
        for (int m = 0; m < low.dim; ++m) acc += low.gram[a][m] * ecand[i][m][k];
        cg[l][k] = acc;
        cg[k][l] = acc;
      }
    }
    // Greedy basis selection by row independence.
    RowSpan span(c);
    std::vector<int> keep;
    std::vector<bool> kept(c, false);
    for (int k = 0; k < c; ++k)
      if (span.add(cg[k])) {
        keep.push_back(k);
        kept[k] = true;
      }
    out.dim = static_cast<int>(keep.size());
    out.gram = rmat_zero(out.dim, out.dim);
    for (int a = 0; a < out.dim; ++a) {
      out.source.push_back(cand[keep[a]]);
      for (int b = 0; b < out.dim; ++b) out.gram[a][b] = cg[keep[a]][keep[b]];
    }
    // Coordinates of every candidate on the selected basis: unit vectors for
    // kept candidates; for rejected ones the Gram solve (the difference lies
    // in the radical of the form, hence vanishes in the module).
    RMat coords = rmat_zero(out.dim, c);
    for (int a = 0; a < out.dim; ++a) coords[a][keep[a]] = 1;
    if (out.dim < c && out.dim > 0) {
      RMat ginv = inverse(out.gram);  // one factorization serves every reject
      for (int k = 0; k < c; ++k) {
        if (kept[k]) continue;
        for (int a = 0; a < out.dim; ++a) {
          Rat acc = 0;
          for (int b = 0; b < out.dim; ++b) acc += ginv[a][b] * cg[keep[b]][k];
          coords[a][k] = acc;
        }
      }
    }
    // f-action matrices into this layer.
    for (int j = 0; j < r; ++j) {
      const Layer* up = (n[j] > 0) ? at(shifted(n, j, -1)) : nullptr;
      out.f[j] = rmat_zero(out.dim, up ? up->dim : 0);
    }
    for (int k = 0; k < c; ++k) {
      auto [j, b] = cand[k];
      for (int a = 0; a < out.dim; ++a) out.f[j][a][b] = coords[a][k];
    }
    // e-action restricted to the selected basis.
    for (int i = 0; i < r; ++i) {
      int rows = static_cast<int>(ecand[i].size());
      out.e[i] = rmat_zero(rows, out.dim);
      for (int row = 0; row < rows; ++row)
        for (int a = 0; a < out.dim; ++a) out.e[i][row][a] = ecand[i][row][keep[a]];
    }
    layers.emplace(n, std::move(out));
  }

  // Twining transport: tau(f_j x) = f_{w(j)} tau(x).
  void build_twist(const NVec& n) {
    Layer& lay = layers.at(n);
    const Layer* target = at(permuted(aut, n));
    require(target != nullptr, errc::internal, "missing permuted layer");
    lay.twist = rmat_zero(target->dim, lay.dim);
    for (int a = 0; a < lay.dim; ++a) {
      auto [j, b] = lay.source[a];
      const NVec up_n = shifted(n, j, -1);
      const Layer& up = *at(up_n);
      require(!up.twist.empty() || up.dim == 0, errc::internal,
              "twist of parent layer missing");
      int wj = aut.apply(j);
      const Layer& wup = *at(permuted(aut, up_n));
      for (int row = 0; row < target->dim; ++row) {
        Rat acc = 0;
        for (int m = 0; m < wup.dim; ++m) acc += target->f[wj][row][m] * up.twist[m][b];
        lay.twist[row][a] = acc;
      }
    }
  }
};

}  // namespace

std::optional<NVec> depth_coordinates(const Algebra& alg, const Weight& hw,
                                      const Weight& lambda) {
  int r = alg.n();
  // Solve sum n_i alpha_i = hw - lambda over labels (plus grade for affine
  // type, where the label matrix alone has corank one).
  int rows = alg.affine() ? r + 1 : r;
  RMat m = rmat_zero(rows, r);
  RVec rhs(rows);
  for (int i = 0; i < r; ++i) {
    Weight a = alg.simple_root(i);
    for (int row = 0; row < r; ++row) m[row][i] = a.labels[row];
    if (alg.affine()) m[r][i] = a.grade;
  }
  for (int row = 0; row < r; ++row) rhs[row] = hw.labels[row] - lambda.labels[row];
  if (alg.affine()) rhs[r] = hw.grade - lambda.grade;
  auto sol = solve(m, rhs);
  if (!sol) return std::nullopt;
  NVec n(r);
  for (int i = 0; i < r; ++i) {
    const Rat& v = (*sol)[i];
    if (v.get_den() != 1 || v < 0) return std::nullopt;
    n[i] = static_cast<int>(v.get_num().get_si());
  }
  if (!(weight_at(alg, hw, n) == lambda)) return std::nullopt;
  return n;
}

TwiningTable twining_character_oracle(const Algebra& alg, const Automorphism& aut,
                                      const Weight& hw, int depth, ModuleKind kind,
                                      const std::optional<NVec>& box,
                                      const std::optional<Rat>& max_grade) {
  OrbitData od = orbit_data(alg, aut);
  for (const auto& orb : od.orbits)
    for (int node : orb)
      require(hw.labels[node] == hw.labels[orb[0]], errc::not_symmetric_weight,
              "highest weight must be symmetric");
  int r = alg.n();
  if (box)
    require(static_cast<int>(box->size()) == r, errc::bad_input, "box size mismatch");

  ModuleBuilder mb{alg, aut, hw, {}};
  if (kind == ModuleKind::Verma) {
    // Verma twining traces do not depend on the highest weight; run at a
    // generic symmetric weight, keeping the contravariant form layerwise
    // nondegenerate (dimensions are cross-checked against Kostant counts).
    for (size_t t = 0; t < od.orbits.size(); ++t)
      for (int node : od.orbits[t])
        mb.hw.labels[node] = rat(1000003 + 7919 * static_cast<long>(t));
  }
  MultTable kostant;
  if (kind == ModuleKind::Verma) kostant = verma_multiplicities(alg, depth, box);

  TwiningTable table;
  table.hw = hw;
  table.depth = depth;
  table.box = box;

  const NVec origin(r, 0);
  {
    Layer base;
    base.dim = 1;
    base.gram = rmat_identity(1);
    base.e.assign(r, RMat{});
    base.f.assign(r, RMat{});
    base.twist = rmat_identity(1);
    mb.layers.emplace(origin, std::move(base));
    table.dim[origin] = 1;
    table.trace[origin] = 1;
  }

  std::vector<NVec> frontier{origin};
  for (int h = 1; h <= depth; ++h) {
    std::vector<NVec> todo;
    for (const NVec& p : frontier) {
      if (mb.layers.at(p).dim == 0) continue;
      for (int j = 0; j < r; ++j) {
        NVec n = shifted(p, j, 1);
        if (box && n[j] > (*box)[j]) continue;
        if (max_grade) {
          Rat gr = 0;
          for (int i = 0; i < r; ++i) gr += Rat(n[i]) * alg.root_grade(i);
          if (gr > *max_grade) continue;
        }
        if (!mb.layers.count(n) &&
            std::find(todo.begin(), todo.end(), n) == todo.end())
          todo.push_back(n);
      }
    }
    std::sort(todo.begin(), todo.end());
    for (const NVec& n : todo) {
      mb.build_layer(n);
      const Layer& lay = mb.layers.at(n);
      if (kind == ModuleKind::Verma)
        require(lay.dim == kostant.at(n), errc::internal,
                "Verma layer dimension mismatch with Kostant count");
      if (lay.dim > 0) table.dim[n] = lay.dim;
    }
    // Twining matrices once the whole height is present.  The region of
    // constructed layers is closed under the depth-vector permutation (the
    // automorphism maps parent chains of equal dimensions to parent chains),
    // so permuted layers are available whenever needed.
    for (const NVec& n : todo) {
      if (!mb.layers.count(permuted(aut, n))) continue;
      mb.build_twist(n);
      if (permuted(aut, n) == n) {
        const Layer& lay = mb.layers.at(n);
        Rat tr = 0;
        for (int a = 0; a < lay.dim; ++a) tr += lay.twist[a][a];
        table.trace[n] = tr;
      }
    }
    frontier = std::move(todo);
  }
  return table;
}

MultTable twining_character_via_orbit(const Algebra& alg, const Automorphism& aut,
                                      const Weight& hw, int depth, ModuleKind kind,
                                      const std::optional<NVec>& box) {
  FoldResult fr = fold(alg, aut);
  Weight hwf = project_weight(fr, hw);
  int rf = fr.alg.n();
  // A folded depth step over orbit [t] lifts to s_t N_t unfolded simple-root
  // subtractions, so folded tables to the same height bound cover every lift
  // of height <= depth.
  std::optional<NVec> fbox;
  if (box) {
    NVec fb(rf);
    for (int t = 0; t < rf; ++t)
      fb[t] = (*box)[fr.orbits.orbits[t][0]] / static_cast<int>(fr.orbits.s[t]);
    fbox = fb;
  }
  MultTable folded = (kind == ModuleKind::Verma)
                         ? verma_multiplicities(fr.alg, depth, fbox)
                         : irreducible_multiplicities(fr.alg, hwf, depth, fbox);
  MultTable out;
  out.hw = hw;
  out.depth = depth;
  out.box = box;
  int r = alg.n();
  for (const auto& [nf, m] : folded.mult) {
    NVec n(r, 0);
    long height = 0;
    for (int t = 0; t < rf; ++t) {
      for (int node : fr.orbits.orbits[t])
        n[node] = nf[t] * static_cast<int>(fr.orbits.s[t]);
      height += static_cast<long>(nf[t]) * fr.orbits.s[t] * fr.orbits.length[t];
    }
    if (height > depth) continue;
    if (box) {
      bool ok = true;
      for (int j = 0; j < r; ++j) ok = ok && n[j] <= (*box)[j];
      if (!ok) continue;
    }
    out.mult[n] = m;
  }
  return out;
}

RotationCharacter twining_rotation_character(const Algebra& alg, const Automorphism& aut,
                                             const Weight& hw, const Rat& t,
                                             int q_order, bool anomaly) {
  require(alg.affine(), errc::bad_input, "rotation case is affine-only");
  OrbitData od = orbit_data(alg, aut);
  require(!od.linking, errc::bad_input,
          "linking condition holds; use the folding route instead");
  RotationCharacter rc;
  Rat k = alg.level(hw);
  rc.prefactor = Cyclotomic::exp2pi(t * k);
  rc.exponent = anomaly ? modular_anomaly(alg, hw) : conformal_weight(alg, hw);
  rc.series = QSeries::zero(rc.exponent, Rat(1), q_order);
  rc.series.c[0] = Cyclotomic(Rat(1));
  return rc;
}

}  // namespace orbitfold
