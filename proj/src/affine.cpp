#include "orbitfold/affine.hpp"

#include <algorithm>
#include <complex>
#include <cstdlib>
#include <functional>
#include <map>
#include <numbers>
#include <thread>

#include "orbitfold/characters.hpp"
#include "orbitfold/error.hpp"

namespace orbitfold {

namespace {

using Cplx = std::complex<double>;

int thread_count() {
  if (const char* env = std::getenv("ORBITFOLD_THREADS")) {
    int t = std::atoi(env);
    if (t > 0) return t;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

void parallel_rows(int rows, const std::function<void(int)>& body) {
  int t = std::min(thread_count(), rows);
  if (t <= 1) {
    for (int r = 0; r < rows; ++r) body(r);
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < t; ++w)
    pool.emplace_back([&, w] {
      for (int r = w; r < rows; r += t) body(r);
    });
  for (auto& th : pool) th.join();
}

// Level in the normalization where the highest root of the horizontal
// algebra has norm 2; equals the comark level for untwisted algebras but is
// intrinsic to the Cartan matrix.
Rat level_norm(const Algebra& alg, const Weight& hw) {
  return alg.level_sym(hw) * alg.norm_scale();
}

Rat dual_coxeter_norm(const Algebra& alg) {
  return alg.level_sym(alg.rho()) * alg.norm_scale();
}

Weight horizontal_rho(const Algebra& alg) {
  Weight r;
  r.labels.assign(alg.n(), Rat(1));
  r.labels[alg.affine_node] = 0;
  return r;
}

// Finite Weyl group as matrices acting on Dynkin labels, with signs.
struct WeylGroup {
  std::vector<std::vector<long>> mats;  // row-major n x n
  std::vector<int> signs;
};

WeylGroup finite_weyl_group(const Algebra& alg) {
  require(alg.info.kind == Kind::Finite, errc::bad_input,
          "Weyl group enumeration needs finite type");
  int m = alg.n();
  auto mul = [m](const std::vector<long>& a, const std::vector<long>& b) {
    std::vector<long> c(m * m, 0);
    for (int i = 0; i < m; ++i)
      for (int k = 0; k < m; ++k) {
        long a_ik = a[i * m + k];
        if (a_ik == 0) continue;
        for (int j = 0; j < m; ++j) c[i * m + j] += a_ik * b[k * m + j];
      }
    return c;
  };
  // Simple reflection i on labels: (w_i x)_j = x_j - x_i A_ji.
  std::vector<std::vector<long>> gens;
  for (int i = 0; i < m; ++i) {
    std::vector<long> g(m * m, 0);
    for (int j = 0; j < m; ++j) {
      g[j * m + j] = 1;
      g[j * m + i] -= alg.cm.at(j, i);
    }
    gens.push_back(std::move(g));
  }
  WeylGroup wg;
  std::map<std::vector<long>, int> seen;
  std::vector<long> id(m * m, 0);
  for (int i = 0; i < m; ++i) id[i * m + i] = 1;
  seen[id] = 1;
  wg.mats.push_back(id);
  wg.signs.push_back(1);
  for (size_t head = 0; head < wg.mats.size(); ++head) {
    std::vector<long> cur = wg.mats[head];
    int sgn = wg.signs[head];
    for (const auto& g : gens) {
      std::vector<long> nxt = mul(g, cur);
      if (seen.emplace(nxt, 1).second) {
        wg.mats.push_back(nxt);
        wg.signs.push_back(-sgn);
      }
    }
  }
  return wg;
}

Weight vacuum_weight(const Algebra& alg, long level) {
  Weight v;
  v.labels.assign(alg.n(), Rat(0));
  v.labels[alg.affine_node] = level;
  return v;
}

int weight_index(const std::vector<Weight>& ws, const Weight& w) {
  for (size_t i = 0; i < ws.size(); ++i)
    if (ws[i].labels == w.labels) return static_cast<int>(i);
  fail(errc::internal, "weight not in the dominant list");
}

// Diagram automorphisms of the Cartan matrix, by permutation backtracking.
std::vector<Automorphism> diagram_automorphisms(const CartanMatrix& cm) {
  int m = cm.n();
  std::vector<Automorphism> out;
  std::vector<int> perm(m, -1);
  std::vector<bool> used(m, false);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == m) {
      out.push_back(Automorphism{perm});
      return;
    }
    for (int v = 0; v < m; ++v) {
      if (used[v]) continue;
      bool ok = cm.at(v, v) == cm.at(i, i);
      for (int j = 0; ok && j < i; ++j)
        ok = cm.at(perm[j], v) == cm.at(j, i) && cm.at(v, perm[j]) == cm.at(i, j);
      if (!ok) continue;
      perm[i] = v;
      used[v] = true;
      self(self, i + 1);
      used[v] = false;
      perm[i] = -1;
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

long finite_dimension(const Algebra& alg) {
  require(alg.info.kind == Kind::Finite, errc::bad_input,
          "dimension is defined for finite type");
  int depth = std::max(alg.n(), 2);
  MultTable roots = root_multiplicities(alg, depth);
  for (;;) {
    MultTable more = root_multiplicities(alg, depth * 2);
    if (more.mult.size() == roots.mult.size()) break;
    roots = std::move(more);
    depth *= 2;
  }
  long count = 0;
  for (const auto& [beta, mu] : roots.mult) count += mu;
  return alg.n() + 2 * count;
}

Rat conformal_weight_at(const Algebra& alg, const Weight& hw, const Rat& k, const Rat& g) {
  require(alg.affine(), errc::bad_input, "conformal weight needs affine type");
  Weight b = hw;
  b.grade = 0;
  Weight b2 = b;
  Weight rho = horizontal_rho(alg);
  for (int i = 0; i < alg.n(); ++i) b2.labels[i] += 2 * rho.labels[i];
  return alg.inner_norm(b, b2) / (2 * (k + g));
}

Rat conformal_weight(const Algebra& alg, const Weight& hw) {
  return conformal_weight_at(alg, hw, level_norm(alg, hw), dual_coxeter_norm(alg));
}

Rat central_charge(const Algebra& alg, const Rat& level) {
  require(alg.affine(), errc::bad_input, "central charge needs affine type");
  Rat g = dual_coxeter_norm(alg);
  return level * Rat(finite_dimension(alg.horizontal())) / (level + g);
}

Rat modular_anomaly(const Algebra& alg, const Weight& hw) {
  return conformal_weight(alg, hw) - central_charge(alg, level_norm(alg, hw)) / 24;
}

std::vector<Weight> dominant_weights(const Algebra& alg, long level) {
  require(alg.affine(), errc::bad_input, "dominant weights at a level need affine type");
  std::vector<Weight> out;
  std::vector<long> lab(alg.n(), 0);
  const auto& cw = alg.info.comarks;
  auto rec = [&](auto&& self, int i, long left) -> void {
    if (i == alg.n()) {
      if (left == 0) out.push_back(weight_of(lab));
      return;
    }
    for (long v = 0; v * cw[i] <= left; ++v) {
      lab[i] = v;
      self(self, i + 1, left - v * cw[i]);
    }
    lab[i] = 0;
  };
  rec(rec, 0, level);
  return out;
}

ModularData kac_peterson(const Algebra& alg, long level) {
  ModularData md;
  md.weights = dominant_weights(alg, level);
  int np = static_cast<int>(md.weights.size());
  const Algebra& h = alg.horizontal();
  WeylGroup wg = finite_weyl_group(h);
  Rat k = level;
  Rat g = dual_coxeter_norm(alg);
  // Shifted horizontal weights, in the full algebra's restricted symmetrizer
  // scale so that inner_norm applies.
  Weight hrho = h.rho();
  std::vector<Weight> sh(np);
  for (int i = 0; i < np; ++i) {
    sh[i] = alg.horizontal_part(md.weights[i]);
    for (int j = 0; j < h.n(); ++j) sh[i].labels[j] += hrho.labels[j];
  }
  // Precompute (w Lambda_(i), Lambda_(j)) pairings via the gram of h.
  int m = h.n();
  Eigen::MatrixXcd U(np, np);
  const double tau = 2 * std::numbers::pi;
  parallel_rows(np, [&](int r) {
    for (int c = 0; c < np; ++c) {
      Cplx acc = 0;
      for (size_t w = 0; w < wg.mats.size(); ++w) {
        Weight wl;
        wl.labels.assign(m, Rat(0));
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < m; ++j)
            if (wg.mats[w][i * m + j] != 0)
              wl.labels[i] += Rat(wg.mats[w][i * m + j]) * sh[r].labels[j];
        Rat arg = h.inner_norm(wl, sh[c]) / (k + g);
        acc += double(wg.signs[w]) * std::polar(1.0, -tau * rat_double(arg));
      }
      U(r, c) = acc;
    }
  });
  // Normalize: S = c U with |c| from unitarity of row 0 and the phase making
  // S_00 real positive.
  Weight vac = vacuum_weight(alg, level);
  int v = weight_index(md.weights, vac);
  double rn = U.row(v).norm();
  require(rn > 0 && std::abs(U(v, v)) > 1e-12 * rn, errc::internal,
          "degenerate Kac-Peterson vacuum row");
  Cplx cnorm = std::conj(U(v, v)) / (std::abs(U(v, v)) * rn);
  md.S = cnorm * U;
  md.T.resize(np);
  for (int i = 0; i < np; ++i) {
    Rat s = modular_anomaly(alg, md.weights[i]);
    md.T(i) = std::polar(1.0, tau * rat_double(s));
  }
  return md;
}

Weight current_act(const Automorphism& aut, const Weight& w) {
  Weight out;
  out.labels.assign(w.labels.size(), Rat(0));
  for (size_t i = 0; i < w.labels.size(); ++i) out.labels[aut.apply(i)] = w.labels[i];
  out.grade = w.grade;
  return out;
}

Rat monodromy_charge(const Algebra& alg, const Automorphism& aut, const Weight& w) {
  long k = 0;
  {
    Rat kl = alg.level(w);
    require(kl.get_den() == 1, errc::bad_input, "weight has non-integral level");
    k = kl.get_num().get_si();
  }
  Weight j = current_act(aut, vacuum_weight(alg, k));
  return rat_mod1(conformal_weight(alg, w) + conformal_weight(alg, j) -
                  conformal_weight(alg, current_act(aut, w)));
}

std::vector<SimpleCurrent> simple_currents(const Algebra& alg, long level) {
  require(alg.affine(), errc::bad_input, "simple currents need affine type");
  ModularData md = kac_peterson(alg, level);
  int np = static_cast<int>(md.weights.size());
  std::vector<SimpleCurrent> out;
  const double tau = 2 * std::numbers::pi;
  for (const Automorphism& aut : diagram_automorphisms(alg.cm)) {
    bool ident = true;
    for (int i = 0; i < aut.n(); ++i) ident = ident && aut.apply(i) == i;
    if (ident) continue;
    int order = validate_automorphism(alg, aut);
    bool ok = true;
    for (int a = 0; ok && a < np; ++a) {
      int sa = weight_index(md.weights, current_act(aut, md.weights[a]));
      for (int b = 0; ok && b < np; ++b) {
        Rat q = monodromy_charge(alg, aut, md.weights[b]);
        Cplx phase = std::polar(1.0, tau * rat_double(q));
        ok = std::abs(md.S(sa, b) - phase * md.S(a, b)) < 1e-8;
      }
    }
    if (ok) out.push_back(SimpleCurrent{aut, order});
  }
  return out;
}

DualLabels folded_dual_labels(const Algebra& alg, const FoldResult& fr) {
  require(alg.affine(), errc::bad_input, "dual labels need affine type");
  DualLabels dl;
  dl.gvee = 0;
  for (int t = 0; t < fr.alg.n(); ++t) {
    long avee = alg.info.comarks[fr.orbits.orbits[t][0]];
    dl.marks.push_back(rat(fr.orbits.length[t] * avee, fr.orbits.order));
    dl.gvee += dl.marks.back();
  }
  return dl;
}

Rat folded_level(const Algebra& alg, const FoldResult& fr, const Weight& wf) {
  DualLabels dl = folded_dual_labels(alg, fr);
  Rat k = 0;
  for (int t = 0; t < fr.alg.n(); ++t) k += dl.marks[t] * wf.labels[t];
  return k;
}

Cd2Report check_cd2(const Algebra& alg, const FoldResult& fr, const Weight& hw) {
  require(alg.affine(), errc::bad_input, "conformal weight matching needs affine type");
  Cd2Report rep;
  int N = fr.orbits.order;
  Rat k = level_norm(alg, hw);
  Rat g = dual_coxeter_norm(alg);
  DualLabels dl = folded_dual_labels(alg, fr);
  Weight hwf = project_weight(fr, hw);
  Rat kf = folded_level(alg, fr, hwf);
  require(kf * N == k, errc::internal, "folded level is not level/N");
  rep.delta = conformal_weight(alg, hw);
  // The folded conformal weight is scale-invariant, so it can be computed
  // entirely in the folded algebra's own normalization.
  rep.delta_fold = conformal_weight(fr.alg, hwf);
  int z = alg.affine_node;
  // Gamma_00 = sum over nontrivial powers of the images of the affine
  // fundamental weight, horizontal norms.
  rep.gamma00 = 0;
  std::vector<int> img(N);
  img[0] = z;
  // automorphism as node map comes from the orbit of z in cyclic order
  const auto& orb = fr.orbits.orbits[fr.orbits.orbit_of[z]];
  int len = static_cast<int>(orb.size());
  int pos = 0;
  while (orb[pos] != z) ++pos;
  for (int l = 1; l < N; ++l) img[l] = orb[(pos + l) % len];
  for (int l = 1; l < N; ++l)
    for (int lp = 1; lp < N; ++lp) {
      if (img[l] == z || img[lp] == z) continue;  // horizontal part is zero
      Weight a, b;
      a.labels.assign(alg.n(), Rat(0));
      b.labels.assign(alg.n(), Rat(0));
      a.labels[img[l]] = 1;
      b.labels[img[lp]] = 1;
      rep.gamma00 += alg.inner_norm(a, b);
    }
  rep.correction = rep.gamma00 * k * (1 + g / (k + g)) / (2 * N * N);
  long dim = finite_dimension(alg.horizontal());
  long dim_fold = finite_dimension(fr.alg.horizontal());
  Rat c = k * dim / (k + g);
  Rat kf_own = level_norm(fr.alg, hwf);
  Rat gf_own = dual_coxeter_norm(fr.alg);
  Rat c_fold = kf_own * dim_fold / (kf_own + gf_own);
  rep.anomaly_shift = (rep.delta - c / 24) - (rep.delta_fold - c_fold / 24);
  rep.holds = rep.delta == rep.delta_fold + rep.correction;
  return rep;
}

}  // namespace orbitfold
