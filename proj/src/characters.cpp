#include "orbitfold/characters.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "orbitfold/affine.hpp"
#include "orbitfold/error.hpp"

namespace orbitfold {

namespace {

int height(const NVec& n) {
  int h = 0;
  for (int v : n) h += v;
  return h;
}

// All n with sum <= depth (and n <= box), sorted by height then lexicographic.
std::vector<NVec> cone_points(int rank, int depth, const std::optional<NVec>& box) {
  std::vector<NVec> out;
  NVec cur(rank, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == rank) {
      out.push_back(cur);
      return;
    }
    int cap = box ? std::min(left, (*box)[pos]) : left;
    for (int v = 0; v <= cap; ++v) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, depth);
  std::sort(out.begin(), out.end(), [](const NVec& a, const NVec& b) {
    int ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a < b;
  });
  return out;
}

// (beta|gamma) for root-lattice vectors, symmetrizer normalization.
Rat rl_inner(const Algebra& alg, const NVec& a, const NVec& b) {
  Rat out = 0;
  for (int i = 0; i < alg.n(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < alg.n(); ++j)
      if (b[j] != 0) out += Rat(a[i]) * Rat(alg.info.sym[i] * alg.cm.at(i, j)) * Rat(b[j]);
  }
  return out;
}

// (beta|rho) = sum_i beta_i d_i.
Rat rl_rho(const Algebra& alg, const NVec& a) {
  Rat out = 0;
  for (int i = 0; i < alg.n(); ++i) out += Rat(a[i] * alg.info.sym[i]);
  return out;
}

}  // namespace

Weight weight_at(const Algebra& alg, const Weight& hw, const NVec& n) {
  Weight w = hw;
  for (int i = 0; i < alg.n(); ++i) {
    if (n[i] == 0) continue;
    for (int j = 0; j < alg.n(); ++j) w.labels[j] -= Rat(n[i] * alg.cm.at(j, i));
    w.grade -= Rat(n[i]) * alg.root_grade(i);
  }
  return w;
}

MultTable root_multiplicities(const Algebra& alg, int depth) {
  int r = alg.n();
  // Peterson recursion on c_beta = sum_{k | beta} mult(beta/k)/k.
  MultTable out;
  out.depth = depth;
  std::map<NVec, Rat> c;
  std::vector<std::vector<NVec>> byh(depth + 1);
  for (int i = 0; i < r; ++i) {
    NVec e(r, 0);
    e[i] = 1;
    c[e] = 1;
    out.mult[e] = 1;
    byh[1].push_back(e);
  }
  for (int h = 2; h <= depth; ++h) {
    std::set<NVec> cand;
    for (int h1 = 1; h1 < h; ++h1)
      for (const auto& b1 : byh[h1])
        for (const auto& b2 : byh[h - h1]) {
          NVec s(r);
          for (int i = 0; i < r; ++i) s[i] = b1[i] + b2[i];
          cand.insert(std::move(s));
        }
    for (const auto& beta : cand) {
      Rat rhs = 0;
      for (int h1 = 1; h1 < h; ++h1)
        for (const auto& b1 : byh[h1]) {
          NVec b2(r);
          bool ok = true;
          for (int i = 0; i < r; ++i) {
            b2[i] = beta[i] - b1[i];
            if (b2[i] < 0) ok = false;
          }
          if (!ok) continue;
          auto it = c.find(b2);
          if (it == c.end()) continue;
          rhs += rl_inner(alg, b1, b2) * c[b1] * it->second;
        }
      // Contribution of proper divisors to c_beta = sum_k mult(beta/k)/k;
      // mults at lower heights are already final.
      Rat div_part = 0;
      for (int k = 2; k <= h; ++k) {
        bool div = true;
        NVec q(r);
        for (int i = 0; i < r; ++i) {
          if (beta[i] % k != 0) { div = false; break; }
          q[i] = beta[i] / k;
        }
        if (div) div_part += rat(out.at(q), k);
      }
      Rat den = rl_inner(alg, beta, beta) - 2 * rl_rho(alg, beta);
      Rat cb;
      if (den == 0) {
        // (beta, beta - 2 rho) = 0 happens for roots only when beta is
        // simple, so beta is not a root here; c_beta is the divisor part.
        require(rhs == 0, errc::internal, "inconsistent Peterson recursion");
        cb = div_part;
      } else {
        cb = rhs / den;
        Rat m = cb - div_part;
        require(m.get_den() == 1 && m >= 0, errc::internal,
                "non-integral root multiplicity");
        if (m != 0) out.mult[beta] = m.get_num().get_si();
      }
      if (cb != 0) {
        c[beta] = cb;
        byh[h].push_back(beta);
      }
    }
  }
  return out;
}

MultTable verma_multiplicities(const Algebra& alg, int depth,
                               const std::optional<NVec>& box) {
  MultTable roots = root_multiplicities(alg, depth);
  MultTable out;
  out.depth = depth;
  out.box = box;
  std::vector<NVec> pts = cone_points(alg.n(), depth, box);
  std::map<NVec, long> p;
  p[NVec(alg.n(), 0)] = 1;
  // Partition-function DP: one convolution pass per color (root counted with
  // its multiplicity).
  for (const auto& [beta, mu] : roots.mult)
    for (long rep = 0; rep < mu; ++rep)
      for (const auto& n : pts) {
        NVec prev(alg.n());
        bool ok = true;
        for (int i = 0; i < alg.n(); ++i) {
          prev[i] = n[i] - beta[i];
          if (prev[i] < 0) { ok = false; break; }
        }
        if (!ok) continue;
        auto it = p.find(prev);
        if (it != p.end() && it->second != 0) p[n] += it->second;
      }
  for (const auto& n : pts)
    if (auto it = p.find(n); it != p.end() && it->second != 0) out.mult[n] = it->second;
  return out;
}

MultTable irreducible_multiplicities(const Algebra& alg, const Weight& hw, int depth,
                                     const std::optional<NVec>& box) {
  MultTable roots = root_multiplicities(alg, depth);
  // Root weights, precomputed.
  std::vector<std::pair<NVec, long>> rts(roots.mult.begin(), roots.mult.end());
  std::vector<Weight> rtw;
  Weight zero = hw;
  for (auto& l : zero.labels) l = 0;
  zero.grade = 0;
  for (const auto& [beta, mu] : rts) {
    Weight w = zero;
    for (int i = 0; i < alg.n(); ++i) {
      if (beta[i] == 0) continue;
      for (int j = 0; j < alg.n(); ++j) w.labels[j] += Rat(beta[i] * alg.cm.at(j, i));
      w.grade += Rat(beta[i]) * alg.root_grade(i);
    }
    rtw.push_back(w);
  }

  MultTable out;
  out.hw = hw;
  out.depth = depth;
  out.box = box;
  Weight rho = alg.rho();
  Weight hwr = hw;
  for (int i = 0; i < alg.n(); ++i) hwr.labels[i] += rho.labels[i];
  Rat c2 = alg.inner(hwr, hwr);

  std::vector<NVec> pts = cone_points(alg.n(), depth, box);
  for (const auto& n : pts) {
    if (height(n) == 0) {
      out.mult[n] = 1;
      continue;
    }
    Weight lam = weight_at(alg, hw, n);
    Rat num = 0;
    for (size_t t = 0; t < rts.size(); ++t) {
      const NVec& beta = rts[t].first;
      for (int k = 1;; ++k) {
        NVec up(alg.n());
        bool ok = true;
        for (int i = 0; i < alg.n(); ++i) {
          up[i] = n[i] - k * beta[i];
          if (up[i] < 0) { ok = false; break; }
        }
        if (!ok) break;
        long m = out.at(up);
        if (m == 0) continue;
        // (lambda + k beta | beta)
        Weight lkb = lam;
        for (int j = 0; j < alg.n(); ++j) lkb.labels[j] += Rat(k) * rtw[t].labels[j];
        lkb.grade += Rat(k) * rtw[t].grade;
        num += Rat(rts[t].second) * Rat(m) * alg.inner(lkb, rtw[t]);
      }
    }
    num *= 2;
    Weight lr = lam;
    for (int i = 0; i < alg.n(); ++i) lr.labels[i] += rho.labels[i];
    Rat den = c2 - alg.inner(lr, lr);
    if (den == 0) {
      require(num == 0, errc::internal, "Freudenthal recursion hit a vanishing denominator");
      continue;
    }
    Rat m = num / den;
    require(m.get_den() == 1 && m >= 0, errc::negative_multiplicity,
            "Freudenthal recursion produced a non-integral or negative multiplicity");
    if (m != 0) out.mult[n] = m.get_num().get_si();
  }
  return out;
}

Int weyl_dimension(const Algebra& alg, const Weight& hw) {
  require(alg.info.kind == Kind::Finite, errc::bad_input,
          "Weyl dimension formula needs finite type");
  // All positive roots fit below height = depth where Peterson stabilizes;
  // sum of marks of the highest root bounds it, so iterate until no new
  // roots appear.
  int depth = alg.n();
  MultTable roots = root_multiplicities(alg, depth);
  for (;;) {
    MultTable more = root_multiplicities(alg, depth * 2);
    if (more.mult.size() == roots.mult.size()) break;
    roots = std::move(more);
    depth *= 2;
  }
  Weight rho = alg.rho();
  Weight hwr = hw;
  for (int i = 0; i < alg.n(); ++i) hwr.labels[i] += rho.labels[i];
  Rat num = 1, den = 1;
  for (const auto& [beta, mu] : roots.mult) {
    Weight bw;
    bw.labels.assign(alg.n(), Rat(0));
    for (int i = 0; i < alg.n(); ++i)
      if (beta[i] != 0)
        for (int j = 0; j < alg.n(); ++j) bw.labels[j] += Rat(beta[i] * alg.cm.at(j, i));
    num *= alg.inner(hwr, bw);
    den *= alg.inner(rho, bw);
  }
  Rat d = num / den;
  require(d.get_den() == 1 && d > 0, errc::internal, "Weyl dimension is not a positive integer");
  return d.get_num();
}

int depth_for_grade(const Algebra& alg, const Weight& hw, int q_order) {
  require(alg.affine(), errc::bad_input, "grade bound needs affine type");
  // Casimir bound: module weights satisfy |lambda+rho|^2 <= |hw+rho|^2, and
  // the grade contributes -2*g*level_sym(hw+rho) to the norm, bounding the
  // horizontal norm and hence the horizontal depth.
  Weight rho = alg.rho();
  Weight hwr = hw;
  for (int i = 0; i < alg.n(); ++i) hwr.labels[i] += rho.labels[i];
  Weight hwr0 = hwr;
  hwr0.grade = 0;
  double hb2 = rat_double(alg.inner(hwr0, hwr0));
  double ks = rat_double(alg.level_sym(hwr));
  double r2 = hb2 + 2.0 * ks * q_order;
  long amarks = 0;
  for (long a : alg.info.marks) amarks += a;
  double extra = 0;
  for (int i : alg.horizontal_nodes()) {
    Weight fi;
    fi.labels.assign(alg.n(), Rat(0));
    fi.labels[i] = 1;
    double fn = std::sqrt(rat_double(alg.inner(fi, fi)));
    extra += (std::sqrt(hb2) + std::sqrt(std::max(r2, 0.0))) * fn / alg.info.sym[i];
  }
  return static_cast<int>(q_order * amarks + std::ceil(extra)) + 2;
}

QSeries virasoro_specialize(const Algebra& alg, const MultTable& table, int q_order) {
  if (!alg.affine()) {
    require(q_order <= table.depth && !table.box, errc::depth_insufficient,
            "table does not cover the requested order");
    QSeries s = QSeries::zero(0, 1, q_order);
    for (const auto& [n, m] : table.mult) {
      int h = height(n);
      if (h <= q_order) s.c[h] += Cyclotomic(Rat(m));
    }
    return s;
  }
  require(!table.box && table.depth >= depth_for_grade(alg, table.hw, q_order),
          errc::depth_insufficient, "table too shallow for the requested grade");
  int z = alg.affine_node;
  long az = alg.info.marks[z];
  Rat lead = modular_anomaly(alg, table.hw);
  QSeries s = QSeries::zero(lead, Rat(1, az), static_cast<int>(q_order * az));
  for (const auto& [n, m] : table.mult)
    if (n[z] <= q_order * az) s.c[n[z]] += Cyclotomic(Rat(m));
  return s;
}

}  // namespace orbitfold
