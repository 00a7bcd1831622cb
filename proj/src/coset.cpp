#include "orbitfold/coset.hpp"

#include <algorithm>
#include <numbers>
#include <set>

#include "orbitfold/catalog.hpp"
#include "orbitfold/error.hpp"

namespace orbitfold {

namespace {

// Weight multiplicities keyed by (horizontal Dynkin labels, grade).
using HKey = std::pair<RVec, long>;
using GradedTable = std::map<HKey, long>;

long grade_index(const Algebra& aff, const Rat& gr) {
  require(gr.get_den() == 1, errc::unsupported_algebra,
          "branching needs integer grading (untwisted affine type)");
  return gr.get_num().get_si();
}

GradedTable graded_weights(const Algebra& aff, const Weight& hw, int q_order) {
  int depth = depth_for_grade(aff, hw, q_order);
  MultTable t = irreducible_multiplicities(aff, hw, depth);
  GradedTable out;
  for (const auto& [n, m] : t.mult) {
    Weight w = weight_at(aff, hw, n);
    Rat gr = hw.grade - w.grade;
    if (gr > q_order) continue;
    out[{aff.horizontal_part(w).labels, grade_index(aff, gr)}] += m;
  }
  return out;
}

struct TableCache {
  std::map<RVec, GradedTable> tables;  // affine labels determine the level
  int q_order = -1;

  const GradedTable& get(const Algebra& aff, const Weight& hw, int q) {
    require(q <= q_order || q_order < 0, errc::internal, "cache truncation too short");
    auto it = tables.find(hw.labels);
    if (it == tables.end())
      it = tables.emplace(hw.labels, graded_weights(aff, hw, q_order < 0 ? q : q_order)).first;
    return it->second;
  }
};

long lookup(const GradedTable& t, const RVec& labels, long grade) {
  auto it = t.find({labels, grade});
  return it == t.end() ? 0 : it->second;
}

// Ordinary branching coefficients of hw1 (x) hw2 under the diagonal affine
// subalgebra, by grade-by-grade stripping of dominant highest weights.
std::vector<std::vector<long>> strip_branching(const Algebra& aff, const Weight& hw1,
                                               const Weight& hw2,
                                               const std::vector<Weight>& diag,
                                               int q_order, TableCache& cache) {
  const GradedTable& t1 = cache.get(aff, hw1, q_order);
  const GradedTable& t2 = cache.get(aff, hw2, q_order);
  GradedTable conv;
  for (const auto& [k1, m1] : t1)
    for (const auto& [k2, m2] : t2) {
      long g = k1.second + k2.second;
      if (g > q_order) continue;
      RVec sum = k1.first;
      for (size_t i = 0; i < sum.size(); ++i) sum[i] += k2.first[i];
      conv[{std::move(sum), g}] += m1 * m2;
    }
  int np = static_cast<int>(diag.size());
  std::vector<const GradedTable*> tp(np);
  std::vector<RVec> hl(np);
  for (int i = 0; i < np; ++i) {
    tp[i] = &cache.get(aff, diag[i], q_order);
    hl[i] = aff.horizontal_part(diag[i]).labels;
  }
  // A grade-0 weight of L(M) below the diagonal weight L has strictly smaller
  // pairing with rho, so descending order makes the subtraction well-founded.
  const Algebra& h = aff.horizontal();
  std::vector<int> order(np);
  for (int i = 0; i < np; ++i) order[i] = i;
  std::vector<Rat> key(np);
  for (int i = 0; i < np; ++i) {
    Weight l;
    l.labels = hl[i];
    key[i] = h.inner(l, h.rho());
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (key[a] != key[b]) return key[a] > key[b];
    return hl[a] < hl[b];
  });
  std::vector<std::vector<long>> b(np, std::vector<long>(q_order + 1, 0));
  for (long n = 0; n <= q_order; ++n)
    for (int idx : order) {
      long expected = 0;
      for (int j = 0; j < np; ++j)
        for (long n0 = 0; n0 <= n; ++n0) {
          if (j == idx && n0 == n) continue;  // the unknown itself
          if (b[j][n0] != 0) expected += b[j][n0] * lookup(*tp[j], hl[idx], n - n0);
        }
      auto it = conv.find({hl[idx], n});
      long have = it == conv.end() ? 0 : it->second;
      long r = have - expected;
      require(r >= 0, errc::negative_multiplicity, "negative branching multiplicity");
      b[idx][n] = r;
    }
  return b;
}

Weight vacuum_weight(const Algebra& aff, long level) {
  Weight w;
  w.labels.assign(aff.n(), Rat(0));
  w.labels[aff.affine_node] = level;
  return w;
}

int weight_index(const std::vector<Weight>& ws, const Weight& w) {
  for (size_t i = 0; i < ws.size(); ++i)
    if (ws[i] == w) return static_cast<int>(i);
  fail(errc::internal, "weight not in the dominant list");
}

bool is_identity(const Automorphism& a) {
  for (int i = 0; i < a.n(); ++i)
    if (a.apply(i) != i) return false;
  return true;
}

QSeries coset_series(const CosetSpec& spec, const Triple& t,
                     const std::vector<long>& coeffs, int q_order) {
  Rat lead = conformal_weight(spec.haff, spec.w1[t[0]]) +
             conformal_weight(spec.haff, spec.w2[t[1]]) -
             conformal_weight(spec.haff, spec.wp[t[2]]) -
             spec.cdot / 24;
  QSeries s = QSeries::zero(lead, Rat(1), q_order);
  for (int n = 0; n <= q_order; ++n) s.c[n] = Cyclotomic(Rat(coeffs[n]));
  return s;
}

}  // namespace

CosetSpec build_coset(const Algebra& h, long k1, long k2) {
  require(h.info.kind == Kind::Finite, errc::unsupported_algebra,
          "diagonal cosets need a finite simple algebra");
  require(diagram_connected(h.cm, [&] {
            std::vector<int> all(h.n());
            for (int i = 0; i < h.n(); ++i) all[i] = i;
            return all;
          }()),
          errc::unsupported_algebra, "diagonal cosets need a simple algebra");
  require(k1 >= 1 && k2 >= 1, errc::bad_input, "levels must be positive");
  CosetSpec spec;
  spec.h = h;
  spec.haff = affinize(h);
  spec.k1 = k1;
  spec.k2 = k2;
  spec.kp = k1 + k2;
  spec.w1 = dominant_weights(spec.haff, k1);
  spec.w2 = dominant_weights(spec.haff, k2);
  spec.wp = dominant_weights(spec.haff, spec.kp);
  spec.c1 = central_charge(spec.haff, Rat(k1));
  spec.c2 = central_charge(spec.haff, Rat(k2));
  spec.cp = central_charge(spec.haff, Rat(spec.kp));
  spec.cdot = spec.c1 + spec.c2 - spec.cp;
  return spec;
}

std::map<int, QSeries> branching_functions(const CosetSpec& spec, int i1, int i2,
                                           int q_order) {
  TableCache cache;
  cache.q_order = q_order;
  auto b = strip_branching(spec.haff, spec.w1[i1], spec.w2[i2], spec.wp, q_order, cache);
  std::map<int, QSeries> out;
  for (int ip = 0; ip < static_cast<int>(spec.wp.size()); ++ip)
    out.emplace(ip, coset_series(spec, Triple{i1, i2, ip}, b[ip], q_order));
  return out;
}

QSeries branching_function(const CosetSpec& spec, const Triple& t, int q_order) {
  return branching_functions(spec, t[0], t[1], q_order).at(t[2]);
}

IdGroup identification_group(const CosetSpec& spec) {
  auto common = simple_currents(spec.haff, spec.k1);
  for (long k : {spec.k2, spec.kp}) {
    auto sc = simple_currents(spec.haff, k);
    std::erase_if(common, [&](const SimpleCurrent& c) {
      for (const auto& o : sc)
        if (o.aut.perm == c.aut.perm) return false;
      return true;
    });
  }
  IdGroup g;
  g.elems.push_back(identity_automorphism(spec.haff.n()));
  for (const auto& c : common) g.elems.push_back(c.aut);
  // close under composition (the diagram-automorphism currents form a group,
  // but per-level detection could in principle return a partial set)
  for (size_t a = 0; a < g.elems.size(); ++a)
    for (size_t b = 0; b <= a; ++b) {
      Automorphism p = compose(g.elems[a], g.elems[b]);
      bool found = false;
      for (const auto& e : g.elems) found = found || e.perm == p.perm;
      if (!found) g.elems.push_back(std::move(p));
    }
  return g;
}

Triple group_act(const CosetSpec& spec, const Automorphism& aut, const Triple& t) {
  return Triple{weight_index(spec.w1, current_act(aut, spec.w1[t[0]])),
                weight_index(spec.w2, current_act(aut, spec.w2[t[1]])),
                weight_index(spec.wp, current_act(aut, spec.wp[t[2]]))};
}

std::vector<FieldOrbit> selection_and_orbits(const CosetSpec& spec, const IdGroup& g) {
  int n1 = static_cast<int>(spec.w1.size());
  int n2 = static_cast<int>(spec.w2.size());
  int np = static_cast<int>(spec.wp.size());
  std::set<Triple> keep;
  for (int a = 0; a < n1; ++a)
    for (int b = 0; b < n2; ++b)
      for (int c = 0; c < np; ++c) {
        bool ok = true;
        for (size_t e = 1; ok && e < g.elems.size(); ++e) {
          Rat q = rat_mod1(monodromy_charge(spec.haff, g.elems[e], spec.w1[a]) +
                           monodromy_charge(spec.haff, g.elems[e], spec.w2[b]) -
                           monodromy_charge(spec.haff, g.elems[e], spec.wp[c]));
          ok = q == 0;
        }
        if (ok) keep.insert(Triple{a, b, c});
      }
  std::vector<FieldOrbit> orbits;
  std::set<Triple> seen;
  for (const Triple& t : keep) {
    if (seen.count(t)) continue;
    FieldOrbit o;
    for (size_t e = 0; e < g.elems.size(); ++e) {
      Triple u = group_act(spec, g.elems[e], t);
      require(keep.count(u) > 0, errc::internal, "identification orbit leaves selection");
      if (u == t) o.stab.push_back(static_cast<int>(e));
      if (!seen.count(u)) {
        seen.insert(u);
        o.members.push_back(u);
      }
    }
    std::sort(o.members.begin(), o.members.end());
    o.rep = o.members.front();
    require(o.members.size() * o.stab.size() == g.elems.size(), errc::internal,
            "orbit-stabilizer mismatch");
    orbits.push_back(std::move(o));
  }
  return orbits;
}

QSeries twining_branching(const CosetSpec& spec, const Triple& t,
                          const Automorphism& aut, int q_order) {
  if (is_identity(aut)) return branching_function(spec, t, q_order);
  require(group_act(spec, aut, t) == t, errc::bad_input,
          "twining branching needs a fixed point of the current");
  OrbitData od = orbit_data(spec.haff, aut);
  Rat lead = conformal_weight(spec.haff, spec.w1[t[0]]) +
             conformal_weight(spec.haff, spec.w2[t[1]]) -
             conformal_weight(spec.haff, spec.wp[t[2]]) -
             spec.cdot / 24;
  if (!od.linking) {
    // Rotation family: each twined factor character is a single q-power, so
    // the branching function collapses to one term with coefficient 1.
    QSeries s = QSeries::zero(lead, Rat(1), q_order);
    s.c[0] = Cyclotomic(Rat(1));
    return s;
  }
  // Linking condition holds: the twining branching function is the ordinary
  // branching function of the folded coset at the projected weights.
  FoldResult fr = fold(spec.haff, aut);
  Weight f1 = project_weight(fr, spec.w1[t[0]]);
  Weight f2 = project_weight(fr, spec.w2[t[1]]);
  Weight fp = project_weight(fr, spec.wp[t[2]]);
  Rat kf = fr.alg.level(fp);
  require(kf.get_den() == 1, errc::unsupported_algebra, "folded level not integral");
  std::vector<Weight> diag = dominant_weights(fr.alg, kf.get_num().get_si());
  TableCache cache;
  cache.q_order = q_order;
  auto b = strip_branching(fr.alg, f1, f2, diag, q_order, cache);
  int ip = weight_index(diag, fp);
  QSeries s = QSeries::zero(lead, Rat(1), q_order);
  for (int n = 0; n <= q_order; ++n) s.c[n] = Cyclotomic(Rat(b[ip][n]));
  return s;
}

ResolvedSpectrum resolve(const CosetSpec& spec, const IdGroup& g,
                         const std::vector<FieldOrbit>& orbits, int q_order) {
  ResolvedSpectrum out;
  out.orbits = orbits;
  // Stabilizer generators and per-field characters.
  std::vector<std::vector<int>> stab_power;  // orbit -> stab elem index of gen^m
  for (size_t oi = 0; oi < orbits.size(); ++oi) {
    const FieldOrbit& o = orbits[oi];
    int p = static_cast<int>(o.stab.size());
    // Find a generator of the (cyclic) stabilizer.
    std::vector<int> powers;
    for (int cand : o.stab) {
      powers.assign(1, 0);  // identity
      Automorphism acc = g.elems[cand];
      while (!is_identity(acc)) {
        int idx = -1;
        for (int e : o.stab)
          if (g.elems[e].perm == acc.perm) idx = e;
        require(idx >= 0, errc::internal, "stabilizer not closed");
        powers.push_back(idx);
        acc = compose(acc, g.elems[cand]);
      }
      if (static_cast<int>(powers.size()) == p) break;
    }
    require(static_cast<int>(powers.size()) == p, errc::unsupported_algebra,
            "non-cyclic stabilizer");
    stab_power.push_back(powers);
    std::vector<QSeries> bw(p);
    for (int m = 0; m < p; ++m)
      bw[m] = twining_branching(spec, o.rep, g.elems[powers[m]], q_order);
    for (int j = 0; j < p; ++j) {
      QSeries acc = bw[0].scaled(Cyclotomic(rat(1, p)));
      for (int m = 1; m < p; ++m)
        acc = qadd(acc, bw[m].scaled(Cyclotomic::exp2pi(rat(-j * m, p)) *
                                     Cyclotomic(rat(1, p))));
      ResolvedField f;
      f.orbit = static_cast<int>(oi);
      f.psi = j;
      f.exponent = acc.lead;
      bool found = false;
      for (int n = 0; n <= acc.trunc(); ++n) {
        auto v = acc.c[n].as_rational();
        require(v.has_value() && v->get_den() == 1 && *v >= 0,
                errc::negative_multiplicity,
                "resolved character has a non-integral or negative coefficient");
        if (!found && *v != 0) {
          f.exponent = acc.lead + Rat(n) * acc.step;
          found = true;
        }
      }
      f.character = std::move(acc);
      out.fields.push_back(std::move(f));
    }
  }
  // Vacuum field: the orbit containing the all-vacuum triple.
  {
    Triple vac{weight_index(spec.w1, vacuum_weight(spec.haff, spec.k1)),
               weight_index(spec.w2, vacuum_weight(spec.haff, spec.k2)),
               weight_index(spec.wp, vacuum_weight(spec.haff, spec.kp))};
    out.vacuum = -1;
    for (size_t fi = 0; fi < out.fields.size(); ++fi) {
      const FieldOrbit& o = orbits[out.fields[fi].orbit];
      if (out.fields[fi].psi == 0 &&
          std::find(o.members.begin(), o.members.end(), vac) != o.members.end())
        out.vacuum = static_cast<int>(fi);
    }
    require(out.vacuum >= 0, errc::internal, "vacuum orbit missing");
  }
  // Resolved modular data.
  ModularData md1 = kac_peterson(spec.haff, spec.k1);
  ModularData md2 = kac_peterson(spec.haff, spec.k2);
  ModularData mdp = kac_peterson(spec.haff, spec.kp);
  int nf = static_cast<int>(out.fields.size());
  out.S.resize(nf, nf);
  out.T.resize(nf);
  const double tau2 = 2 * std::numbers::pi;
  for (int a = 0; a < nf; ++a) {
    const ResolvedField& fa = out.fields[a];
    const FieldOrbit& oa = orbits[fa.orbit];
    int pa = static_cast<int>(oa.stab.size());
    out.T(a) = std::polar(1.0, tau2 * rat_double(fa.exponent));
    for (int b = 0; b < nf; ++b) {
      const ResolvedField& fb = out.fields[b];
      const FieldOrbit& ob = orbits[fb.orbit];
      int pb = static_cast<int>(ob.stab.size());
      std::complex<double> acc = 0;
      for (int ma = 0; ma < pa; ++ma) {
        int e = stab_power[fa.orbit][ma];
        int mb = -1;
        for (int m = 0; m < pb; ++m)
          if (stab_power[fb.orbit][m] == e) mb = m;
        if (mb < 0) continue;  // element not in the common stabilizer
        std::complex<double> block;
        if (e == 0)
          block = md1.S(oa.rep[0], ob.rep[0]) * md2.S(oa.rep[1], ob.rep[1]) *
                  std::conj(mdp.S(oa.rep[2], ob.rep[2]));
        else
          block = 1.0;  // one-dimensional twined sector of the rotation family
        acc += std::polar(1.0, tau2 * (double(fa.psi * ma) / pa - double(fb.psi * mb) / pb)) *
               block;
      }
      out.S(a, b) = double(g.elems.size()) / (double(pa) * double(pb)) * acc;
    }
  }
  return out;
}

ModularChecks modular_consistency(const Eigen::MatrixXcd& S, const Eigen::VectorXcd& T) {
  ModularChecks r;
  int n = static_cast<int>(S.rows());
  Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(n, n);
  r.symmetry = (S - S.transpose()).cwiseAbs().maxCoeff();
  r.unitarity = (S * S.adjoint() - I).cwiseAbs().maxCoeff();
  Eigen::MatrixXcd S2 = S * S;
  // S^2 must be a permutation matrix: entries 0 or 1 with unit row sums.
  double dev = 0;
  for (int i = 0; i < n; ++i) {
    double row = 0;
    for (int j = 0; j < n; ++j) {
      double v = std::abs(S2(i, j));
      dev = std::max(dev, std::min(std::abs(S2(i, j) - 1.0), v));
      row += (v > 0.5) ? 1 : 0;
    }
    if (row != 1) dev = std::max(dev, 1.0);
  }
  r.conjugation = dev;
  Eigen::MatrixXcd ST = S * T.asDiagonal();
  r.st_cubed = (ST * ST * ST - S2).cwiseAbs().maxCoeff();
  return r;
}

VerlindeReport verlinde_check(const Eigen::MatrixXcd& S, int vacuum, double tol) {
  int n = static_cast<int>(S.rows());
  VerlindeReport rep;
  rep.residual = 0;
  bool nonneg = true;
  for (int i = 0; i < n; ++i) {
    Eigen::MatrixXi ni(n, n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        std::complex<double> acc = 0;
        for (int m = 0; m < n; ++m)
          acc += S(i, m) * S(j, m) * std::conj(S(k, m)) / S(vacuum, m);
        long r = std::lround(acc.real());
        rep.residual = std::max(rep.residual, std::abs(acc - std::complex<double>(r)));
        ni(j, k) = static_cast<int>(r);
        nonneg = nonneg && r >= 0;
      }
    rep.fusion.push_back(std::move(ni));
  }
  rep.integral = nonneg && rep.residual < tol;
  return rep;
}

}  // namespace orbitfold
