#include "orbitfold/catalog.hpp"

#include <map>
#include <set>

#include "orbitfold/error.hpp"

namespace orbitfold {

CartanMatrix classical_cartan(char family, int rank) {
  int n = rank;
  CartanMatrix cm;
  cm.a.assign(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) cm.a[i][i] = 2;
  auto link = [&](int i, int j, long aij, long aji) {
    cm.a[i][j] = aij;
    cm.a[j][i] = aji;
  };
  switch (family) {
    case 'A':
      require(n >= 1, errc::bad_input, "A_n needs rank >= 1");
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1, -1);
      break;
    case 'B':
      require(n >= 2, errc::bad_input, "B_n needs rank >= 2");
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 2, n - 1, -1, -2);  // last node short
      break;
    case 'C':
      require(n >= 2, errc::bad_input, "C_n needs rank >= 2");
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 2, n - 1, -2, -1);  // last node long
      break;
    case 'D':
      require(n >= 3, errc::bad_input, "D_n needs rank >= 3");
      for (int i = 0; i + 3 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 3, n - 2, -1, -1);
      link(n - 3, n - 1, -1, -1);
      break;
    default:
      fail(errc::unsupported_algebra, std::string("unknown family ") + family);
  }
  return cm;
}

std::vector<long> highest_root(const Algebra& alg) {
  require(alg.info.kind == Kind::Finite, errc::bad_input, "highest root needs finite type");
  int n = alg.n();
  // Close the simple roots under simple reflections, in root coordinates.
  std::set<std::vector<long>> roots;
  std::vector<std::vector<long>> frontier;
  for (int i = 0; i < n; ++i) {
    std::vector<long> e(n, 0);
    e[i] = 1;
    roots.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<long>> next;
    for (const auto& b : frontier)
      for (int i = 0; i < n; ++i) {
        long pair = 0;  // <beta, alpha_i^vee> = sum_j A_ij beta_j
        for (int j = 0; j < n; ++j) pair += alg.cm.at(i, j) * b[j];
        std::vector<long> r = b;
        r[i] -= pair;
        if (roots.insert(r).second) next.push_back(r);
      }
    frontier = std::move(next);
  }
  std::vector<long> theta;
  long best = -1;
  for (const auto& r : roots) {
    long h = 0;
    bool pos = true;
    for (long x : r) {
      h += x;
      if (x < 0) pos = false;
    }
    if (pos && h > best) {
      best = h;
      theta = r;
    }
  }
  return theta;
}

Algebra affinize(const Algebra& fin) {
  int n = fin.n();
  std::vector<long> theta = highest_root(fin);
  // (theta, alpha_j) and (theta, theta) in the symmetrizer normalization.
  auto pr = [&](int j) {
    Rat v = 0;
    for (int i = 0; i < n; ++i) v += Rat(theta[i] * fin.info.sym[i] * fin.cm.at(i, j));
    return v;
  };
  Rat tt = 0;
  for (int j = 0; j < n; ++j) tt += pr(j) * Rat(theta[j]);
  CartanMatrix cm;
  cm.a.assign(n + 1, std::vector<long>(n + 1, 0));
  cm.a[0][0] = 2;
  for (int j = 0; j < n; ++j) {
    Rat a0j = Rat(-2) * pr(j) / tt;                        // <alpha_j, theta^vee>
    Rat aj0 = Rat(-1) * pr(j) / Rat(fin.info.sym[j]);      // <−theta, alpha_j^vee>
    require(a0j.get_den() == 1 && aj0.get_den() == 1, errc::internal,
            "affinization produced non-integer entries");
    cm.a[0][j + 1] = a0j.get_num().get_si();
    cm.a[j + 1][0] = aj0.get_num().get_si();
    for (int k = 0; k < n; ++k) cm.a[j + 1][k + 1] = fin.cm.at(j, k);
  }
  return make_algebra(std::move(cm), 0);
}

Algebra catalog(const std::string& name) {
  bool aff = name.size() > 3 && name.substr(name.size() - 3) == "aff";
  std::string base = aff ? name.substr(0, name.size() - 3) : name;
  require(base.size() >= 2, errc::unsupported_algebra, "unknown algebra '" + name + "'");
  char fam = base[0];
  int rank = 0;
  try {
    rank = std::stoi(base.substr(1));
  } catch (...) {
    fail(errc::unsupported_algebra, "unknown algebra '" + name + "'");
  }
  Algebra fin = make_algebra(classical_cartan(fam, rank));
  return aff ? affinize(fin) : fin;
}

std::vector<std::string> catalog_names() {
  return {"A1", "A2", "A3", "A4", "B3", "C2", "C4", "D4",
          "A1aff", "A2aff", "A3aff", "A4aff", "B3aff", "C2aff", "C4aff", "D4aff"};
}

}  // namespace orbitfold
