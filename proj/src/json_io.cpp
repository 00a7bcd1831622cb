#include "orbitfold/json_io.hpp"

#include <fstream>
#include <sstream>

#include "orbitfold/catalog.hpp"
#include "orbitfold/error.hpp"

namespace orbitfold {

Json rat_json(const Rat& q) { return q.get_str(); }

Rat rat_parse(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  require(j.is_string(), errc::bad_input, "expected a rational as string or integer");
  std::string s = j.get<std::string>();
  size_t slash = s.find('/');
  if (slash == std::string::npos) return rat(std::stol(s));
  return rat(std::stol(s.substr(0, slash)), std::stol(s.substr(slash + 1)));
}

Json cartan_json(const CartanMatrix& cm) {
  Json rows = Json::array();
  for (int i = 0; i < cm.n(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < cm.n(); ++j) row.push_back(cm.at(j, i));
    rows.push_back(std::move(row));
  }
  return rows;
}

CartanMatrix cartan_parse(const Json& j) {
  require(j.is_array() && !j.empty(), errc::bad_input, "cartan block must be a matrix");
  int n = static_cast<int>(j.size());
  CartanMatrix cm;
  cm.a.assign(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) {
    require(j[i].is_array() && static_cast<int>(j[i].size()) == n, errc::bad_input,
            "cartan block must be square");
    for (int k = 0; k < n; ++k) cm.a[k][i] = j[i][k].get<long>();
  }
  return cm;
}

Json weight_json(const Weight& w) {
  Json labels = Json::array();
  for (const Rat& l : w.labels) labels.push_back(rat_json(l));
  Json out;
  out["labels"] = std::move(labels);
  if (w.grade != 0) out["grade"] = rat_json(w.grade);
  return out;
}

Weight weight_parse(const Json& j) {
  Weight w;
  for (const Json& l : j.at("labels")) w.labels.push_back(rat_parse(l));
  if (j.contains("grade")) w.grade = rat_parse(j["grade"]);
  return w;
}

Json algebra_json(const Algebra& alg) {
  Json out;
  out["kind"] = kind_name(alg.info.kind);
  out["rank"] = alg.n();
  out["cartan"] = cartan_json(alg.cm);
  out["symmetrizer"] = alg.info.sym;
  if (alg.affine()) {
    out["affine_node"] = alg.affine_node;
    out["marks"] = alg.info.marks;
    out["comarks"] = alg.info.comarks;
    out["dual_coxeter"] = alg.dual_coxeter();
  }
  return out;
}

Json qseries_json(const QSeries& s) {
  Json out;
  out["lead"] = rat_json(s.lead);
  out["step"] = rat_json(s.step);
  Json coeffs = Json::array();
  for (const Cyclotomic& c : s.c) {
    auto r = c.as_rational();
    if (r)
      coeffs.push_back(rat_json(*r));
    else
      coeffs.push_back(c.str());
  }
  out["coefficients"] = std::move(coeffs);
  return out;
}

namespace {

Json nvec_json(const NVec& n) {
  Json out = Json::array();
  for (int v : n) out.push_back(v);
  return out;
}

}  // namespace

Json mult_table_json(const Algebra& alg, const MultTable& t) {
  Json out;
  out["highest_weight"] = weight_json(t.hw);
  out["depth"] = t.depth;
  if (t.box) out["box"] = nvec_json(*t.box);
  Json entries = Json::array();
  for (const auto& [n, m] : t.mult) {
    Json e;
    e["depth_coordinates"] = nvec_json(n);
    e["weight"] = weight_json(weight_at(alg, t.hw, n));
    e["multiplicity"] = m;
    entries.push_back(std::move(e));
  }
  out["entries"] = std::move(entries);
  return out;
}

Json twining_table_json(const Algebra& alg, const TwiningTable& t) {
  Json out;
  out["highest_weight"] = weight_json(t.hw);
  out["depth"] = t.depth;
  if (t.box) out["box"] = nvec_json(*t.box);
  Json entries = Json::array();
  for (const auto& [n, tr] : t.trace) {
    Json e;
    e["depth_coordinates"] = nvec_json(n);
    e["weight"] = weight_json(weight_at(alg, t.hw, n));
    e["trace"] = rat_json(tr);
    entries.push_back(std::move(e));
  }
  out["entries"] = std::move(entries);
  return out;
}

Json modular_json(const ModularData& md) {
  Json out;
  Json labels = Json::array();
  for (const Weight& w : md.weights) labels.push_back(weight_json(w));
  out["labels"] = std::move(labels);
  Json s = Json::array();
  for (int i = 0; i < md.S.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < md.S.cols(); ++j)
      row.push_back(Json::array({md.S(i, j).real(), md.S(i, j).imag()}));
    s.push_back(std::move(row));
  }
  out["S"] = std::move(s);
  Json t = Json::array();
  for (int i = 0; i < md.T.size(); ++i)
    t.push_back(Json::array({md.T(i).real(), md.T(i).imag()}));
  out["T"] = std::move(t);
  return out;
}

Json fold_json(const Algebra& alg, const FoldResult& fr) {
  Json out;
  out["orbit_algebra"] = algebra_json(fr.alg);
  Json orbits = Json::array();
  for (int t = 0; t < fr.alg.n(); ++t) {
    Json o;
    o["nodes"] = fr.orbits.orbits[t];
    o["s"] = fr.orbits.s[t];
    orbits.push_back(std::move(o));
  }
  out["orbits"] = std::move(orbits);
  out["order"] = fr.orbits.order;
  out["linking_condition"] = fr.orbits.linking;
  if (alg.affine()) {
    DualLabels dl = folded_dual_labels(alg, fr);
    Json marks = Json::array();
    for (const Rat& m : dl.marks) marks.push_back(rat_json(m));
    out["dual_labels"] = std::move(marks);
    out["dual_coxeter"] = rat_json(dl.gvee);
  }
  return out;
}

Algebra algebra_from_spec(const std::string& spec) {
  for (const std::string& name : catalog_names())
    if (name == spec) return catalog(spec);
  std::ifstream in(spec);
  require(in.good(), errc::bad_input,
          "'" + spec + "' is neither a catalog name nor a readable file");
  Json j = Json::parse(in);
  CartanMatrix cm = cartan_parse(j.contains("cartan") ? j["cartan"] : j);
  int z = j.contains("affine_node") ? j["affine_node"].get<int>() : 0;
  return make_algebra(std::move(cm), z);
}

namespace {

std::vector<long> csv_longs(const std::string& csv) {
  std::vector<long> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    require(!tok.empty(), errc::bad_input, "empty entry in '" + csv + "'");
    out.push_back(std::stol(tok));
  }
  return out;
}

}  // namespace

Automorphism perm_parse(const std::string& csv, int n) {
  std::vector<long> v = csv_longs(csv);
  require(static_cast<int>(v.size()) == n, errc::bad_input,
          "permutation length does not match the rank");
  Automorphism aut;
  for (long x : v) {
    require(x >= 0 && x < n, errc::bad_input, "permutation image out of range");
    aut.perm.push_back(static_cast<int>(x));
  }
  std::vector<bool> seen(n, false);
  for (int x : aut.perm) {
    require(!seen[x], errc::bad_input, "permutation image repeated");
    seen[x] = true;
  }
  return aut;
}

Weight hw_parse(const std::string& csv, int n) {
  std::vector<long> v = csv_longs(csv);
  require(static_cast<int>(v.size()) == n, errc::bad_input,
          "weight has the wrong number of labels");
  return weight_of(v);
}

}  // namespace orbitfold
