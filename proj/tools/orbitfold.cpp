#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "orbitfold/catalog.hpp"
#include "orbitfold/checksuite.hpp"
#include "orbitfold/coset.hpp"
#include "orbitfold/error.hpp"
#include "orbitfold/json_io.hpp"
#include "orbitfold/twining.hpp"

namespace of = orbitfold;
using Json = of::Json;

namespace {

struct Options {
  std::string algebra, perm, hw, levels, out;
  std::string h = "A1";
  int depth = 4;
  int q_order = 6;
  long level = 1;
  bool verify_oracle = false;
  bool do_resolve = false;
  bool do_verlinde = false;
  double tol_unitary = 1e-9;
  double tol_verlinde = 1e-6;
};

void emit(const Json& doc, const std::string& out) {
  if (out.empty()) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::ofstream f(out);
    f << doc.dump(2) << "\n";
  }
}

Json provenance(const std::string& command, const Json& inputs) {
  Json p;
  p["tool"] = "orbitfold";
  p["version"] = "1.0.0";
  p["command"] = command;
  p["inputs"] = inputs;
  return p;
}

int cmd_validate(const Options& o, bool classify) {
  of::Algebra g = of::algebra_from_spec(o.algebra);
  Json doc;
  doc["provenance"] = provenance(classify ? "classify" : "validate",
                                 Json{{"algebra", o.algebra}});
  doc["valid"] = true;
  doc["algebra"] = of::algebra_json(g);
  if (classify && g.info.kind == of::Kind::Indefinite)
    doc["hyperbolic"] = g.info.hyperbolic;
  emit(doc, o.out);
  return 0;
}

int cmd_fold(const Options& o) {
  of::Algebra g = of::algebra_from_spec(o.algebra);
  of::Automorphism aut = of::perm_parse(o.perm, g.n());
  of::FoldResult fr = of::fold(g, aut);
  Json doc;
  doc["provenance"] =
      provenance("fold", Json{{"algebra", o.algebra}, {"perm", o.perm}});
  doc["algebra"] = of::algebra_json(g);
  doc["fold"] = of::fold_json(g, fr);
  emit(doc, o.out);
  return 0;
}

int cmd_char(const Options& o) {
  of::Algebra g = of::algebra_from_spec(o.algebra);
  of::Weight hw = of::hw_parse(o.hw, g.n());
  of::MultTable t = of::irreducible_multiplicities(g, hw, o.depth);
  Json doc;
  doc["provenance"] = provenance(
      "char", Json{{"algebra", o.algebra}, {"hw", o.hw}, {"depth", o.depth}});
  doc["table"] = of::mult_table_json(g, t);
  if (g.affine()) {
    int q = o.q_order;
    try {
      doc["specialized"] = of::qseries_json(of::virasoro_specialize(g, t, q));
    } catch (const of::error&) {
      // depth too small for the requested q-order; table output stands alone
    }
  }
  emit(doc, o.out);
  return 0;
}

int cmd_twine(const Options& o) {
  of::Algebra g = of::algebra_from_spec(o.algebra);
  of::Automorphism aut = of::perm_parse(o.perm, g.n());
  of::Weight hw = of::hw_parse(o.hw, g.n());
  of::MultTable folded =
      of::twining_character_via_orbit(g, aut, hw, o.depth, of::ModuleKind::Irreducible);
  of::TwiningTable table;
  table.hw = hw;
  table.depth = o.depth;
  for (const auto& [n, m] : folded.mult) {
    long h = 0;
    for (int x : n) h += x;
    if (h <= o.depth) table.trace[n] = of::Rat(m);
  }
  Json doc;
  doc["provenance"] = provenance(
      "twine", Json{{"algebra", o.algebra}, {"perm", o.perm}, {"hw", o.hw},
                    {"depth", o.depth}, {"verify_oracle", o.verify_oracle}});
  doc["table"] = of::twining_table_json(g, table);
  if (!o.verify_oracle) {
    emit(doc, o.out);
    return 0;
  }
  of::TwiningTable oracle =
      of::twining_character_oracle(g, aut, hw, o.depth, of::ModuleKind::Irreducible);
  Json diff = Json::array();
  for (const auto& [n, tr] : oracle.trace) {
    of::Rat want = table.trace.count(n) ? table.trace.at(n) : of::Rat(0);
    if (tr != want)
      diff.push_back(Json{{"depth_coordinates", n},
                          {"oracle", of::rat_json(tr)},
                          {"theorem", of::rat_json(want)}});
  }
  for (const auto& [n, tr] : table.trace)
    if (tr != 0 && !oracle.trace.count(n))
      diff.push_back(Json{{"depth_coordinates", n},
                          {"oracle", "0"},
                          {"theorem", of::rat_json(tr)}});
  doc["oracle_diff"] = diff;
  emit(doc, o.out);
  return diff.empty() ? 0 : 1;
}

int cmd_smatrix(const Options& o) {
  of::Algebra g = of::algebra_from_spec(o.algebra);
  of::ModularData md = of::kac_peterson(g, o.level);
  Json doc;
  doc["provenance"] =
      provenance("smatrix", Json{{"algebra", o.algebra}, {"level", o.level}});
  doc["modular"] = of::modular_json(md);
  doc["central_charge"] = of::rat_json(of::central_charge(g, of::Rat(o.level)));
  Json deltas = Json::array();
  for (const of::Weight& w : md.weights)
    deltas.push_back(of::rat_json(of::conformal_weight(g, w)));
  doc["conformal_weights"] = deltas;
  of::ModularChecks mc = of::modular_consistency(md.S, md.T);
  doc["checks"] = Json{{"symmetry", mc.symmetry},
                       {"unitarity", mc.unitarity},
                       {"conjugation", mc.conjugation},
                       {"st_cubed", mc.st_cubed}};
  emit(doc, o.out);
  return mc.ok(o.tol_unitary) ? 0 : 1;
}

int cmd_coset(const Options& o) {
  of::Algebra h = of::algebra_from_spec(o.h);
  size_t comma = o.levels.find(',');
  of::require(comma != std::string::npos, of::errc::bad_input,
              "--levels expects k1,k2");
  long k1 = std::stol(o.levels.substr(0, comma));
  long k2 = std::stol(o.levels.substr(comma + 1));
  of::CosetSpec spec = of::build_coset(h, k1, k2);
  of::IdGroup g = of::identification_group(spec);
  auto orbits = of::selection_and_orbits(spec, g);
  Json doc;
  doc["provenance"] = provenance(
      "coset", Json{{"algebra", o.h}, {"levels", o.levels}, {"q_order", o.q_order},
                    {"resolve", o.do_resolve}, {"verlinde", o.do_verlinde}});
  doc["central_charge"] = of::rat_json(spec.cdot);
  doc["identification_group_order"] = g.elems.size();
  Json jorb = Json::array();
  auto triple_json = [&](const of::Triple& t) {
    return Json::array({of::weight_json(spec.w1[t[0]]), of::weight_json(spec.w2[t[1]]),
                        of::weight_json(spec.wp[t[2]])});
  };
  for (const auto& orb : orbits) {
    Json j;
    j["representative"] = triple_json(orb.rep);
    j["orbit_size"] = orb.members.size();
    j["stabilizer_order"] = orb.stab.size();
    jorb.push_back(std::move(j));
  }
  doc["orbits"] = std::move(jorb);
  bool ok = true;
  if (o.do_resolve) {
    of::ResolvedSpectrum rs = of::resolve(spec, g, orbits, o.q_order);
    Json jf = Json::array();
    for (const auto& f : rs.fields) {
      Json j;
      j["representative"] = triple_json(rs.orbits[f.orbit].rep);
      j["psi"] = f.psi;
      j["exponent"] = of::rat_json(f.exponent);
      j["character"] = of::qseries_json(f.character);
      jf.push_back(std::move(j));
    }
    doc["fields"] = std::move(jf);
    of::ModularData md;
    md.S = rs.S;
    md.T = rs.T;
    doc["modular"] = of::modular_json(md);
    of::ModularChecks mc = of::modular_consistency(rs.S, rs.T);
    doc["checks"] = Json{{"symmetry", mc.symmetry},
                         {"unitarity", mc.unitarity},
                         {"conjugation", mc.conjugation},
                         {"st_cubed", mc.st_cubed}};
    ok = ok && mc.ok(o.tol_unitary);
    if (o.do_verlinde) {
      of::VerlindeReport vr = of::verlinde_check(rs.S, rs.vacuum, o.tol_verlinde);
      Json jn = Json::array();
      for (const auto& m : vr.fusion) {
        Json rows = Json::array();
        for (int i = 0; i < m.rows(); ++i) {
          Json row = Json::array();
          for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
          rows.push_back(std::move(row));
        }
        jn.push_back(std::move(rows));
      }
      doc["fusion"] = std::move(jn);
      doc["fusion_residual"] = vr.residual;
      ok = ok && vr.integral;
    }
  }
  emit(doc, o.out);
  return ok ? 0 : 1;
}

int cmd_check(const Options& o) {
  auto results = of::run_check_suite();
  Json doc;
  doc["provenance"] = provenance("check", Json::object());
  Json jr = Json::array();
  bool all = true;
  for (const auto& r : results) {
    jr.push_back(Json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    all = all && r.pass;
  }
  doc["results"] = std::move(jr);
  doc["pass"] = all;
  emit(doc, o.out);
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orbit Lie algebras, twining characters, and coset fixed-point resolution"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* c) { c->add_option("--out", o.out, "output file (default stdout)"); };

  CLI::App* validate = app.add_subcommand("validate", "validate a Cartan matrix");
  validate->add_option("--algebra", o.algebra, "catalog name or JSON file")->required();
  add_common(validate);

  CLI::App* classify = app.add_subcommand("classify", "classify a Cartan matrix");
  classify->add_option("--algebra", o.algebra)->required();
  add_common(classify);

  CLI::App* foldc = app.add_subcommand("fold", "fold along a diagram automorphism");
  foldc->add_option("--algebra", o.algebra)->required();
  foldc->add_option("--perm", o.perm, "permutation images, comma separated")->required();
  add_common(foldc);

  CLI::App* charc = app.add_subcommand("char", "weight multiplicities of a module");
  charc->add_option("--algebra", o.algebra)->required();
  charc->add_option("--hw", o.hw, "highest weight labels")->required();
  charc->add_option("--depth", o.depth);
  charc->add_option("--qorder", o.q_order);
  add_common(charc);

  CLI::App* twine = app.add_subcommand("twine", "twining character table");
  twine->add_option("--algebra", o.algebra)->required();
  twine->add_option("--perm", o.perm)->required();
  twine->add_option("--hw", o.hw)->required();
  twine->add_option("--depth", o.depth);
  twine->add_flag("--verify-oracle", o.verify_oracle,
                  "cross-check against the explicit module construction");
  add_common(twine);

  CLI::App* smatrix = app.add_subcommand("smatrix", "affine modular data");
  smatrix->add_option("--algebra", o.algebra)->required();
  smatrix->add_option("--level", o.level)->required();
  smatrix->add_option("--tol-unitary", o.tol_unitary);
  add_common(smatrix);

  CLI::App* coset = app.add_subcommand("coset", "diagonal coset spectrum");
  coset->add_option("--algebra", o.h, "finite simple algebra")->required();
  coset->add_option("--levels", o.levels, "k1,k2")->required();
  coset->add_option("--qorder", o.q_order);
  coset->add_flag("--resolve", o.do_resolve);
  coset->add_flag("--verlinde", o.do_verlinde);
  coset->add_option("--tol-unitary", o.tol_unitary);
  coset->add_option("--tol-verlinde", o.tol_verlinde);
  add_common(coset);

  CLI::App* check = app.add_subcommand("check", "run the built-in consistency suite");
  add_common(check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(o, false);
    if (classify->parsed()) return cmd_validate(o, true);
    if (foldc->parsed()) return cmd_fold(o);
    if (charc->parsed()) return cmd_char(o);
    if (twine->parsed()) return cmd_twine(o);
    if (smatrix->parsed()) return cmd_smatrix(o);
    if (coset->parsed()) return cmd_coset(o);
    if (check->parsed()) return cmd_check(o);
  } catch (const of::error& e) {
    Json doc;
    doc["error"] = e.what();
    std::cout << doc.dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    Json doc;
    doc["error"] = e.what();
    std::cout << doc.dump(2) << "\n";
    return 1;
  }
  return 2;
}
