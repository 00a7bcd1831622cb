#pragma once

#include <json.hpp>

#include "orbitfold/coset.hpp"
#include "orbitfold/twining.hpp"

namespace orbitfold {

using Json = nlohmann::ordered_json;

// Rationals travel as strings ("3/16", "-1/24", "5") to stay exact.
Json rat_json(const Rat& q);
Rat rat_parse(const Json& j);

// Cartan matrices are exchanged in the row convention: row i lists the
// Dynkin labels of the simple root alpha_i, i.e. entry [i][j] is
// <alpha_i, alpha_j^vee>.  Internally labels sit in columns, so both
// directions transpose.
Json cartan_json(const CartanMatrix& cm);
CartanMatrix cartan_parse(const Json& j);

Json weight_json(const Weight& w);
Weight weight_parse(const Json& j);

Json algebra_json(const Algebra& alg);

Json qseries_json(const QSeries& s);

Json mult_table_json(const Algebra& alg, const MultTable& t);
Json twining_table_json(const Algebra& alg, const TwiningTable& t);

Json modular_json(const ModularData& md);

Json fold_json(const Algebra& alg, const FoldResult& fr);

// Resolve an algebra argument: a catalog name, or a path to a JSON file with
// a "cartan" block (row convention) and optional "affine_node".
Algebra algebra_from_spec(const std::string& spec);

// Comma-separated permutation images, e.g. "2,1,0".
Automorphism perm_parse(const std::string& csv, int n);

// Comma-separated weight labels, e.g. "1,0,1".
Weight hw_parse(const std::string& csv, int n);

}  // namespace orbitfold
