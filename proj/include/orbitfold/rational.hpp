#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace orbitfold {

// Exact rational scalar used throughout the exact-arithmetic core.
using Rat = mpq_class;
using Int = mpz_class;

using RVec = std::vector<Rat>;
using RMat = std::vector<RVec>;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();  // mpq_class(num, den) does not reduce
  return r;
}

std::string rat_str(const Rat& q);
Rat rat_parse(const std::string& s);

// q mod 1, normalized into [0, 1).
Rat rat_mod1(const Rat& q);

// Floor of a rational as a long (values in this codebase stay small).
long rat_floor(const Rat& q);

double rat_double(const Rat& q);

}  // namespace orbitfold
