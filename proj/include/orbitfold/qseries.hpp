#pragma once

#include <string>

#include "orbitfold/cyclotomic.hpp"
#include "orbitfold/rational.hpp"

namespace orbitfold {

// Truncated power series in q with a rational leading exponent and rational
// exponent step:  sum_{j=0}^{trunc} c[j] q^{lead + j*step}.
// Characters of untwisted modules use step 1; twisted folded algebras can
// have fractional grades, hence the rational step.
struct QSeries {
  Rat lead = 0;
  Rat step = 1;
  std::vector<Cyclotomic> c;  // c.size() == trunc+1 stored coefficients

  int trunc() const { return static_cast<int>(c.size()) - 1; }

  static QSeries zero(const Rat& lead, const Rat& step, int trunc);
  static QSeries monomial(const Rat& exponent, const Cyclotomic& coeff);

  QSeries scaled(const Cyclotomic& f) const;

  bool is_zero() const;
  bool operator==(const QSeries& o) const;

  std::string str() const;
};

// Sum of two series; exponents must be commensurate (equal steps, leads
// differing by a multiple of the step).  The result is truncated to the
// shorter common range.
QSeries qadd(const QSeries& a, const QSeries& b);
QSeries qsub(const QSeries& a, const QSeries& b);

}  // namespace orbitfold
