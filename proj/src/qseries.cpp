#include "orbitfold/qseries.hpp"

#include <algorithm>

#include "orbitfold/error.hpp"

namespace orbitfold {

// Convention: coefficients below `lead` are exact zeros, coefficients past the
// stored range are unknown (truncated away).

QSeries QSeries::zero(const Rat& lead, const Rat& step, int trunc) {
  QSeries s;
  s.lead = lead;
  s.step = step;
  s.c.assign(trunc + 1, Cyclotomic());
  return s;
}

QSeries QSeries::monomial(const Rat& exponent, const Cyclotomic& coeff) {
  QSeries s;
  s.lead = exponent;
  s.c = {coeff};
  return s;
}

QSeries QSeries::scaled(const Cyclotomic& f) const {
  QSeries s = *this;
  for (auto& x : s.c) x *= f;
  return s;
}

bool QSeries::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const Cyclotomic& x) { return x.is_zero(); });
}

bool QSeries::operator==(const QSeries& o) const {
  // Equal as truncated series: same stored range and coefficients, after
  // discarding leading zeros.
  auto norm = [](const QSeries& s) {
    QSeries n = s;
    while (n.c.size() > 1 && n.c.front().is_zero()) {
      n.c.erase(n.c.begin());
      n.lead += n.step;
    }
    return n;
  };
  QSeries a = norm(*this), b = norm(o);
  if (a.step != b.step || a.lead != b.lead || a.c.size() != b.c.size()) return false;
  for (size_t i = 0; i < a.c.size(); ++i)
    if (a.c[i] != b.c[i]) return false;
  return true;
}

namespace {

long step_offset(const QSeries& a, const Rat& exponent) {
  Rat d = (exponent - a.lead) / a.step;
  require(d.get_den() == 1, errc::bad_input, "q-series exponents are not commensurate");
  return d.get_num().get_si();
}

QSeries combine(const QSeries& a, const QSeries& b, int sign) {
  require(a.step == b.step, errc::bad_input, "q-series steps differ");
  Rat lead = std::min(a.lead, b.lead);
  Rat end = std::min(a.lead + a.step * a.trunc(), b.lead + b.step * b.trunc());
  long n = step_offset(QSeries{lead, a.step, {Cyclotomic()}}, end);
  require(n >= 0, errc::bad_input, "q-series ranges do not overlap");
  QSeries out = QSeries::zero(lead, a.step, static_cast<int>(n));
  long oa = step_offset(out, a.lead), ob = step_offset(out, b.lead);
  for (long j = 0; j <= n; ++j) {
    if (j >= oa && j - oa <= a.trunc()) out.c[j] += a.c[j - oa];
    if (j >= ob && j - ob <= b.trunc()) {
      if (sign > 0)
        out.c[j] += b.c[j - ob];
      else
        out.c[j] -= b.c[j - ob];
    }
  }
  return out;
}

}  // namespace

QSeries qadd(const QSeries& a, const QSeries& b) { return combine(a, b, +1); }
QSeries qsub(const QSeries& a, const QSeries& b) { return combine(a, b, -1); }

std::string QSeries::str() const {
  std::string out;
  for (int j = 0; j <= trunc(); ++j) {
    if (c[j].is_zero()) continue;
    if (!out.empty()) out += " + ";
    Rat e = lead + step * j;
    std::string cs = c[j].str();
    if (cs.find('+') != std::string::npos) cs = "(" + cs + ")";
    out += cs + "*q^(" + rat_str(e) + ")";
  }
  if (out.empty()) out = "0";
  out += " + O(q^(" + rat_str(lead + step * (trunc() + 1)) + "))";
  return out;
}

}  // namespace orbitfold
