#include "orbitfold/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <numeric>

#include "orbitfold/error.hpp"

namespace orbitfold {

namespace {

using Poly = std::vector<Rat>;  // coefficients, low degree first

Poly poly_trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

// Quotient of exact polynomial division a / b (remainder must vanish unless
// rem != nullptr, in which case the remainder is returned there).
Poly poly_divmod(Poly a, const Poly& b, Poly* rem) {
  Poly q(a.size(), Rat(0));
  int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(poly_trim(a).size()) - 1 >= db) {
    a = poly_trim(a);
    int da = static_cast<int>(a.size()) - 1;
    Rat f = a[da] / b[db];
    q[da - db] = f;
    for (int i = 0; i <= db; ++i) a[da - db + i] -= f * b[i];
  }
  if (rem) *rem = poly_trim(a);
  return poly_trim(q);
}

// n-th cyclotomic polynomial: (x^n - 1) / prod_{d|n, d<n} Phi_d.
const Poly& cyclotomic_poly(int n) {
  static std::map<int, Poly> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Poly num(n + 1, Rat(0));
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) num = poly_divmod(num, cyclotomic_poly(d), nullptr);
  return cache.emplace(n, std::move(num)).first->second;
}

// Canonical representative: reduce modulo Phi_n to degree < phi(n).
Poly reduce_mod_phi(const Poly& p, int n) {
  Poly rem;
  poly_divmod(p, cyclotomic_poly(n), &rem);
  return rem;
}

}  // namespace

Cyclotomic Cyclotomic::root_of_unity(int n, long k) {
  require(n >= 1, errc::bad_input, "root of unity order must be positive");
  long r = ((k % n) + n) % n;
  std::vector<Rat> c(n, Rat(0));
  c[r] = 1;
  return Cyclotomic(n, std::move(c));
}

Cyclotomic Cyclotomic::exp2pi(const Rat& q) {
  Rat m = rat_mod1(q);
  long den = m.get_den().get_si();
  long num = m.get_num().get_si();
  return root_of_unity(static_cast<int>(den), num);
}

Cyclotomic Cyclotomic::lifted(int m) const {
  if (m == n_) return *this;
  int step = m / n_;
  std::vector<Rat> c(m, Rat(0));
  for (int i = 0; i < n_; ++i) c[i * step] = c_[i];
  return Cyclotomic(m, std::move(c));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  int m = std::lcm(n_, o.n_);
  Cyclotomic a = lifted(m), b = o.lifted(m);
  for (int i = 0; i < m; ++i) a.c_[i] += b.c_[i];
  return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic a = *this;
  for (auto& x : a.c_) x = -x;
  return a;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  int m = std::lcm(n_, o.n_);
  Cyclotomic a = lifted(m), b = o.lifted(m);
  std::vector<Rat> c(m, Rat(0));
  for (int i = 0; i < m; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j < m; ++j) {
      if (b.c_[j] == 0) continue;
      c[(i + j) % m] += a.c_[i] * b.c_[j];  // zeta^m = 1
    }
  }
  return Cyclotomic(m, std::move(c));
}

Cyclotomic Cyclotomic::conj() const {
  std::vector<Rat> c(n_, Rat(0));
  for (int i = 0; i < n_; ++i) c[(n_ - i) % n_] = c_[i];
  return Cyclotomic(n_, std::move(c));
}

bool Cyclotomic::is_zero() const {
  return reduce_mod_phi(c_, n_).empty();
}

std::optional<Rat> Cyclotomic::as_rational() const {
  // Rational iff the canonical representative modulo Phi_n is constant.
  Poly r = reduce_mod_phi(c_, n_);
  if (r.empty()) return Rat(0);
  if (r.size() == 1) return r[0];
  return std::nullopt;
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> z(0, 0);
  for (int i = 0; i < n_; ++i) {
    if (c_[i] == 0) continue;
    double th = 2.0 * M_PI * i / n_;
    z += rat_double(c_[i]) * std::complex<double>(std::cos(th), std::sin(th));
  }
  return z;
}

std::string Cyclotomic::str() const {
  if (auto q = as_rational()) return rat_str(*q);
  std::string out;
  Poly r = reduce_mod_phi(c_, n_);
  for (size_t i = 0; i < r.size(); ++i) {
    if (r[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += rat_str(r[i]);
    if (i > 0) out += "*z" + std::to_string(n_) + "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace orbitfold
