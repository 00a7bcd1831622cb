#pragma once

#include <complex>
#include <optional>
#include <string>

#include "orbitfold/rational.hpp"

namespace orbitfold {

// Exact element of a cyclotomic field Q(zeta_n), zeta_n = exp(2*pi*i/n).
// Internally a rational polynomial in zeta_n of degree < n (reduced with
// zeta^n = 1 during arithmetic); equality and rationality tests reduce
// modulo the n-th cyclotomic polynomial, which is the actual field relation.
class Cyclotomic {
 public:
  Cyclotomic() : n_(1), c_(1, Rat(0)) {}
  explicit Cyclotomic(const Rat& q) : n_(1), c_(1, q) {}
  Cyclotomic(long v) : Cyclotomic(Rat(v)) {}

  // zeta_n ^ k
  static Cyclotomic root_of_unity(int n, long k);
  // exp(2*pi*i*q) for rational q
  static Cyclotomic exp2pi(const Rat& q);

  int order() const { return n_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  Cyclotomic conj() const;  // complex conjugate (zeta -> zeta^{-1})

  bool is_zero() const;
  bool operator==(const Cyclotomic& o) const { return (*this - o).is_zero(); }
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  // Rational value if the element lies in Q.
  std::optional<Rat> as_rational() const;

  std::complex<double> to_complex() const;
  std::string str() const;

 private:
  Cyclotomic(int n, std::vector<Rat> c) : n_(n), c_(std::move(c)) {}
  Cyclotomic lifted(int m) const;  // embed into Q(zeta_m), n_ | m

  int n_;
  std::vector<Rat> c_;  // coefficients of 1, zeta, ..., zeta^{n-1}
};

}  // namespace orbitfold
