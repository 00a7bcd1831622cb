#include "orbitfold/rational.hpp"

#include "orbitfold/error.hpp"

namespace orbitfold {

std::string rat_str(const Rat& q) {
  return q.get_str();
}

Rat rat_parse(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) fail(errc::bad_input, "cannot parse rational '" + s + "'");
  q.canonicalize();
  return q;
}

Rat rat_mod1(const Rat& q) {
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return q - Rat(fl);
}

long rat_floor(const Rat& q) {
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return fl.get_si();
}

double rat_double(const Rat& q) { return q.get_d(); }

}  // namespace orbitfold
