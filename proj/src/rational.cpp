#include "qlmc/rational.hpp"

#include <cstdlib>
#include <stdexcept>

namespace qlmc {

void Rational::set_ll(long long n, long long d) {
  if (d == 0) throw std::domain_error("rational: zero denominator");
  mpz_set_si(mpq_numref(v_), n);
  mpz_set_si(mpq_denref(v_), d);
  mpq_canonicalize(v_);
}

Rational::Rational(long long n, long long d) : Rational() { set_ll(n, d); }

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("rational: division by zero");
  Rational r;
  mpq_div(r.v_, a.v_, b.v_);
  return r;
}

std::string Rational::str() const {
  char* raw = mpq_get_str(nullptr, 10, v_);
  std::string out(raw);
  std::free(raw);
  return out;
}

}  // namespace qlmc
