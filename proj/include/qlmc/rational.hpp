#pragma once

#include <gmp.h>

#include <string>

namespace qlmc {

// Exact rational number, arbitrary precision, always in lowest terms with a
// positive denominator. Thin value wrapper over GMP's mpq_t; a zero
// denominator throws std::domain_error instead of reaching GMP.
class Rational {
 public:
  Rational() { mpq_init(v_); }
  Rational(long long n) : Rational() { set_ll(n, 1); }  // NOLINT: implicit by design
  Rational(long long n, long long d);

  Rational(const Rational& other) : Rational() { mpq_set(v_, other.v_); }
  Rational(Rational&& other) noexcept : Rational() { mpq_swap(v_, other.v_); }
  Rational& operator=(const Rational& other) {
    if (this != &other) mpq_set(v_, other.v_);
    return *this;
  }
  Rational& operator=(Rational&& other) noexcept {
    mpq_swap(v_, other.v_);
    return *this;
  }
  ~Rational() { mpq_clear(v_); }

  bool is_zero() const { return mpq_sgn(v_) == 0; }
  int sign() const { return mpq_sgn(v_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    Rational r;
    mpq_add(r.v_, a.v_, b.v_);
    return r;
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    Rational r;
    mpq_sub(r.v_, a.v_, b.v_);
    return r;
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    Rational r;
    mpq_mul(r.v_, a.v_, b.v_);
    return r;
  }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const {
    Rational r;
    mpq_neg(r.v_, v_);
    return r;
  }

  Rational& operator+=(const Rational& b) {
    mpq_add(v_, v_, b.v_);
    return *this;
  }
  Rational& operator-=(const Rational& b) {
    mpq_sub(v_, v_, b.v_);
    return *this;
  }
  Rational& operator*=(const Rational& b) {
    mpq_mul(v_, v_, b.v_);
    return *this;
  }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  bool operator==(const Rational& b) const { return mpq_equal(v_, b.v_) != 0; }
  bool operator!=(const Rational& b) const { return !(*this == b); }
  bool operator<(const Rational& b) const { return mpq_cmp(v_, b.v_) < 0; }

  std::string str() const;  // "p" or "p/q"

 private:
  void set_ll(long long n, long long d);

  mpq_t v_;
};

}  // namespace qlmc
