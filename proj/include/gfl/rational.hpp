#pragma once

#include <gmpxx.h>

#include <string>

#include "gfl/errors.hpp"

namespace gfl {

// Exact rational number. Canonical form is maintained by GMP:
// denominator > 0 and gcd(|numerator|, denominator) = 1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
  Rational(long n, long d) {
    if (d == 0) fail(Err::Structural, "rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }

  // Accepts "p" or "p/q" with arbitrary-precision parts.
  static Rational from_string(const std::string& s) {
    try {
      mpq_class q(s);
      if (q.get_den() == 0) fail(Err::Parse, "zero denominator in '" + s + "'");
      q.canonicalize();
      Rational r;
      r.v_ = q;
      return r;
    } catch (const std::invalid_argument&) {
      fail(Err::Parse, "not a rational literal: '" + s + "'");
    }
  }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator+(const Rational& o) const { return wrap(v_ + o.v_); }
  Rational operator-(const Rational& o) const { return wrap(v_ - o.v_); }
  Rational operator*(const Rational& o) const { return wrap(v_ * o.v_); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) fail(Err::ZeroInput, "rational division by zero");
    return wrap(v_ / o.v_);
  }
  Rational operator-() const { return wrap(-v_); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }
  bool operator<=(const Rational& o) const { return v_ <= o.v_; }
  bool operator>(const Rational& o) const { return v_ > o.v_; }

  Rational abs() const { return wrap(::abs(v_)); }

  Rational reciprocal() const {
    if (is_zero()) fail(Err::ZeroInput, "reciprocal of zero");
    return wrap(1 / v_);
  }

  Rational pow(unsigned e) const {
    mpq_class r(1);
    mpq_class base = v_;
    for (; e; e >>= 1) {
      if (e & 1) r *= base;
      base *= base;
    }
    return wrap(r);
  }

  // Positive g with a/g and b/g integer and the two quotients coprime.
  // Used for polynomial content extraction; gcd(0, b) = |b|.
  static Rational content_gcd(const Rational& a, const Rational& b) {
    if (a.is_zero()) return b.abs();
    if (b.is_zero()) return a.abs();
    mpz_class g, l;
    mpz_class cross_a = a.v_.get_num() * b.v_.get_den();
    mpz_class cross_b = b.v_.get_num() * a.v_.get_den();
    mpz_gcd(g.get_mpz_t(), cross_a.get_mpz_t(), cross_b.get_mpz_t());
    l = a.v_.get_den() * b.v_.get_den();
    mpq_class r(g, l);
    r.canonicalize();
    return wrap(::abs(r));
  }

  std::string str() const { return v_.get_str(); }

 private:
  static Rational wrap(const mpq_class& q) {
    Rational r;
    r.v_ = q;
    return r;
  }

  mpq_class v_;
};

}  // namespace gfl
