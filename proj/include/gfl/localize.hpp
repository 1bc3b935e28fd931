#pragma once

#include <string>
#include <vector>

#include "gfl/parampoly.hpp"

namespace gfl {

// Element of the tracked fraction field of A. Canonical form: gcd(num, den)
// is a unit and den is monic under lex. den = 1 exactly for ring elements.
class TrackedScalar {
 public:
  TrackedScalar() : num_(0), den_(0) {}  // zero over A = Q

  TrackedScalar(ParamPoly numerator, ParamPoly denominator);

  static TrackedScalar of(const ParamPoly& p) {
    return TrackedScalar(p, ParamPoly::one(p.param_count()));
  }
  static TrackedScalar constant(int param_count, const Rational& c) {
    return of(ParamPoly::constant(param_count, c));
  }
  static TrackedScalar one(int param_count) { return constant(param_count, Rational(1)); }

  const ParamPoly& num() const { return num_; }
  const ParamPoly& den() const { return den_; }
  int param_count() const { return num_.param_count(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;

  TrackedScalar operator+(const TrackedScalar& o) const;
  TrackedScalar operator-(const TrackedScalar& o) const;
  TrackedScalar operator*(const TrackedScalar& o) const;
  TrackedScalar operator-() const;

  bool operator==(const TrackedScalar& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const TrackedScalar& o) const { return !(*this == o); }

  // den(tau) must be nonzero; enforced by the caller sampling inside D(f).
  Rational evaluate(const std::vector<Rational>& point) const;

  // "p" for ring elements, "(p)/(q)" otherwise.
  std::string str(const std::vector<std::string>& param_names) const;

 private:
  ParamPoly num_, den_;
};

bool is_zero(const TrackedScalar& s);
bool is_zero(const ParamPoly& p);

// Records every element of A inverted during a solver run. The normalized
// product of the recorded factors is the witness f.
class WitnessAccumulator {
 public:
  explicit WitnessAccumulator(int param_count) : k_(param_count) {}

  int param_count() const { return k_; }

  // 1/a; a must be nonzero. Rational units leave the accumulator unchanged.
  TrackedScalar invert(const ParamPoly& a);

  // 1/s for a tracked fraction; records the numerator of s.
  TrackedScalar reciprocal(const TrackedScalar& s);

  // squarefree_primitive of the product of all factors; 1 when empty.
  ParamPoly witness() const;

  const std::vector<ParamPoly>& factors() const { return factors_; }

 private:
  int k_;
  std::vector<ParamPoly> factors_;
};

}  // namespace gfl
