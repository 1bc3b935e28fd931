#include "gfl/localize.hpp"

namespace gfl {

TrackedScalar::TrackedScalar(ParamPoly numerator, ParamPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (num_.param_count() != den_.param_count())
    fail(Err::Structural, "fraction parameter count mismatch");
  if (den_.is_zero()) fail(Err::Structural, "fraction with zero denominator");
  if (num_.is_zero()) {
    den_ = ParamPoly::one(num_.param_count());
    return;
  }
  ParamPoly g = poly_gcd(num_, den_);
  if (!g.is_constant()) {
    ParamPoly qn(num_.param_count()), qd(num_.param_count());
    if (!try_divide_exact(num_, g, qn) || !try_divide_exact(den_, g, qd))
      fail(Err::Structural, "gcd does not divide fraction parts");
    num_ = qn;
    den_ = qd;
  }
  Rational lc = den_.leading_coeff();
  if (!lc.is_one()) {
    num_ = num_.scaled(lc.reciprocal());
    den_ = den_.scaled(lc.reciprocal());
  }
}

bool TrackedScalar::is_one() const { return den_.is_constant() && num_ == den_; }

TrackedScalar TrackedScalar::operator+(const TrackedScalar& o) const {
  return TrackedScalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

TrackedScalar TrackedScalar::operator-(const TrackedScalar& o) const {
  return TrackedScalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

TrackedScalar TrackedScalar::operator*(const TrackedScalar& o) const {
  return TrackedScalar(num_ * o.num_, den_ * o.den_);
}

TrackedScalar TrackedScalar::operator-() const {
  TrackedScalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational TrackedScalar::evaluate(const std::vector<Rational>& point) const {
  Rational d = den_.evaluate(point);
  if (d.is_zero()) fail(Err::PointOutsideWitnessLocus, "denominator vanishes at the sample point");
  return num_.evaluate(point) / d;
}

std::string TrackedScalar::str(const std::vector<std::string>& param_names) const {
  if (den_.is_constant() && den_.constant_value().is_one()) return num_.str(param_names);
  return "(" + num_.str(param_names) + ")/(" + den_.str(param_names) + ")";
}

bool is_zero(const TrackedScalar& s) { return s.is_zero(); }
bool is_zero(const ParamPoly& p) { return p.is_zero(); }

TrackedScalar WitnessAccumulator::invert(const ParamPoly& a) {
  if (a.param_count() != k_) fail(Err::Structural, "accumulator parameter count mismatch");
  if (a.is_zero())
    fail(Err::ZeroInversion, "the algorithm only inverts verified-nonzero coefficients");
  if (!a.is_constant()) factors_.push_back(normalize_primitive(a));
  return TrackedScalar(ParamPoly::one(k_), a);
}

TrackedScalar WitnessAccumulator::reciprocal(const TrackedScalar& s) {
  if (s.is_zero())
    fail(Err::ZeroInversion, "the algorithm only inverts verified-nonzero coefficients");
  if (s.param_count() != k_) fail(Err::Structural, "accumulator parameter count mismatch");
  if (!s.num().is_constant()) factors_.push_back(normalize_primitive(s.num()));
  return TrackedScalar(s.den(), s.num());
}

ParamPoly WitnessAccumulator::witness() const {
  ParamPoly prod = ParamPoly::one(k_);
  for (const ParamPoly& f : factors_) prod = prod * f;
  if (prod.is_constant()) return ParamPoly::one(k_);
  return squarefree_primitive(prod);
}

}  // namespace gfl
