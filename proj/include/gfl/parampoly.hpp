#pragma once

#include <map>
#include <string>
#include <vector>

#include "gfl/indices.hpp"
#include "gfl/rational.hpp"

namespace gfl {

// Element of the coefficient ring A = Q[t1..tk] (k = 0 gives A = Q).
// Sparse: parameter exponent vector -> nonzero rational, stored in
// descending lex order so iteration is the canonical term sequence.
class ParamPoly {
 public:
  using TermMap = std::map<ExponentVector, Rational, ExpDescLex>;

  explicit ParamPoly(int param_count = 0) : k_(param_count) {}

  static ParamPoly constant(int param_count, const Rational& c);
  static ParamPoly one(int param_count) { return constant(param_count, Rational(1)); }
  static ParamPoly variable(int param_count, int var, int power = 1);

  int param_count() const { return k_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Requires is_constant(); the zero polynomial yields 0.
  Rational constant_value() const;

  int total_degree() const;  // 0 for the zero polynomial
  int degree_in(int var) const;

  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  // Accumulates c * t^e and prunes a resulting zero coefficient.
  void add_term(const ExponentVector& e, const Rational& c);

  ParamPoly operator+(const ParamPoly& o) const;
  ParamPoly operator-(const ParamPoly& o) const;
  ParamPoly operator*(const ParamPoly& o) const;
  ParamPoly operator-() const;
  ParamPoly scaled(const Rational& c) const;

  bool operator==(const ParamPoly& o) const { return k_ == o.k_ && terms_ == o.terms_; }
  bool operator!=(const ParamPoly& o) const { return !(*this == o); }

  // Lex leading data; EmptyVector on the zero polynomial.
  const ExponentVector& leading_exponents() const;
  const Rational& leading_coeff() const;

  ParamPoly derivative(int var) const;
  Rational evaluate(const std::vector<Rational>& point) const;

  // Canonical text: terms descending lex, '^' for powers, '*' for products.
  std::string str(const std::vector<std::string>& names) const;

 private:
  void check_shape(const ParamPoly& o) const {
    if (k_ != o.k_) fail(Err::Structural, "parameter count mismatch");
  }

  int k_;
  TermMap terms_;
};

// Exact division: on success writes num/den into quotient and returns true.
// den must be nonzero.
bool try_divide_exact(const ParamPoly& num, const ParamPoly& den, ParamPoly& quotient);

// Scales so that coefficients are coprime integers and the lex leading
// coefficient is positive. Zero input is returned unchanged.
ParamPoly normalize_primitive(const ParamPoly& p);

// gcd up to normalization (primitive, positive leading coefficient).
// gcd(p, 0) = normalize_primitive(p); gcd(0, 0) = 0.
ParamPoly poly_gcd(const ParamPoly& a, const ParamPoly& b);

// Product of the distinct irreducible factors of p, primitive with positive
// leading coefficient. ZeroInput on p = 0.
ParamPoly squarefree_primitive(const ParamPoly& p);

// True iff every irreducible factor of d also divides f, i.e. d divides
// some power of f. Both nonzero; constants divide everything.
bool divides_power_of(const ParamPoly& d, const ParamPoly& f);

}  // namespace gfl
