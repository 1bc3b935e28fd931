#include "gfl/parampoly.hpp"

#include <algorithm>

namespace gfl {

ParamPoly ParamPoly::constant(int param_count, const Rational& c) {
  ParamPoly p(param_count);
  if (!c.is_zero()) p.terms_.emplace(ExponentVector::zero(param_count), c);
  return p;
}

ParamPoly ParamPoly::variable(int param_count, int var, int power) {
  ParamPoly p(param_count);
  if (power < 0) fail(Err::Structural, "negative power");
  if (power == 0) return one(param_count);
  p.terms_.emplace(ExponentVector::unit(param_count, var, power), Rational(1));
  return p;
}

bool ParamPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first.is_zero();
}

Rational ParamPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) fail(Err::Structural, "not a constant polynomial");
  return terms_.begin()->second;
}

int ParamPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.total_degree());
  return d;
}

int ParamPoly::degree_in(int var) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
  return d;
}

void ParamPoly::add_term(const ExponentVector& e, const Rational& c) {
  if (e.size() != k_) fail(Err::Structural, "term shape mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
  check_shape(o);
  ParamPoly r(*this);
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const {
  check_shape(o);
  ParamPoly r(*this);
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
  check_shape(o);
  ParamPoly r(k_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) r.add_term(ea.plus(eb), ca * cb);
  return r;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r(k_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

ParamPoly ParamPoly::scaled(const Rational& c) const {
  ParamPoly r(k_);
  if (c.is_zero()) return r;
  for (const auto& [e, coeff] : terms_) r.terms_.emplace(e, coeff * c);
  return r;
}

const ExponentVector& ParamPoly::leading_exponents() const {
  if (terms_.empty()) fail(Err::EmptyVector, "leading term of zero polynomial");
  return terms_.begin()->first;
}

const Rational& ParamPoly::leading_coeff() const {
  if (terms_.empty()) fail(Err::EmptyVector, "leading coefficient of zero polynomial");
  return terms_.begin()->second;
}

ParamPoly ParamPoly::derivative(int var) const {
  if (var < 0 || var >= k_) fail(Err::Structural, "derivative variable out of range");
  ParamPoly r(k_);
  for (const auto& [e, c] : terms_) {
    int p = e.at(var);
    if (p == 0) continue;
    std::vector<int> ne = e.entries();
    ne[var] = p - 1;
    r.add_term(ExponentVector(std::move(ne)), c * Rational(p));
  }
  return r;
}

Rational ParamPoly::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != k_) fail(Err::Structural, "evaluation point shape mismatch");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < k_; ++i)
      if (e.at(i)) term *= point[i].pow(static_cast<unsigned>(e.at(i)));
    acc += term;
  }
  return acc;
}

std::string ParamPoly::str(const std::vector<std::string>& names) const {
  if (static_cast<int>(names.size()) != k_) fail(Err::Structural, "name table shape mismatch");
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool neg = c.sign() < 0;
    Rational mag = c.abs();
    std::string mono;
    for (int i = 0; i < k_; ++i) {
      if (e.at(i) == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e.at(i) > 1) mono += "^" + std::to_string(e.at(i));
    }
    std::string body;
    if (mono.empty()) {
      body = mag.str();
    } else if (mag.is_one()) {
      body = mono;
    } else {
      body = mag.str() + "*" + mono;
    }
    if (first) {
      out += (neg ? "-" : "") + body;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
  }
  return out;
}

bool try_divide_exact(const ParamPoly& num, const ParamPoly& den, ParamPoly& quotient) {
  if (den.is_zero()) fail(Err::ZeroInput, "division by zero polynomial");
  ParamPoly q(num.param_count());
  ParamPoly r = num;
  const ExponentVector& dlead = den.leading_exponents();
  const Rational& dcoeff = den.leading_coeff();
  while (!r.is_zero()) {
    const ExponentVector& rlead = r.leading_exponents();
    if (!dlead.divides(rlead)) return false;
    Rational c = r.leading_coeff() / dcoeff;
    ExponentVector shift = rlead.minus(dlead);
    ParamPoly piece(num.param_count());
    piece.add_term(shift, c);
    q = q + piece;
    r = r - piece * den;
  }
  quotient = q;
  return true;
}

ParamPoly normalize_primitive(const ParamPoly& p) {
  if (p.is_zero()) return p;
  Rational content(0);
  for (const auto& [e, c] : p.terms()) {
    content = content.is_zero() ? c.abs() : Rational::content_gcd(content, c);
  }
  if (p.leading_coeff().sign() < 0) content = -content;
  return p.scaled(content.reciprocal());
}

namespace {

// Univariate view of p in variable `var`: degree -> coefficient polynomial
// (same ambient arity, zero exponent at `var`).
std::vector<ParamPoly> coefficients_in(const ParamPoly& p, int var) {
  std::vector<ParamPoly> coeffs(static_cast<std::size_t>(p.degree_in(var)) + 1,
                                ParamPoly(p.param_count()));
  for (const auto& [e, c] : p.terms()) {
    int d = e.at(var);
    std::vector<int> rest = e.entries();
    rest[var] = 0;
    coeffs[d].add_term(ExponentVector(std::move(rest)), c);
  }
  return coeffs;
}

ParamPoly content_in(const ParamPoly& p, int var) {
  ParamPoly g(p.param_count());
  for (const auto& c : coefficients_in(p, var)) g = poly_gcd(g, c);
  return g;
}

ParamPoly divide_exact_or_die(const ParamPoly& num, const ParamPoly& den) {
  ParamPoly q(num.param_count());
  if (!try_divide_exact(num, den, q)) fail(Err::Structural, "expected exact polynomial division");
  return q;
}

// Pseudo-remainder of a by b in variable `var`; deg_var(b) >= 1.
ParamPoly pseudo_remainder(ParamPoly a, const ParamPoly& b, int var) {
  int k = a.param_count();
  int db = b.degree_in(var);
  auto bcoeffs = coefficients_in(b, var);
  const ParamPoly& blead = bcoeffs[db];
  while (!a.is_zero()) {
    int da = a.degree_in(var);
    if (da < db) break;
    auto acoeffs = coefficients_in(a, var);
    const ParamPoly& alead = acoeffs[da];
    a = a * blead - b * (alead * ParamPoly::variable(k, var, da - db));
  }
  return a;
}

int first_active_var(const ParamPoly& a, const ParamPoly& b) {
  int k = a.param_count();
  for (int i = 0; i < k; ++i)
    if (a.degree_in(i) > 0 || b.degree_in(i) > 0) return i;
  return -1;
}

}  // namespace

ParamPoly poly_gcd(const ParamPoly& a, const ParamPoly& b) {
  if (a.param_count() != b.param_count()) fail(Err::Structural, "parameter count mismatch");
  if (a.is_zero()) return normalize_primitive(b);
  if (b.is_zero()) return normalize_primitive(a);
  if (a.is_constant() || b.is_constant()) return ParamPoly::one(a.param_count());

  int var = first_active_var(a, b);
  // Both non-constant, so some variable is active.
  ParamPoly cont_a = content_in(a, var);
  ParamPoly cont_b = content_in(b, var);
  ParamPoly cc = poly_gcd(cont_a, cont_b);
  ParamPoly pa = divide_exact_or_die(a, cont_a);
  ParamPoly pb = divide_exact_or_die(b, cont_b);

  // Primitive pseudo-remainder sequence in `var`.
  while (true) {
    if (pa.is_constant() || pb.is_constant()) {
      return normalize_primitive(cc);
    }
    if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
    ParamPoly r = pseudo_remainder(pa, pb, var);
    if (r.is_zero()) {
      ParamPoly prim = divide_exact_or_die(pb, content_in(pb, var));
      return normalize_primitive(cc * prim);
    }
    if (r.degree_in(var) == 0) {
      return normalize_primitive(cc);
    }
    pa = pb;
    pb = divide_exact_or_die(r, content_in(r, var));
  }
}

ParamPoly squarefree_primitive(const ParamPoly& p) {
  if (p.is_zero()) fail(Err::ZeroInput, "squarefree part of zero");
  if (p.is_constant()) return ParamPoly::one(p.param_count());
  ParamPoly g = normalize_primitive(p);
  ParamPoly repeated = g;
  for (int var = 0; var < p.param_count(); ++var) {
    ParamPoly d = p.derivative(var);
    repeated = poly_gcd(repeated, d);
    if (repeated.is_constant()) break;
  }
  ParamPoly sf(p.param_count());
  if (!try_divide_exact(g, repeated, sf))
    fail(Err::Structural, "squarefree division failed");
  return normalize_primitive(sf);
}

bool divides_power_of(const ParamPoly& d, const ParamPoly& f) {
  if (d.is_zero() || f.is_zero()) fail(Err::ZeroInput, "divides_power_of with zero argument");
  ParamPoly rest = normalize_primitive(d);
  while (!rest.is_constant()) {
    ParamPoly g = poly_gcd(rest, f);
    if (g.is_constant()) return false;
    ParamPoly q(rest.param_count());
    if (!try_divide_exact(rest, g, q)) fail(Err::Structural, "gcd does not divide");
    rest = q;
  }
  return true;
}

}  // namespace gfl
