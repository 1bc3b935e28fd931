#include "gfl/poly.hpp"

#include <algorithm>
#include <sstream>

namespace gfl {

namespace {

// Renders "coeff * monomial" with the conventions: unit coefficients drop to
// the bare monomial, a constant term prints the coefficient alone, and
// non-trivial denominators parenthesize as (num)/(den).
void append_term(std::ostringstream& out, bool first, const TrackedScalar& c,
                 const std::string& mono, const std::vector<std::string>& param_names) {
  // Pull the sign out of the numerator so sums render as "a - b" instead of
  // "a + -b"; the numerator's leading coefficient carries the display sign.
  bool negated = !c.is_zero() && c.num().leading_coeff().sign() < 0;
  std::string cs = (negated ? -c : c).str(param_names);
  if (negated && !cs.empty() && cs[0] == '-') cs = cs.substr(1);
  if (first) {
    if (negated) out << '-';
  } else {
    out << (negated ? " - " : " + ");
  }
  if (mono.empty()) {
    out << cs;
  } else if (cs == "1") {
    out << mono;
  } else {
    out << cs << '*' << mono;
  }
}

}  // namespace

std::string monomial_str(const ExponentVector& e, const std::vector<std::string>& names) {
  std::ostringstream out;
  bool any = false;
  for (int i = 0; i < e.size(); ++i) {
    if (e.at(i) == 0) continue;
    if (any) out << '*';
    out << names[static_cast<size_t>(i)];
    if (e.at(i) > 1) out << '^' << e.at(i);
    any = true;
  }
  return out.str();
}

std::string module_monomial_str(const ModuleIndex& j, const NameTable& names) {
  std::string gen = names.module_gens[static_cast<size_t>(j.slot - 1)];
  std::string mono = monomial_str(j.exps, names.algebra_vars);
  if (mono.empty()) return gen;
  return gen + "*" + mono;
}

AlgPoly AlgPoly::monomial(int param_count, const ExponentVector& e, const TrackedScalar& c) {
  AlgPoly p(param_count, e.size());
  p.add_term(e, c);
  return p;
}

int AlgPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.total_degree());
  return d;
}

void AlgPoly::add_term(const ExponentVector& e, const TrackedScalar& c) {
  if (e.size() != n_) fail(Err::Structural, "exponent width mismatch");
  if (c.param_count() != k_) fail(Err::Structural, "coefficient parameter count mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgPoly AlgPoly::operator+(const AlgPoly& o) const {
  check_shape(o);
  AlgPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

AlgPoly AlgPoly::operator-(const AlgPoly& o) const {
  check_shape(o);
  AlgPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

AlgPoly AlgPoly::operator*(const AlgPoly& o) const {
  check_shape(o);
  AlgPoly r(k_, n_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1.plus(e2), c1 * c2);
  return r;
}

AlgPoly AlgPoly::operator-() const {
  AlgPoly r(k_, n_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

AlgPoly AlgPoly::scaled(const TrackedScalar& c) const {
  AlgPoly r(k_, n_);
  if (c.is_zero()) return r;
  for (const auto& [e, c0] : terms_) r.add_term(e, c0 * c);
  return r;
}

AlgPoly AlgPoly::mul_monomial(const ExponentVector& shift, const TrackedScalar& c) const {
  if (shift.size() != n_) fail(Err::Structural, "exponent width mismatch");
  AlgPoly r(k_, n_);
  if (c.is_zero()) return r;
  for (const auto& [e, c0] : terms_) r.add_term(e.plus(shift), c0 * c);
  return r;
}

std::string AlgPoly::str(const NameTable& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    append_term(out, first, c, monomial_str(e, names.algebra_vars), names.params);
    first = false;
  }
  return out.str();
}

ModVector ModVector::monomial(int param_count, int var_count, int gen_count, const ModuleIndex& j,
                              const TrackedScalar& c) {
  ModVector v(param_count, var_count, gen_count);
  v.add_term(j, c);
  return v;
}

int ModVector::total_degree() const {
  int d = 0;
  for (const auto& [j, c] : terms_) d = std::max(d, j.exps.total_degree());
  return d;
}

void ModVector::add_term(const ModuleIndex& j, const TrackedScalar& c) {
  if (j.exps.size() != n_) fail(Err::Structural, "exponent width mismatch");
  if (j.slot > m_) fail(Err::Structural, "module slot out of range");
  if (c.param_count() != k_) fail(Err::Structural, "coefficient parameter count mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(j);
  if (it == terms_.end()) {
    terms_.emplace(j, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ModVector ModVector::operator+(const ModVector& o) const {
  check_shape(o);
  ModVector r = *this;
  for (const auto& [j, c] : o.terms_) r.add_term(j, c);
  return r;
}

ModVector ModVector::operator-(const ModVector& o) const {
  check_shape(o);
  ModVector r = *this;
  for (const auto& [j, c] : o.terms_) r.add_term(j, -c);
  return r;
}

ModVector ModVector::operator-() const {
  ModVector r(k_, n_, m_);
  for (const auto& [j, c] : terms_) r.terms_.emplace(j, -c);
  return r;
}

ModVector ModVector::scaled(const TrackedScalar& c) const {
  ModVector r(k_, n_, m_);
  if (c.is_zero()) return r;
  for (const auto& [j, c0] : terms_) r.add_term(j, c0 * c);
  return r;
}

ModVector ModVector::mul_monomial(const ExponentVector& shift, const TrackedScalar& c) const {
  if (shift.size() != n_) fail(Err::Structural, "exponent width mismatch");
  ModVector r(k_, n_, m_);
  if (c.is_zero()) return r;
  for (const auto& [j, c0] : terms_)
    r.add_term(ModuleIndex(j.slot, j.exps.plus(shift)), c0 * c);
  return r;
}

std::string ModVector::str(const NameTable& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [j, c] : terms_) {
    append_term(out, first, c, module_monomial_str(j, names), names.params);
    first = false;
  }
  return out.str();
}

ModVector act(const AlgPoly& p, const ModVector& v) {
  if (p.param_count() != v.param_count() || p.var_count() != v.var_count())
    fail(Err::Structural, "algebra/module shape mismatch");
  ModVector r(v.param_count(), v.var_count(), v.gen_count());
  for (const auto& [e, c] : p.terms()) r = r + v.mul_monomial(e, c);
  return r;
}

std::pair<ExponentVector, TrackedScalar> leading_term(const AlgPoly& p, TermOrder order) {
  if (p.is_zero()) fail(Err::EmptyVector, "leading term of zero polynomial");
  auto it = p.terms().begin();  // descending lex: begin() is the lex leader
  if (order == TermOrder::Lex) return {it->first, it->second};
  auto best = it;
  for (auto cur = std::next(it); cur != p.terms().end(); ++cur)
    if (cmp_index(cur->first, best->first, order) > 0) best = cur;
  return {best->first, best->second};
}

std::pair<ModuleIndex, TrackedScalar> leading_term(const ModVector& v, TermOrder order) {
  if (v.is_zero()) fail(Err::EmptyVector, "leading term of zero vector");
  auto it = v.terms().begin();
  if (order == TermOrder::Lex) return {it->first, it->second};
  auto best = it;
  for (auto cur = std::next(it); cur != v.terms().end(); ++cur)
    if (cmp_index(cur->first, best->first, order) > 0) best = cur;
  return {best->first, best->second};
}

}  // namespace gfl
