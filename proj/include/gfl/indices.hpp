#pragma once

#include <string>
#include <vector>

#include "gfl/errors.hpp"

namespace gfl {

enum class TermOrder { Lex, GrLex };

// A point of the index set for monomials: a fixed-length tuple of
// nonnegative exponents. Length n for algebra monomials, k for parameter
// monomials.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::vector<int> e) : e_(std::move(e)) {
    for (int x : e_)
      if (x < 0) fail(Err::Structural, "negative exponent");
  }

  static ExponentVector zero(int nvars) { return ExponentVector(std::vector<int>(nvars, 0)); }

  static ExponentVector unit(int nvars, int var, int power = 1) {
    std::vector<int> e(nvars, 0);
    if (var < 0 || var >= nvars) fail(Err::Structural, "variable index out of range");
    e[var] = power;
    return ExponentVector(std::move(e));
  }

  int size() const { return static_cast<int>(e_.size()); }
  int at(int i) const { return e_[i]; }
  const std::vector<int>& entries() const { return e_; }

  int total_degree() const {
    int d = 0;
    for (int x : e_) d += x;
    return d;
  }

  bool is_zero() const {
    for (int x : e_)
      if (x) return false;
    return true;
  }

  // Componentwise <=, i.e. the monomial x^this divides x^other.
  bool divides(const ExponentVector& other) const {
    check_shape(other);
    for (int i = 0; i < size(); ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }

  ExponentVector plus(const ExponentVector& o) const {
    check_shape(o);
    std::vector<int> r(e_);
    for (int i = 0; i < size(); ++i) r[i] += o.e_[i];
    return ExponentVector(std::move(r));
  }

  ExponentVector minus(const ExponentVector& o) const {
    check_shape(o);
    std::vector<int> r(e_);
    for (int i = 0; i < size(); ++i) {
      r[i] -= o.e_[i];
      if (r[i] < 0) fail(Err::Structural, "exponent subtraction underflow");
    }
    return ExponentVector(std::move(r));
  }

  ExponentVector lcm_with(const ExponentVector& o) const {
    check_shape(o);
    std::vector<int> r(e_);
    for (int i = 0; i < size(); ++i)
      if (o.e_[i] > r[i]) r[i] = o.e_[i];
    return ExponentVector(std::move(r));
  }

  bool operator==(const ExponentVector& o) const { return e_ == o.e_; }
  bool operator!=(const ExponentVector& o) const { return e_ != o.e_; }

  void check_shape(const ExponentVector& o) const {
    if (size() != o.size()) fail(Err::Structural, "exponent vector shape mismatch");
  }

 private:
  std::vector<int> e_;
};

// -1 / 0 / +1. Lexicographic by default: first differing coordinate decides.
// GrLex compares total degree first, then lex.
inline int cmp_index(const ExponentVector& a, const ExponentVector& b,
                     TermOrder order = TermOrder::Lex) {
  a.check_shape(b);
  if (order == TermOrder::GrLex) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
  }
  for (int i = 0; i < a.size(); ++i) {
    if (a.at(i) != b.at(i)) return a.at(i) < b.at(i) ? -1 : 1;
  }
  return 0;
}

// Index of a module generator vector x^i v_slot; slot is 1-based.
struct ModuleIndex {
  int slot = 1;
  ExponentVector exps;

  ModuleIndex() = default;
  ModuleIndex(int s, ExponentVector e) : slot(s), exps(std::move(e)) {
    if (slot < 1) fail(Err::Structural, "module generator slot must be >= 1");
  }

  int total_degree() const { return exps.total_degree(); }

  bool operator==(const ModuleIndex& o) const { return slot == o.slot && exps == o.exps; }
  bool operator!=(const ModuleIndex& o) const { return !(*this == o); }
};

// Slot compares first, then the exponents under the chosen order.
inline int cmp_index(const ModuleIndex& a, const ModuleIndex& b,
                     TermOrder order = TermOrder::Lex) {
  if (a.slot != b.slot) return a.slot < b.slot ? -1 : 1;
  return cmp_index(a.exps, b.exps, order);
}

// Divisibility within one slot: a divides b iff same slot and exps divide.
inline bool index_divides(const ModuleIndex& a, const ModuleIndex& b) {
  if (a.slot != b.slot) return false;
  return a.exps.divides(b.exps);
}

// Map comparators. Canonical storage order is descending lex, so that
// iteration yields the canonical term sequence and begin() is the lex
// leading term.
struct ExpDescLex {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    return cmp_index(a, b, TermOrder::Lex) > 0;
  }
};

struct IdxDescLex {
  bool operator()(const ModuleIndex& a, const ModuleIndex& b) const {
    return cmp_index(a, b, TermOrder::Lex) > 0;
  }
};

}  // namespace gfl
