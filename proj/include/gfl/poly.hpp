#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gfl/localize.hpp"

namespace gfl {

// Names for the three disjoint identifier namespaces of a problem.
struct NameTable {
  std::vector<std::string> params;        // t1..tk
  std::vector<std::string> algebra_vars;  // x1..xn
  std::vector<std::string> module_gens;   // v1..vm

  int param_count() const { return static_cast<int>(params.size()); }
  int var_count() const { return static_cast<int>(algebra_vars.size()); }
  int gen_count() const { return static_cast<int>(module_gens.size()); }
};

// Element of B tensor Frac(A): sparse algebra polynomial in x1..xn with
// tracked scalar coefficients.
class AlgPoly {
 public:
  using TermMap = std::map<ExponentVector, TrackedScalar, ExpDescLex>;

  AlgPoly(int param_count = 0, int var_count = 0) : k_(param_count), n_(var_count) {}

  static AlgPoly monomial(int param_count, const ExponentVector& e, const TrackedScalar& c);

  int param_count() const { return k_; }
  int var_count() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;  // max term degree in the x's; 0 for zero

  const TermMap& terms() const { return terms_; }

  void add_term(const ExponentVector& e, const TrackedScalar& c);

  AlgPoly operator+(const AlgPoly& o) const;
  AlgPoly operator-(const AlgPoly& o) const;
  AlgPoly operator*(const AlgPoly& o) const;
  AlgPoly operator-() const;
  AlgPoly scaled(const TrackedScalar& c) const;
  AlgPoly mul_monomial(const ExponentVector& shift, const TrackedScalar& c) const;

  bool operator==(const AlgPoly& o) const {
    return k_ == o.k_ && n_ == o.n_ && terms_ == o.terms_;
  }
  bool operator!=(const AlgPoly& o) const { return !(*this == o); }

  std::string str(const NameTable& names) const;

 private:
  void check_shape(const AlgPoly& o) const {
    if (k_ != o.k_ || n_ != o.n_) fail(Err::Structural, "algebra polynomial shape mismatch");
  }

  int k_, n_;
  TermMap terms_;
};

// Element of the free module over the x-polynomial ring on v1..vm, with
// tracked scalar coefficients on module monomials x^i v_slot.
class ModVector {
 public:
  using TermMap = std::map<ModuleIndex, TrackedScalar, IdxDescLex>;

  ModVector(int param_count = 0, int var_count = 0, int gen_count = 0)
      : k_(param_count), n_(var_count), m_(gen_count) {}

  static ModVector monomial(int param_count, int var_count, int gen_count, const ModuleIndex& j,
                            const TrackedScalar& c);

  int param_count() const { return k_; }
  int var_count() const { return n_; }
  int gen_count() const { return m_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;

  const TermMap& terms() const { return terms_; }

  void add_term(const ModuleIndex& j, const TrackedScalar& c);

  ModVector operator+(const ModVector& o) const;
  ModVector operator-(const ModVector& o) const;
  ModVector operator-() const;
  ModVector scaled(const TrackedScalar& c) const;
  // Multiplication by the ring monomial c * x^shift (slots are fixed).
  ModVector mul_monomial(const ExponentVector& shift, const TrackedScalar& c) const;

  bool operator==(const ModVector& o) const {
    return k_ == o.k_ && n_ == o.n_ && m_ == o.m_ && terms_ == o.terms_;
  }
  bool operator!=(const ModVector& o) const { return !(*this == o); }

  std::string str(const NameTable& names) const;

 private:
  void check_shape(const ModVector& o) const {
    if (k_ != o.k_ || n_ != o.n_ || m_ != o.m_) fail(Err::Structural, "module vector shape mismatch");
  }

  int k_, n_, m_;
  TermMap terms_;
};

// Action of an algebra polynomial on a module vector.
ModVector act(const AlgPoly& p, const ModVector& v);

// Largest index under the given order and its coefficient; EmptyVector on 0.
std::pair<ExponentVector, TrackedScalar> leading_term(const AlgPoly& p,
                                                      TermOrder order = TermOrder::Lex);
std::pair<ModuleIndex, TrackedScalar> leading_term(const ModVector& v,
                                                   TermOrder order = TermOrder::Lex);

// Monomial text helpers shared by rendering and certificate serialization.
std::string monomial_str(const ExponentVector& e, const std::vector<std::string>& names);
std::string module_monomial_str(const ModuleIndex& j, const NameTable& names);

}  // namespace gfl
