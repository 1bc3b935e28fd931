#pragma once

#include <optional>
#include <vector>

#include "gfl/poly.hpp"

namespace gfl {

struct SolveConfig {
  TermOrder order = TermOrder::Lex;
  // Bound on the total degree any term may reach during completion. Empty
  // means "derive from the input": 4 * (1 + max input relation degree).
  std::optional<long> degree_cap;
  long long deterministic_seed = 0;
};

// A presented algebra B = A[x1..xn]/(algebra_relations) over A = Q[t1..tk]
// together with a presented B-module M = B^m / (module_relations).
struct ProblemSpec {
  NameTable names;
  std::vector<AlgPoly> algebra_relations;
  std::vector<ModVector> module_relations;

  int param_count() const { return names.param_count(); }
  int var_count() const { return names.var_count(); }
  int gen_count() const { return names.gen_count(); }

  // Max total x-degree over all relations; 0 when every relation is constant
  // or there are none.
  int max_relation_degree() const;

  // Shape and coefficient sanity; input relation coefficients must be plain
  // polynomials (denominator 1).
  void validate() const;
};

long resolve_degree_cap(const ProblemSpec& problem, const SolveConfig& config);

}  // namespace gfl
