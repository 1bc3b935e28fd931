#include "gfl/problem.hpp"

#include <algorithm>

namespace gfl {

int ProblemSpec::max_relation_degree() const {
  int d = 0;
  for (const auto& r : algebra_relations) d = std::max(d, r.total_degree());
  for (const auto& r : module_relations) d = std::max(d, r.total_degree());
  return d;
}

void ProblemSpec::validate() const {
  const int k = param_count(), n = var_count(), m = gen_count();
  auto check_coeff = [&](const TrackedScalar& c) {
    if (c.param_count() != k) fail(Err::Structural, "coefficient parameter count mismatch");
    if (!c.den().is_constant()) fail(Err::Structural, "input relations must be polynomial");
  };
  for (const auto& r : algebra_relations) {
    if (r.param_count() != k || r.var_count() != n)
      fail(Err::Structural, "algebra relation shape mismatch");
    for (const auto& [e, c] : r.terms()) check_coeff(c);
  }
  for (const auto& r : module_relations) {
    if (r.param_count() != k || r.var_count() != n || r.gen_count() != m)
      fail(Err::Structural, "module relation shape mismatch");
    for (const auto& [j, c] : r.terms()) check_coeff(c);
  }
}

long resolve_degree_cap(const ProblemSpec& problem, const SolveConfig& config) {
  const int maxdeg = problem.max_relation_degree();
  if (config.degree_cap) {
    if (*config.degree_cap < maxdeg)
      fail(Err::Structural, "degree cap is below the input relations");
    return *config.degree_cap;
  }
  return 4L * (1 + maxdeg);
}

}  // namespace gfl
