#include "gfl/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <utility>

#include "gfl/engine.hpp"

namespace gfl {

namespace {

// deterministic sampling stream (splitmix64)
struct SampleStream {
  std::uint64_t state;
  explicit SampleStream(long long seed) : state(static_cast<std::uint64_t>(seed)) {}
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  long pick(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

std::vector<Rational> sample_point(SampleStream& rng, int k, const ParamPoly& f) {
  const long box = 10 + 10 * static_cast<long>(f.total_degree());
  for (int attempt = 0; attempt < 500; ++attempt) {
    std::vector<Rational> tau;
    tau.reserve(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) tau.emplace_back(rng.pick(-box, box));
    if (!(f.evaluate(tau) == Rational(0))) return tau;
  }
  fail(Err::SamplingExhausted,
       "no point with f != 0 found in [-" + std::to_string(box) + ", " + std::to_string(box) +
           "]^" + std::to_string(k) + " after 500 attempts");
}

std::string point_str(const std::vector<Rational>& tau) {
  std::string out = "(";
  for (size_t i = 0; i < tau.size(); ++i) {
    if (i) out += ", ";
    out += tau[i].str();
  }
  return out + ")";
}

ModVector embed(const AlgPoly& p, int gen_count, int slot) {
  ModVector v(p.param_count(), p.var_count(), gen_count);
  for (const auto& [e, c] : p.terms()) v.add_term(ModuleIndex(slot, e), c);
  return v;
}

// ---------------------------------------------------------------------------
// Independent normal-form routine. Deliberately organized unlike the engine's
// reducer: it rewrites the largest reducible term first (the engine takes the
// first in carrier order), scans the rule list back to front (the engine scans
// front to back), and shifts tail terms one by one instead of through
// ModVector::mul_monomial. A step budget keeps it total even on rule sets
// that violate strict descent.
// ---------------------------------------------------------------------------
struct StepBudget {
  long steps = 200000;
  bool exhausted = false;
};

ModVector independent_normal_form(ModVector v, const std::vector<CornerRelation>& rules,
                                  TermOrder order, StepBudget& budget) {
  bool progress = true;
  while (progress) {
    progress = false;
    std::vector<ModuleIndex> terms;
    terms.reserve(v.terms().size());
    for (const auto& [j, c] : v.terms()) terms.push_back(j);
    std::sort(terms.begin(), terms.end(), [order](const ModuleIndex& a, const ModuleIndex& b) {
      return cmp_index(a, b, order) > 0;
    });
    for (const ModuleIndex& j : terms) {
      const CornerRelation* hit = nullptr;
      for (auto it = rules.rbegin(); it != rules.rend(); ++it) {
        if (index_divides(it->corner, j)) {
          hit = &*it;
          break;
        }
      }
      if (!hit) continue;
      if (--budget.steps < 0 || v.total_degree() > 1000) {
        budget.exhausted = true;
        return v;
      }
      TrackedScalar c = v.terms().at(j);
      ExponentVector shift = j.exps.minus(hit->corner.exps);
      v.add_term(j, -c);
      for (const auto& [tj, tc] : hit->tail)
        v.add_term(ModuleIndex(tj.slot, tj.exps.plus(shift)), tc * c);
      progress = true;
      break;
    }
  }
  return v;
}

Rational eval_scalar(const TrackedScalar& c, const std::vector<Rational>& tau, bool& ok) {
  Rational dv = c.den().evaluate(tau);
  if (dv == Rational(0)) {
    ok = false;
    return Rational(0);
  }
  return c.num().evaluate(tau) / dv;
}

// cert relations with tau substituted; zero coefficients drop out, matching
// what a reduced field-case basis looks like
std::vector<CornerRelation> specialize_relations(const std::vector<CornerRelation>& rels,
                                                 const std::vector<Rational>& tau, bool& ok) {
  std::vector<CornerRelation> out;
  for (const auto& r : rels) {
    CornerRelation s;
    s.corner = r.corner;
    for (const auto& [j, c] : r.tail) {
      Rational val = eval_scalar(c, tau, ok);
      if (!ok) return {};
      if (val == Rational(0)) continue;
      s.tail.emplace(j, TrackedScalar::constant(0, val));
    }
    out.push_back(std::move(s));
  }
  return out;
}

void enumerate_exponents(int n, long max_total, std::vector<int>& cur,
                         const std::function<void(const ExponentVector&)>& emit) {
  if (static_cast<int>(cur.size()) == n) {
    emit(ExponentVector(cur));
    return;
  }
  long used = 0;
  for (int e : cur) used += e;
  for (int e = 0; used + e <= max_total; ++e) {
    cur.push_back(e);
    enumerate_exponents(n, max_total, cur, emit);
    cur.pop_back();
  }
}

// Exact linear algebra on the specialized relations: row-reduce all monomial
// multiples of the relations up to total degree `bound`, with non-staircase
// columns ordered before staircase columns. A pivot landing in the staircase
// block is a rational dependency among staircase elements, i.e. the claimed
// basis is not independent in the specialized quotient.
bool staircase_independent(const std::vector<ModVector>& relations, const Staircase& staircase,
                           long bound) {
  const int m = staircase.shape().gen_count;
  const int n = staircase.shape().var_count;

  std::vector<ModuleIndex> outside, inside;
  std::vector<int> cur;
  enumerate_exponents(n, bound, cur, [&](const ExponentVector& e) {
    for (int slot = 1; slot <= m; ++slot) {
      ModuleIndex j(slot, e);
      (staircase.contains(j) ? inside : outside).push_back(j);
    }
  });
  std::map<ModuleIndex, int, IdxDescLex> col;
  int next_col = 0;
  for (const ModuleIndex& j : outside) col.emplace(j, next_col++);
  const int staircase_offset = next_col;
  for (const ModuleIndex& j : inside) col.emplace(j, next_col++);

  using Row = std::map<int, Rational>;
  std::map<int, Row> pivot_rows;  // leading column -> normalized row

  bool independent = true;
  for (const ModVector& rel : relations) {
    if (rel.is_zero()) continue;
    const long rel_deg = rel.total_degree();
    std::vector<int> shift_cur;
    enumerate_exponents(n, bound - rel_deg, shift_cur, [&](const ExponentVector& shift) {
      if (!independent) return;
      Row row;
      for (const auto& [j, c] : rel.terms()) {
        Rational val = c.num().constant_value() / c.den().constant_value();
        row[col.at(ModuleIndex(j.slot, j.exps.plus(shift)))] = val;
      }
      while (!row.empty()) {
        const int lead = row.begin()->first;
        const Rational lead_val = row.begin()->second;
        auto p = pivot_rows.find(lead);
        if (p == pivot_rows.end()) {
          if (lead >= staircase_offset) {
            independent = false;  // dependency supported entirely on the staircase
            return;
          }
          Row normalized;
          for (const auto& [cc, vv] : row) normalized.emplace(cc, vv / lead_val);
          pivot_rows.emplace(lead, std::move(normalized));
          break;
        }
        for (const auto& [cc, vv] : p->second) {
          Rational updated = row.count(cc) ? row[cc] - lead_val * vv : -(lead_val * vv);
          if (updated == Rational(0))
            row.erase(cc);
          else
            row[cc] = updated;
        }
      }
    });
    if (!independent) break;
  }
  return independent;
}

long verification_degree_bound(const ProblemSpec& problem, const Certificate& cert) {
  long max_corner = 0;
  for (const auto& r : cert.algebra_corners)
    max_corner = std::max(max_corner, static_cast<long>(r.corner.total_degree()));
  for (const auto& r : cert.module_corners)
    max_corner = std::max(max_corner, static_cast<long>(r.corner.total_degree()));
  return static_cast<long>(problem.max_relation_degree()) + max_corner + 2;
}

}  // namespace

std::string VerifyReport::str() const {
  std::ostringstream out;
  for (const auto& c : checks)
    out << c.check_name << ": " << (c.passed ? "PASS" : "FAIL") << " — " << c.detail << "\n";
  return out.str();
}

SpecializedProblem specialize(const ProblemSpec& problem, const std::vector<Rational>& tau,
                              const ParamPoly& f) {
  const int k = problem.param_count();
  if (f.param_count() != k || static_cast<int>(tau.size()) != k)
    fail(Err::Structural, "substitution point has the wrong number of coordinates");
  if (f.evaluate(tau) == Rational(0))
    fail(Err::PointOutsideWitnessLocus,
         "f vanishes at " + point_str(tau) + "; specialization is only a valid probe where f != 0");

  SpecializedProblem out;
  out.names.algebra_vars = problem.names.algebra_vars;
  out.names.module_gens = problem.names.module_gens;
  bool ok = true;
  for (const auto& r : problem.algebra_relations) {
    AlgPoly q(0, problem.var_count());
    for (const auto& [e, c] : r.terms())
      q.add_term(e, TrackedScalar::constant(0, eval_scalar(c, tau, ok)));
    out.algebra_relations.push_back(std::move(q));
  }
  for (const auto& r : problem.module_relations) {
    ModVector q(0, problem.var_count(), problem.gen_count());
    for (const auto& [j, c] : r.terms())
      q.add_term(j, TrackedScalar::constant(0, eval_scalar(c, tau, ok)));
    out.module_relations.push_back(std::move(q));
  }
  if (!ok) fail(Err::Structural, "a coefficient denominator vanishes at " + point_str(tau));
  return out;
}

bool density_witness(const Certificate& cert) { return !cert.witness.is_zero(); }

VerifyReport verify(const ProblemSpec& problem, const Certificate& cert, int trials,
                    long long seed) {
  problem.validate();
  if (trials < 1) fail(Err::Structural, "trials must be a positive integer");
  if (problem_digest(problem) != cert.problem_digest)
    fail(Err::WrongProblem, "certificate digest " + cert.problem_digest +
                                " was not produced from this problem (expected " +
                                problem_digest(problem) + ")");

  const int k = problem.param_count(), m = problem.gen_count();
  VerifyReport report;
  auto add = [&](const char* name, bool ok, std::string detail) {
    report.checks.push_back(CheckResult{name, ok, std::move(detail)});
  };

  // (a) a zero witness would concede 1 = 0 instead of exhibiting freeness
  const bool witness_ok = density_witness(cert);
  add("witness_nonzero", witness_ok,
      witness_ok ? "f = " + cert.witness.str(problem.names.params)
                 : "the witness polynomial is zero");

  // (b) every tail denominator must become a unit once f is inverted
  {
    bool ok = true;
    long counted = 0;
    std::string offender;
    auto scan = [&](const char* side, const std::vector<CornerRelation>& rels) {
      for (const auto& r : rels)
        for (const auto& [j, c] : r.tail) {
          ++counted;
          if (ok && (!witness_ok || !divides_power_of(c.den(), cert.witness))) {
            ok = false;
            offender = std::string(side) + " corner relation denominator " +
                       c.den().str(problem.names.params) + " does not divide a power of f";
          }
        }
    };
    scan("algebra", cert.algebra_corners);
    scan("module", cert.module_corners);
    if (!witness_ok && counted > 0) offender = "not evaluated: the witness is zero";
    add("denominators_divide_witness", ok,
        ok ? "all " + std::to_string(counted) + " tail denominators divide a power of f"
           : offender);
  }

  // (c) spanning: every input relation rewrites to zero; uses this module's
  // own normal-form loop, not the engine's
  {
    StepBudget budget;
    bool ok = true;
    long instances = 0;
    std::string offender;
    auto check_zero = [&](ModVector v, const std::vector<CornerRelation>& rules,
                          const std::string& what, bool algebra_side) {
      ++instances;
      if (!ok) return;
      ModVector nf = independent_normal_form(std::move(v), rules, cert.config.order, budget);
      if (budget.exhausted) {
        ok = false;
        offender = "normal-form step budget exhausted on " + what +
                   " (corner relations are not strictly descending?)";
      } else if (!nf.is_zero()) {
        ok = false;
        std::string rendered;
        if (algebra_side) {
          // strip the one-slot embedding so the leftover renders with the
          // algebra indeterminates, not a borrowed generator label
          AlgPoly p(problem.names.param_count(), problem.names.var_count());
          for (const auto& [j, c] : nf.terms()) p.add_term(j.exps, c);
          rendered = p.str(problem.names);
        } else {
          rendered = nf.str(problem.names);
        }
        offender = what + " leaves the nonzero normal form " + rendered;
      }
    };
    for (size_t i = 0; i < problem.algebra_relations.size(); ++i)
      check_zero(embed(problem.algebra_relations[i], 1, 1), cert.algebra_corners,
                 "algebra relation " + std::to_string(i + 1), true);
    for (size_t i = 0; i < problem.module_relations.size(); ++i)
      check_zero(problem.module_relations[i], cert.module_corners,
                 "module relation " + std::to_string(i + 1), false);
    for (size_t i = 0; i < problem.algebra_relations.size(); ++i)
      for (int slot = 1; slot <= m; ++slot)
        check_zero(embed(problem.algebra_relations[i], m, slot), cert.module_corners,
                   "algebra relation " + std::to_string(i + 1) + " acting on generator " +
                       std::to_string(slot), false);
    add("spanning", ok,
        ok ? "all " + std::to_string(instances) +
                 " input relation instances reduce to zero against the corner relations"
           : offender);
  }

  // (d) structural discipline of the corner data
  try {
    cert.validate();
    add("corner_structure", true,
        "corners sorted and antichain; tails staircase-supported and strictly descending");
  } catch (const Error& e) {
    add("corner_structure", false, e.what());
  }

  // (e)+(f) need sample points with f != 0, which a zero witness cannot supply
  if (!witness_ok) {
    add("specialization", false, "not evaluated: the witness is zero");
    add("dimension", false, "not evaluated: the witness is zero");
    report.passed = false;
    return report;
  }

  SampleStream rng(seed);
  for (int t = 0; t < trials; ++t)
    report.specialization_points.push_back(sample_point(rng, k, cert.witness));

  const long bound = verification_degree_bound(problem, cert);
  bool spec_ok = true, dim_ok = true;
  std::string spec_detail, dim_detail;

  for (size_t t = 0; t < report.specialization_points.size() && (spec_ok || dim_ok); ++t) {
    const std::vector<Rational>& tau = report.specialization_points[t];
    const std::string where = "point " + std::to_string(t + 1) + " tau = " + point_str(tau);
    SpecializedProblem at_tau = specialize(problem, tau, cert.witness);

    // (e) a fresh field-case solve must reproduce the certificate's staircases
    // and its specialized corner relations
    if (spec_ok) {
      bool eval_ok = true;
      std::vector<CornerRelation> want_alg =
          specialize_relations(cert.algebra_corners, tau, eval_ok);
      std::vector<CornerRelation> want_mod =
          specialize_relations(cert.module_corners, tau, eval_ok);
      if (!eval_ok) {
        spec_ok = false;
        spec_detail = "a tail denominator vanishes at " + where;
      } else {
        try {
          SolveConfig cfg;
          cfg.order = cert.config.order;
          cfg.degree_cap = cert.config.degree_cap;
          Certificate field = solve(at_tau, cfg);
          if (!(field.algebra_staircase == cert.algebra_staircase) ||
              !(field.module_staircase == cert.module_staircase)) {
            spec_ok = false;
            spec_detail = "staircases disagree with the field-case solve at " + where;
          } else if (field.algebra_corners != want_alg || field.module_corners != want_mod) {
            spec_ok = false;
            spec_detail = "specialized corner relations disagree with the field-case solve at " +
                          where;
          }
        } catch (const Error& e) {
          spec_ok = false;
          spec_detail = std::string("field-case solve failed at ") + where + ": " + e.what();
        }
      }
    }

    // (f) exact linear algebra, engine-free: the staircase must stay
    // independent against all relation multiples up to the degree bound
    if (dim_ok) {
      std::vector<ModVector> algebra_rows;
      for (const auto& r : at_tau.algebra_relations) algebra_rows.push_back(embed(r, 1, 1));
      std::vector<ModVector> module_rows = at_tau.module_relations;
      for (const auto& r : at_tau.algebra_relations)
        for (int slot = 1; slot <= m; ++slot) module_rows.push_back(embed(r, m, slot));

      if (!staircase_independent(algebra_rows, cert.algebra_staircase, bound)) {
        dim_ok = false;
        dim_detail = "algebra staircase is rationally dependent at " + where;
      } else if (!staircase_independent(module_rows, cert.module_staircase, bound)) {
        dim_ok = false;
        dim_detail = "module staircase is rationally dependent at " + where;
      }
    }
  }

  if (spec_ok)
    spec_detail = "staircases and specialized corner relations agree with field-case solves at " +
                  std::to_string(trials) + " points";
  add("specialization", spec_ok, spec_detail);
  if (dim_ok)
    dim_detail = "staircase monomials stay independent modulo the specialized relations up to "
                 "degree " +
                 std::to_string(bound) + " at " + std::to_string(trials) + " points";
  add("dimension", dim_ok, dim_detail);

  report.passed = true;
  for (const auto& c : report.checks) report.passed = report.passed && c.passed;
  return report;
}

}  // namespace gfl
