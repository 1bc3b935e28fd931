#include "gfl/engine.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <tuple>
#include <utility>

namespace gfl {

namespace {

// A completed rewrite rule: the monic leading monomial `corner` rewrites to
// `tail`, every term of which is strictly below the corner. Superseded rules
// stay in place (dead) so pair bookkeeping by index remains valid.
struct Rule {
  ModuleIndex corner;
  ModVector tail;
  bool alive = true;
};

ModVector rule_vector(const Rule& r, int k) {
  ModVector v = -r.tail;
  v.add_term(r.corner, TrackedScalar::one(k));
  return v;
}

ModVector embed_algebra(const AlgPoly& p, int gen_count, int slot) {
  ModVector v(p.param_count(), p.var_count(), gen_count);
  for (const auto& [e, c] : p.terms()) v.add_term(ModuleIndex(slot, e), c);
  return v;
}

struct PairKey {
  ModuleIndex lcm;
  size_t a, b;
};

// Pairs pop smallest lcm first; ids break ties, so runs are reproducible.
struct PairLess {
  TermOrder order;
  bool operator()(const PairKey& x, const PairKey& y) const {
    int c = cmp_index(x.lcm, y.lcm, order);
    if (c != 0) return c < 0;
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  }
};

class Completion {
 public:
  Completion(int k, int n, int m, TermOrder order, long cap, WitnessAccumulator& acc)
      : k_(k), n_(n), m_(m), order_(order), cap_(cap), acc_(acc), pairs_(PairLess{order}) {}

  void seed(ModVector v) { pending_.push_back(std::move(v)); }

  void adopt(const std::vector<CornerRelation>& relations) {
    for (const auto& r : relations) {
      ModVector tail(k_, n_, m_);
      for (const auto& [j, c] : r.tail) tail.add_term(j, c);
      rules_.push_back(Rule{r.corner, std::move(tail), true});
    }
  }

  void run() {
    while (!pending_.empty() || !pairs_.empty()) {
      ModVector v(k_, n_, m_);
      if (!pending_.empty()) {
        v = std::move(pending_.front());
        pending_.pop_front();
      } else {
        auto it = pairs_.begin();
        auto [i, j] = it->second;
        pairs_.erase(it);
        if (!rules_[i].alive || !rules_[j].alive) continue;
        v = s_vector(rules_[i], rules_[j]);
      }
      ModVector h = reduce_full(std::move(v));
      if (h.is_zero()) continue;  // consequences of the rules vanish silently
      add_rule(std::move(h));
    }
    // canonicalize: each tail becomes its unique staircase-supported form
    for (auto& r : rules_)
      if (r.alive) r.tail = reduce_full(std::move(r.tail));
  }

  // Rewrites corner-divisible terms until none remain. Monic rules mean no
  // inversions happen here; the witness grows only when rules are created.
  ModVector reduce_full(ModVector v) {
    check_cap(v);
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [j, c] : v.terms()) {
        const Rule* match = nullptr;
        for (const auto& r : rules_) {
          if (r.alive && index_divides(r.corner, j)) {
            match = &r;
            break;
          }
        }
        if (!match) continue;
        ExponentVector shift = j.exps.minus(match->corner.exps);
        TrackedScalar coeff = c;
        ModuleIndex at = j;
        v.add_term(at, -coeff);
        v = v + match->tail.mul_monomial(shift, coeff);
        check_cap(v);
        changed = true;
        break;  // v changed under the iterator; rescan
      }
    }
    return v;
  }

  std::vector<CornerRelation> corner_relations() const {
    std::vector<CornerRelation> out;
    for (const auto& r : rules_)
      if (r.alive) out.push_back(CornerRelation{r.corner, r.tail.terms()});
    std::sort(out.begin(), out.end(), [](const CornerRelation& x, const CornerRelation& y) {
      return IdxDescLex{}(x.corner, y.corner);
    });
    return out;
  }

 private:
  void check_cap(const ModVector& v) {
    if (v.total_degree() <= cap_) return;
    size_t live = 0;
    for (const auto& r : rules_)
      if (r.alive) ++live;
    fail(Err::CapExceeded,
         "degree cap " + std::to_string(cap_) + " exceeded by a term of degree " +
             std::to_string(v.total_degree()) + " (" + std::to_string(live) +
             " corner relations completed, " + std::to_string(pending_.size()) +
             " inputs pending)");
  }

  ModVector s_vector(const Rule& a, const Rule& b) {
    ExponentVector lcm = a.corner.exps.lcm_with(b.corner.exps);
    TrackedScalar one = TrackedScalar::one(k_);
    ModVector va = rule_vector(a, k_).mul_monomial(lcm.minus(a.corner.exps), one);
    ModVector vb = rule_vector(b, k_).mul_monomial(lcm.minus(b.corner.exps), one);
    return va - vb;  // monic leads cancel at (slot, lcm)
  }

  void add_rule(ModVector h) {
    auto [lead, coeff] = leading_term(h, order_);
    ModVector monic = h.scaled(acc_.reciprocal(coeff));
    monic.add_term(lead, -TrackedScalar::one(k_));
    ModVector tail = -monic;

    const size_t id = rules_.size();
    for (size_t i = 0; i < id; ++i) {
      if (!rules_[i].alive) continue;
      if (index_divides(lead, rules_[i].corner)) {
        // the old rule's corner just left the staircase; recycle its content
        rules_[i].alive = false;
        pending_.push_back(rule_vector(rules_[i], k_));
      }
    }
    for (size_t i = 0; i < id; ++i) {
      if (!rules_[i].alive || rules_[i].corner.slot != lead.slot) continue;
      PairKey key{ModuleIndex(lead.slot, rules_[i].corner.exps.lcm_with(lead.exps)), i, id};
      pairs_.emplace(key, std::make_pair(i, id));
    }
    rules_.push_back(Rule{lead, std::move(tail), true});
  }

  int k_, n_, m_;
  TermOrder order_;
  long cap_;
  WitnessAccumulator& acc_;
  std::vector<Rule> rules_;
  std::deque<ModVector> pending_;
  std::map<PairKey, std::pair<size_t, size_t>, PairLess> pairs_;
};

Staircase staircase_of(Shape shape, const std::vector<CornerRelation>& relations) {
  std::vector<ModuleIndex> removed;
  removed.reserve(relations.size());
  for (const auto& r : relations) removed.push_back(r.corner);
  return Staircase::from_removed_generators(shape, removed);
}

Certificate assemble(const ProblemSpec& problem, const SolveConfig& config, long cap,
                     WitnessAccumulator& acc, std::vector<CornerRelation> algebra_corners,
                     std::vector<CornerRelation> module_corners) {
  Certificate cert;
  cert.witness = acc.witness();
  cert.algebra_staircase = staircase_of(Shape{1, problem.var_count()}, algebra_corners);
  cert.algebra_corners = std::move(algebra_corners);
  cert.module_staircase =
      staircase_of(Shape{problem.gen_count(), problem.var_count()}, module_corners);
  cert.module_corners = std::move(module_corners);
  cert.problem_digest = problem_digest(problem);
  cert.config = config;
  cert.config.degree_cap = cap;
  cert.names = problem.names;
  cert.validate();
  return cert;
}

}  // namespace

Certificate solve(const ProblemSpec& problem, const SolveConfig& config) {
  problem.validate();
  const int k = problem.param_count(), n = problem.var_count(), m = problem.gen_count();
  const long cap = resolve_degree_cap(problem, config);
  WitnessAccumulator acc(k);

  Completion algebra(k, n, 1, config.order, cap, acc);
  for (const auto& r : problem.algebra_relations) algebra.seed(embed_algebra(r, 1, 1));
  algebra.run();

  // M as a module over A[x1..xn]: its own relations plus the algebra
  // relations acting on every generator
  Completion module(k, n, m, config.order, cap, acc);
  for (const auto& r : problem.module_relations) module.seed(r);
  for (const auto& r : problem.algebra_relations)
    for (int slot = 1; slot <= m; ++slot) module.seed(embed_algebra(r, m, slot));
  module.run();

  return assemble(problem, config, cap, acc, algebra.corner_relations(),
                  module.corner_relations());
}

ModVector reduce_normal_form(const ModVector& v, const std::vector<CornerRelation>& rules,
                             TermOrder order, WitnessAccumulator& acc) {
  Completion machine(v.param_count(), v.var_count(), v.gen_count(), order,
                     std::numeric_limits<long>::max(), acc);
  machine.adopt(rules);
  return machine.reduce_full(v);
}

AlgPoly reduce_normal_form(const AlgPoly& p, const std::vector<CornerRelation>& rules,
                           TermOrder order, WitnessAccumulator& acc) {
  ModVector reduced = reduce_normal_form(embed_algebra(p, 1, 1), rules, order, acc);
  AlgPoly out(p.param_count(), p.var_count());
  for (const auto& [j, c] : reduced.terms()) out.add_term(j.exps, c);
  return out;
}

Certificate module_case_echelon(const ProblemSpec& problem, const SolveConfig& config) {
  problem.validate();
  if (problem.var_count() != 0) fail(Err::Structural, "echelon path requires n = 0");
  const int k = problem.param_count(), m = problem.gen_count();
  const long cap = resolve_degree_cap(problem, config);
  WitnessAccumulator acc(k);

  // algebra side: B = A/(c1, c2, ...). The first nonzero constant forces
  // 1 = 0 after inverting it; the rest are then consequences.
  std::vector<CornerRelation> algebra_corners;
  for (const auto& r : problem.algebra_relations) {
    if (r.is_zero() || !algebra_corners.empty()) continue;
    auto [lead, coeff] = leading_term(r);
    acc.reciprocal(coeff);
    algebra_corners.push_back(CornerRelation{ModuleIndex(1, lead), {}});
  }

  std::vector<ModVector> seeds;
  for (const auto& r : problem.module_relations) seeds.push_back(r);
  for (const auto& r : problem.algebra_relations)
    for (int slot = 1; slot <= m; ++slot) seeds.push_back(embed_algebra(r, m, slot));

  // substitute known pivot expressions until only free slots remain
  std::map<int, ModVector> pivot_tail;
  auto substitute = [&](ModVector v) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [j, c] : v.terms()) {
        auto it = pivot_tail.find(j.slot);
        if (it == pivot_tail.end()) continue;
        TrackedScalar coeff = c;
        v.add_term(j, -coeff);
        v = v + it->second.scaled(coeff);
        changed = true;
        break;
      }
    }
    return v;
  };

  for (const ModVector& seed : seeds) {
    ModVector v = substitute(seed);
    if (v.is_zero()) continue;
    // the dependency eliminates its largest-slot generator
    auto [lead, coeff] = leading_term(v);
    ModVector monic = v.scaled(acc.reciprocal(coeff));
    monic.add_term(lead, -TrackedScalar::one(k));
    pivot_tail.emplace(lead.slot, -monic);
  }
  for (auto& [slot, tail] : pivot_tail) tail = substitute(std::move(tail));

  std::vector<CornerRelation> module_corners;
  for (auto it = pivot_tail.rbegin(); it != pivot_tail.rend(); ++it)
    module_corners.push_back(
        CornerRelation{ModuleIndex(it->first, ExponentVector::zero(0)), it->second.terms()});

  return assemble(problem, config, cap, acc, std::move(algebra_corners),
                  std::move(module_corners));
}

bool agree_with_general(const ProblemSpec& problem, const SolveConfig& config) {
  Certificate general = solve(problem, config);
  Certificate echelon = module_case_echelon(problem, config);
  return general.module_staircase == echelon.module_staircase &&
         general.algebra_staircase == echelon.algebra_staircase &&
         general.witness == echelon.witness;
}

}  // namespace gfl
