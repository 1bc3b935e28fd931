#pragma once

#include <string>
#include <vector>

#include "gfl/certificate.hpp"
#include "gfl/problem.hpp"

namespace gfl {

struct CheckResult {
  std::string check_name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  bool passed = false;  // conjunction of all check outcomes
  std::vector<CheckResult> checks;
  std::vector<std::vector<Rational>> specialization_points;

  // one line per check: "<check_name>: PASS|FAIL — <detail>"
  std::string str() const;
};

// A problem with k = 0, obtained by substituting a rational point for the
// parameters; valid as a freeness probe exactly where the witness is nonzero.
using SpecializedProblem = ProblemSpec;

// Checks, in order: witness nonzero; tail denominators divide a power of the
// witness; every input relation reduces to zero against the certificate's
// corner relations (an independent normal-form routine, not the engine's);
// corner structure (sortedness, antichain, strict descent); staircase
// agreement with a fresh field-case solve at `trials` sampled points with
// f(tau) != 0; and staircase independence against exact linear algebra on the
// specialized relations up to the verification degree bound.
// Throws WrongProblem if the certificate's digest is not this problem's.
VerifyReport verify(const ProblemSpec& problem, const Certificate& cert, int trials = 5,
                    long long seed = 0);

// Substitutes tau for the parameters in every coefficient. Requires
// f(tau) != 0 (throws PointOutsideWitnessLocus otherwise).
SpecializedProblem specialize(const ProblemSpec& problem, const std::vector<Rational>& tau,
                              const ParamPoly& f);

// True iff the witness is nonzero: for a domain A this says D(f) is a dense
// open of Spec A, which is the geometric content of the certificate.
bool density_witness(const Certificate& cert);

}  // namespace gfl
