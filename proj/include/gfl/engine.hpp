#pragma once

#include <vector>

#include "gfl/certificate.hpp"

namespace gfl {

// Critical-pair completion over the tracked fraction field of A: finds the
// staircases, corner relations, and witness f certifying that B[f^-1] and
// M[f^-1] are free over A[f^-1].
Certificate solve(const ProblemSpec& problem, const SolveConfig& config = {});

// The unique staircase-supported normal form; every division performed on
// the way is recorded in acc. Rules must have distinct antichain corners.
ModVector reduce_normal_form(const ModVector& v, const std::vector<CornerRelation>& rules,
                             TermOrder order, WitnessAccumulator& acc);
AlgPoly reduce_normal_form(const AlgPoly& p, const std::vector<CornerRelation>& rules,
                           TermOrder order, WitnessAccumulator& acc);

// The n = 0 special case: echelon elimination over the tracked fractions,
// removing one generator per dependency, largest slot first.
Certificate module_case_echelon(const ProblemSpec& problem, const SolveConfig& config = {});

// Cross-validation of the two proof paths on n = 0 problems: identical
// staircases and equal witnesses.
bool agree_with_general(const ProblemSpec& problem, const SolveConfig& config = {});

}  // namespace gfl
