#pragma once

#include <map>
#include <string>
#include <vector>

#include "gfl/problem.hpp"
#include "gfl/staircase.hpp"

namespace gfl {

// One completed rewrite rule, solved for its corner: w_corner = sum of
// tail coefficient * w_index over staircase indices strictly below the
// corner. The algebra side uses the one-slot embedding (slot 1).
struct CornerRelation {
  ModuleIndex corner;
  std::map<ModuleIndex, TrackedScalar, IdxDescLex> tail;

  bool operator==(const CornerRelation& o) const { return corner == o.corner && tail == o.tail; }
};

// The full generic-freeness claim for one problem: a witness f and staircase
// bases exhibiting B[f^-1] and M[f^-1] as free A[f^-1]-modules, plus the
// finite presentations' corner relations.
struct Certificate {
  ParamPoly witness;
  Staircase algebra_staircase;                   // shape {1, n}
  std::vector<CornerRelation> algebra_corners;   // descending by corner
  Staircase module_staircase;                    // shape {m, n}
  std::vector<CornerRelation> module_corners;    // descending by corner
  std::string problem_digest;
  SolveConfig config;                            // degree_cap resolved
  NameTable names;

  // Re-checks every structural invariant; throws MalformedCertificate naming
  // the violated one.
  void validate() const;

  bool operator==(const Certificate& o) const;
};

// The presentations the certificate encodes, rendered with canonical labels
// X1..Xn and V1..Vm: one relation per corner on each side.
struct Presentation {
  std::vector<std::string> algebra_indeterminates;
  std::vector<std::string> algebra_relations;
  std::vector<std::string> module_generators;
  std::vector<std::string> module_relations;
};

Presentation build_presentation(const Certificate& cert);

// Canonical textual serialization; equal certificates serialize to equal
// bytes. deserialize re-validates everything and needs the problem's names
// to resolve identifiers.
std::string serialize(const Certificate& cert);
Certificate deserialize(const std::string& bytes, const NameTable& names);

// FNV-1a over the canonical problem text; ties certificates to problems.
std::string problem_digest(const ProblemSpec& problem);

const char* order_name(TermOrder order);

}  // namespace gfl
