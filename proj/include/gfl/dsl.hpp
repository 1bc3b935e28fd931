#pragma once

#include <string>
#include <vector>

#include "gfl/problem.hpp"

namespace gfl::dsl {

// Problem description files:
//   params t1, t2; algebra x, y / (x^2 - t1); module v1, v2 / (x*v1 - t2*v2);
// Whitespace-insensitive, '#' starts a line comment. Throws ParseError with a
// 1-based location on any syntax or scope violation.
ProblemSpec parse(const std::string& text);

// Canonical single-line rendering; parse(format(p)) == p, and equal problems
// format identically.
std::string format(const ProblemSpec& problem);

// Fragment parsers shared with the certificate reader. Each consumes the
// entire string and throws ParseError on leftovers.
ParamPoly parse_param_poly(const std::string& text, const std::vector<std::string>& params);
// "x^2*y", or "1" for the constant monomial.
ExponentVector parse_monomial(const std::string& text, const std::vector<std::string>& vars);
// "v2*x^3" or bare "v1".
ModuleIndex parse_module_monomial(const std::string& text, const NameTable& names);
// "(num)/(den)" with ParamPoly numerator and denominator.
TrackedScalar parse_scalar(const std::string& text, const std::vector<std::string>& params);

// Fixed-shape scalar rendering for certificate files, always "(num)/(den)".
std::string scalar_str(const TrackedScalar& s, const std::vector<std::string>& params);

}  // namespace gfl::dsl
