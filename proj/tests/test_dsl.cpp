#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "gfl/dsl.hpp"

using namespace gfl;

namespace {

bool problems_equal(const ProblemSpec& a, const ProblemSpec& b) {
  return a.names.params == b.names.params && a.names.algebra_vars == b.names.algebra_vars &&
         a.names.module_gens == b.names.module_gens &&
         a.algebra_relations == b.algebra_relations && a.module_relations == b.module_relations;
}

ParseError capture(const std::string& text) {
  try {
    dsl::parse(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error");
  return ParseError({1, 1}, "unreachable");
}

}  // namespace

TEST_CASE("smallest interesting problem") {
  ProblemSpec p = dsl::parse("params t; algebra x / (t*x - 1); module v / ();");
  CHECK(p.param_count() == 1);
  CHECK(p.var_count() == 1);
  CHECK(p.gen_count() == 1);
  REQUIRE(p.algebra_relations.size() == 1);
  CHECK(p.module_relations.empty());
  CHECK(p.algebra_relations[0].str(p.names) == "t*x - 1");
  CHECK(p.max_relation_degree() == 1);
}

TEST_CASE("scope violations carry exact locations") {
  ParseError e = capture("params; algebra; module v1, v2 / (v1 - t*v2);");
  CHECK(std::string(e.what()).find("unknown identifier 't'") != std::string::npos);
  CHECK(e.location().line == 1);
  CHECK(e.location().column == 40);

  ParseError dup = capture("params t; algebra t; module v;");
  CHECK(std::string(dup.what()).find("repeated declaration of 't'") != std::string::npos);
  CHECK(dup.location().column == 19);

  // locations track line breaks and comments
  ParseError multi = capture("params t; # comment\nalgebra x / (y);\nmodule v;");
  CHECK(multi.location().line == 2);
  CHECK(multi.location().column == 14);
}

TEST_CASE("empty input reports the missing header") {
  ParseError e = capture("");
  CHECK(e.location().line == 1);
  CHECK(e.location().column == 1);
  CHECK(std::string(e.what()).find("params") != std::string::npos);
}

TEST_CASE("module terms need exactly one generator of degree one") {
  CHECK_THROWS_AS(dsl::parse("params; algebra x; module v / (x);"), ParseError);
  CHECK_THROWS_AS(dsl::parse("params; algebra; module v1, v2 / (v1*v2);"), ParseError);
  CHECK_THROWS_AS(dsl::parse("params; algebra; module v / (v^2);"), ParseError);
  CHECK_NOTHROW(dsl::parse("params; algebra x; module v / (x^2*v - v);"));
}

TEST_CASE("coefficients admit rationals and implicit products") {
  ProblemSpec p = dsl::parse("params t; algebra x / (3/2 t x^2 - 2*x + t^3); module;");
  CHECK(p.module_relations.empty());
  CHECK(p.gen_count() == 0);
  CHECK(p.algebra_relations[0].str(p.names) == "3/2*t*x^2 - 2*x + t^3");
}

TEST_CASE("format is canonical and round trips") {
  ProblemSpec bare = dsl::parse("params t; algebra x; module v;");
  CHECK(dsl::format(bare) == "params t; algebra x / (); module v / ();");

  // terms come out in descending lex order regardless of input order
  ProblemSpec p = dsl::parse("params t; algebra x, y / (y + x + t*y^2); module;");
  CHECK(dsl::format(p) == "params t; algebra x, y / (x + t*y^2 + y); module / ();");

  const char* samples[] = {
      "params t; algebra x / (t*x - 1); module v / ();",
      "params; algebra x, y / (x^2 - y^3); module v / ();",
      "params t1, t2; algebra; module v1, v2 / (t1*v1 - t2*v2, v2);",
      "params t; algebra x; module v1, v2 / (x*v1 - t*v2);",
      "params; algebra; module;",
  };
  for (const char* s : samples) {
    ProblemSpec q = dsl::parse(s);
    ProblemSpec reparsed = dsl::parse(dsl::format(q));
    CHECK(problems_equal(q, reparsed));
    CHECK(dsl::format(reparsed) == dsl::format(q));
  }
}

TEST_CASE("comments and whitespace are invisible") {
  ProblemSpec a = dsl::parse("params t;\n# the ring\nalgebra x / (\n  t*x - 1\n);\nmodule v / ();\n");
  ProblemSpec b = dsl::parse("params t; algebra x / (t*x - 1); module v / ();");
  CHECK(problems_equal(a, b));
}

TEST_CASE("fragment parsers for certificate fields") {
  ParamPoly f = dsl::parse_param_poly("t^2 + t", {"t"});
  CHECK(f.str({"t"}) == "t^2 + t");
  CHECK(dsl::parse_param_poly("-3/2", {"t"}).str({"t"}) == "-3/2");
  CHECK_THROWS_AS(dsl::parse_param_poly("t + x", {"t"}), ParseError);

  ExponentVector e = dsl::parse_monomial("x^2*y", {"x", "y"});
  CHECK(e == ExponentVector({2, 1}));
  CHECK(dsl::parse_monomial("1", {"x", "y"}) == ExponentVector({0, 0}));
  CHECK_THROWS_AS(dsl::parse_monomial("2*x", {"x", "y"}), ParseError);

  NameTable names;
  names.params = {"t"};
  names.algebra_vars = {"x"};
  names.module_gens = {"v1", "v2"};
  ModuleIndex j = dsl::parse_module_monomial("v2*x^3", names);
  CHECK(j == ModuleIndex(2, ExponentVector({3})));
  CHECK(dsl::parse_module_monomial("v1", names) == ModuleIndex(1, ExponentVector({0})));
  CHECK_THROWS_AS(dsl::parse_module_monomial("x^3", names), ParseError);
  CHECK_THROWS_AS(dsl::parse_module_monomial("v1*v2", names), ParseError);

  TrackedScalar s = dsl::parse_scalar("(t + 1)/(t)", {"t"});
  CHECK(s.den().str({"t"}) == "t");
  CHECK(dsl::scalar_str(s, {"t"}) == "(t + 1)/(t)");
  // non-canonical input is reduced on the way in
  TrackedScalar r = dsl::parse_scalar("(t^2 - 1)/(2*t - 2)", {"t"});
  CHECK(dsl::scalar_str(r, {"t"}) == "(1/2*t + 1/2)/(1)");
  CHECK_THROWS_AS(dsl::parse_scalar("(1)/(0)", {"t"}), ParseError);
  CHECK(dsl::parse_scalar("t + 1", {"t"}) == TrackedScalar::of(dsl::parse_param_poly("t + 1", {"t"})));
}
