#include "gfl/certificate.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "json.hpp"

#include "gfl/dsl.hpp"
#include "gfl/poly.hpp"

namespace gfl {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void malformed(const std::string& invariant) {
  fail(Err::MalformedCertificate, invariant);
}

// Corner monomial text: "x^2*y", or "1" for the constant; module side
// "v2*x^3" or bare "v2".
std::string algebra_corner_str(const ModuleIndex& j, const NameTable& names) {
  std::string mono = monomial_str(j.exps, names.algebra_vars);
  return mono.empty() ? "1" : mono;
}

std::string module_corner_str(const ModuleIndex& j, const NameTable& names) {
  return module_monomial_str(j, names);
}

void validate_side(const char* side, const Staircase& staircase,
                   const std::vector<CornerRelation>& relations, const ParamPoly& witness,
                   TermOrder order, int param_count) {
  std::string at = std::string(" (") + side + " side)";
  std::vector<ModuleIndex> listed;
  listed.reserve(relations.size());
  for (const auto& r : relations) listed.push_back(r.corner);

  std::vector<ModuleIndex> sorted = listed;
  std::sort(sorted.begin(), sorted.end(),
            [](const ModuleIndex& a, const ModuleIndex& b) { return IdxDescLex{}(a, b); });
  if (sorted != listed) malformed("CornersNotSorted" + at);
  if (minimal_generators(listed) != listed) malformed("CornerNotAntichain" + at);
  if (staircase.corners() != listed) malformed("CornerMismatch" + at);

  for (const auto& r : relations) {
    if (r.corner.slot > staircase.shape().gen_count ||
        r.corner.exps.size() != staircase.shape().var_count)
      malformed("ShapeMismatch" + at);
    for (const auto& [j, c] : r.tail) {
      if (j.slot > staircase.shape().gen_count || j.exps.size() != staircase.shape().var_count)
        malformed("ShapeMismatch" + at);
      if (c.is_zero()) malformed("ZeroTailCoefficient" + at);
      if (c.param_count() != param_count) malformed("ShapeMismatch" + at);
      if (!staircase.contains(j)) malformed("TailOutsideStaircase" + at);
      if (cmp_index(j, r.corner, order) >= 0) malformed("StrictDescentViolated" + at);
      if (!divides_power_of(c.den(), witness)) malformed("DenominatorNotDividingWitness" + at);
    }
  }
}

std::string hex64(std::uint64_t h) {
  static const char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

ordered_json side_to_json(const std::vector<CornerRelation>& relations, const NameTable& names,
                          bool module_side) {
  auto corner_str = [&](const ModuleIndex& j) {
    return module_side ? module_corner_str(j, names) : algebra_corner_str(j, names);
  };
  ordered_json side;
  side["corners"] = ordered_json::array();
  for (const auto& r : relations) side["corners"].push_back(corner_str(r.corner));
  side["relations"] = ordered_json::array();
  for (const auto& r : relations) {
    ordered_json rel;
    rel["corner"] = corner_str(r.corner);
    rel["tail"] = ordered_json::array();
    for (const auto& [j, c] : r.tail) {
      ordered_json entry;
      entry["monomial"] = corner_str(j);
      entry["coeff"] = dsl::scalar_str(c, names.params);
      rel["tail"].push_back(entry);
    }
    side["relations"].push_back(rel);
  }
  return side;
}

// Everything below reads parsed JSON back into a Certificate, translating
// shape surprises into MalformedCertificate rather than json exceptions.
const ordered_json& field(const ordered_json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) malformed(std::string("MissingField: ") + key);
  return obj.at(key);
}

std::string string_field(const ordered_json& obj, const char* key) {
  const ordered_json& v = field(obj, key);
  if (!v.is_string()) malformed(std::string("FieldNotText: ") + key);
  return v.get<std::string>();
}

ModuleIndex parse_corner(const std::string& text, const NameTable& names, bool module_side) {
  if (module_side) return dsl::parse_module_monomial(text, names);
  return ModuleIndex(1, dsl::parse_monomial(text, names.algebra_vars));
}

std::vector<CornerRelation> side_from_json(const ordered_json& side, const NameTable& names,
                                           bool module_side) {
  std::vector<CornerRelation> out;
  const ordered_json& corners = field(side, "corners");
  const ordered_json& relations = field(side, "relations");
  if (!corners.is_array() || !relations.is_array()) malformed("SideNotArrays");
  if (corners.size() != relations.size()) malformed("CornerRelationCountMismatch");
  for (size_t i = 0; i < relations.size(); ++i) {
    const ordered_json& rel = relations[i];
    CornerRelation r;
    r.corner = parse_corner(string_field(rel, "corner"), names, module_side);
    if (!corners[i].is_string() ||
        !(parse_corner(corners[i].get<std::string>(), names, module_side) == r.corner))
      malformed("CornerListDisagreesWithRelations");
    const ordered_json& tail = field(rel, "tail");
    if (!tail.is_array()) malformed("TailNotArray");
    for (const auto& entry : tail) {
      ModuleIndex j = parse_corner(string_field(entry, "monomial"), names, module_side);
      TrackedScalar c = dsl::parse_scalar(string_field(entry, "coeff"), names.params);
      if (!r.tail.emplace(j, c).second) malformed("DuplicateTailMonomial");
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

const char* order_name(TermOrder order) {
  return order == TermOrder::Lex ? "lex" : "grlex";
}

void Certificate::validate() const {
  if (witness.is_zero()) malformed("ZeroWitness");
  if (witness.param_count() != names.param_count()) malformed("ShapeMismatch (witness)");
  if (!(squarefree_primitive(witness) == witness)) malformed("WitnessNotNormalized");
  if (problem_digest.empty()) malformed("MissingDigest");

  if (!(algebra_staircase.shape() == Shape{1, names.var_count()}))
    malformed("ShapeMismatch (algebra staircase)");
  if (!(module_staircase.shape() == Shape{names.gen_count(), names.var_count()}))
    malformed("ShapeMismatch (module staircase)");
  if (config.degree_cap && *config.degree_cap < 0) malformed("NegativeDegreeCap");

  validate_side("algebra", algebra_staircase, algebra_corners, witness, config.order,
                names.param_count());
  validate_side("module", module_staircase, module_corners, witness, config.order,
                names.param_count());
}

bool Certificate::operator==(const Certificate& o) const {
  return witness == o.witness && algebra_staircase == o.algebra_staircase &&
         algebra_corners == o.algebra_corners && module_staircase == o.module_staircase &&
         module_corners == o.module_corners && problem_digest == o.problem_digest &&
         config.order == o.config.order && config.degree_cap == o.config.degree_cap &&
         names.params == o.names.params && names.algebra_vars == o.names.algebra_vars &&
         names.module_gens == o.names.module_gens;
}

Presentation build_presentation(const Certificate& cert) {
  cert.validate();
  Presentation pres;
  NameTable labels;
  labels.params = cert.names.params;
  for (int i = 1; i <= cert.names.var_count(); ++i)
    labels.algebra_vars.push_back("X" + std::to_string(i));
  for (int l = 1; l <= cert.names.gen_count(); ++l)
    labels.module_gens.push_back("V" + std::to_string(l));
  pres.algebra_indeterminates = labels.algebra_vars;
  pres.module_generators = labels.module_gens;

  // corner minus tail, rendered as an element of the free carrier; the
  // algebra side drops its one-slot embedding and prints as a polynomial
  for (const auto& r : cert.algebra_corners) {
    AlgPoly p(cert.names.param_count(), cert.names.var_count());
    p.add_term(r.corner.exps, TrackedScalar::one(cert.names.param_count()));
    for (const auto& [j, c] : r.tail) p.add_term(j.exps, -c);
    pres.algebra_relations.push_back(p.str(labels));
  }
  for (const auto& r : cert.module_corners) {
    ModVector v(cert.names.param_count(), cert.names.var_count(), cert.names.gen_count());
    v.add_term(r.corner, TrackedScalar::one(cert.names.param_count()));
    for (const auto& [j, c] : r.tail) v.add_term(j, -c);
    pres.module_relations.push_back(v.str(labels));
  }
  return pres;
}

std::string serialize(const Certificate& cert) {
  ordered_json j;
  j["format_version"] = 1;
  j["problem_digest"] = cert.problem_digest;
  j["witness_f"] = cert.witness.str(cert.names.params);
  j["algebra"] = side_to_json(cert.algebra_corners, cert.names, false);
  j["module"] = side_to_json(cert.module_corners, cert.names, true);
  ordered_json cfg;
  cfg["order"] = order_name(cert.config.order);
  if (cert.config.degree_cap)
    cfg["degree_cap"] = *cert.config.degree_cap;
  else
    cfg["degree_cap"] = nullptr;
  j["config"] = cfg;
  return j.dump(2) + "\n";
}

Certificate deserialize(const std::string& bytes, const NameTable& names) {
  ordered_json j;
  try {
    j = ordered_json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    // recover line/column from the byte offset for a uniform error shape
    SourceLocation loc{1, 1};
    size_t stop = std::min(bytes.size(), static_cast<size_t>(e.byte > 0 ? e.byte - 1 : 0));
    for (size_t i = 0; i < stop; ++i) {
      if (bytes[i] == '\n') {
        ++loc.line;
        loc.column = 1;
      } else {
        ++loc.column;
      }
    }
    throw ParseError(loc, "certificate is not well-formed structured text");
  }

  Certificate cert;
  cert.names = names;
  const ordered_json& version = field(j, "format_version");
  if (!version.is_number_integer() || version.get<int>() != 1)
    malformed("UnsupportedFormatVersion");
  cert.problem_digest = string_field(j, "problem_digest");
  cert.witness = dsl::parse_param_poly(string_field(j, "witness_f"), names.params);

  cert.algebra_corners = side_from_json(field(j, "algebra"), names, false);
  cert.module_corners = side_from_json(field(j, "module"), names, true);

  const ordered_json& cfg = field(j, "config");
  std::string order = string_field(cfg, "order");
  if (order == "lex")
    cert.config.order = TermOrder::Lex;
  else if (order == "grlex")
    cert.config.order = TermOrder::GrLex;
  else
    malformed("UnknownOrder: " + order);
  const ordered_json& cap = field(cfg, "degree_cap");
  if (cap.is_null())
    cert.config.degree_cap = std::nullopt;
  else if (cap.is_number_integer())
    cert.config.degree_cap = cap.get<long>();
  else
    malformed("FieldNotInteger: degree_cap");

  std::vector<ModuleIndex> algebra_removed, module_removed;
  for (const auto& r : cert.algebra_corners) algebra_removed.push_back(r.corner);
  for (const auto& r : cert.module_corners) module_removed.push_back(r.corner);
  cert.algebra_staircase =
      Staircase::from_removed_generators(Shape{1, names.var_count()}, algebra_removed);
  cert.module_staircase = Staircase::from_removed_generators(
      Shape{names.gen_count(), names.var_count()}, module_removed);

  cert.validate();
  return cert;
}

std::string problem_digest(const ProblemSpec& problem) {
  std::string text = dsl::format(problem);
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return hex64(h);
}

}  // namespace gfl
