#include "gfl/dsl.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <utility>

namespace gfl::dsl {

namespace {

enum class Tok { Ident, Int, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  SourceLocation loc;
};

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++col;
      ++i;
      continue;
    }
    if (c == '#') {  // comment to end of line; the newline branch resets col
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    SourceLocation loc{line, col};
    if (is_ident_start(c)) {
      size_t j = i;
      while (j < text.size() && is_ident_char(text[j])) ++j;
      out.push_back({Tok::Ident, text.substr(i, j - i), loc});
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Tok::Int, text.substr(i, j - i), loc});
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (std::string(";,/()*^+-").find(c) != std::string::npos) {
      out.push_back({Tok::Punct, std::string(1, c), loc});
      ++col;
      ++i;
      continue;
    }
    throw ParseError(loc, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Tok::End, "", {line, col}});
  return out;
}

enum class NameKind { Param, Var, Gen };

// One parsed product of a coefficient and identifier powers, not yet
// classified into a carrier type.
struct RawTerm {
  Rational coeff{1};
  std::vector<int> param_exps;
  std::vector<int> var_exps;
  int slot = 0;  // 0: no module generator in the term
  int gen_power = 0;
  SourceLocation loc;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  ProblemSpec parse_problem() {
    ProblemSpec problem;
    expect_keyword("params");
    names_.params = ident_list(NameKind::Param);
    expect_punct(';', "after parameter list");

    expect_keyword("algebra");
    names_.algebra_vars = ident_list(NameKind::Var);
    if (at_punct('/')) {
      ++pos_;
      expect_punct('(', "after '/'");
      if (!at_punct(')')) {
        while (true) {
          problem.algebra_relations.push_back(parse_alg_poly());
          if (!at_punct(',')) break;
          ++pos_;
        }
      }
      expect_punct(')', "to close the relation list");
    }
    expect_punct(';', "after algebra declaration");

    expect_keyword("module");
    names_.module_gens = ident_list(NameKind::Gen);
    if (at_punct('/')) {
      ++pos_;
      expect_punct('(', "after '/'");
      if (!at_punct(')')) {
        while (true) {
          problem.module_relations.push_back(parse_mod_vector());
          if (!at_punct(',')) break;
          ++pos_;
        }
      }
      expect_punct(')', "to close the relation list");
    }
    expect_punct(';', "after module declaration");

    expect_end();
    problem.names = names_;
    problem.validate();
    return problem;
  }

  void preload(NameKind kind, const std::vector<std::string>& list) {
    for (size_t i = 0; i < list.size(); ++i) scope_[list[i]] = {kind, static_cast<int>(i)};
    switch (kind) {
      case NameKind::Param: names_.params = list; break;
      case NameKind::Var: names_.algebra_vars = list; break;
      case NameKind::Gen: names_.module_gens = list; break;
    }
  }

  ParamPoly parse_param_poly_body() {
    ParamPoly p(names_.param_count());
    parse_sum([&](const RawTerm& t) {
      p.add_term(ExponentVector(t.param_exps), t.coeff);
    });
    expect_end();
    return p;
  }

  ExponentVector parse_monomial_body() {
    RawTerm t = parse_term();
    if (!(t.coeff == Rational(1))) throw ParseError(t.loc, "expected a monomial");
    expect_end();
    return ExponentVector(t.var_exps);
  }

  ModuleIndex parse_module_monomial_body() {
    RawTerm t = parse_term();
    if (!(t.coeff == Rational(1))) throw ParseError(t.loc, "expected a monomial");
    if (t.slot == 0) throw ParseError(t.loc, "expected a module generator");
    if (t.gen_power != 1)
      throw ParseError(t.loc, "module generator must appear to the first power");
    expect_end();
    return ModuleIndex(t.slot, ExponentVector(t.var_exps));
  }

  TrackedScalar parse_scalar_body() {
    const int k = names_.param_count();
    if (!at_punct('(')) {
      ParamPoly p = parse_param_poly_body();
      return TrackedScalar::of(p);
    }
    ++pos_;
    ParamPoly num(k);
    parse_sum([&](const RawTerm& t) { num.add_term(ExponentVector(t.param_exps), t.coeff); });
    expect_punct(')', "to close the numerator");
    expect_punct('/', "between numerator and denominator");
    Token den_open = peek();
    expect_punct('(', "to open the denominator");
    ParamPoly den(k);
    parse_sum([&](const RawTerm& t) { den.add_term(ExponentVector(t.param_exps), t.coeff); });
    expect_punct(')', "to close the denominator");
    expect_end();
    if (den.is_zero()) throw ParseError(den_open.loc, "zero denominator");
    return TrackedScalar(std::move(num), std::move(den));
  }

 private:
  const Token& peek() const { return toks_[pos_]; }

  Token eat() {
    Token t = toks_[pos_];
    if (t.kind != Tok::End) ++pos_;
    return t;
  }

  bool at_punct(char c) const {
    return peek().kind == Tok::Punct && peek().text[0] == c;
  }

  void expect_punct(char c, const std::string& what) {
    if (!at_punct(c))
      throw ParseError(peek().loc, std::string("expected '") + c + "' " + what);
    ++pos_;
  }

  void expect_keyword(const std::string& kw) {
    if (peek().kind != Tok::Ident || peek().text != kw)
      throw ParseError(peek().loc, "expected '" + kw + "'");
    ++pos_;
  }

  void expect_end() {
    if (peek().kind != Tok::End) throw ParseError(peek().loc, "expected end of input");
  }

  std::vector<std::string> ident_list(NameKind kind) {
    std::vector<std::string> out;
    if (peek().kind != Tok::Ident) return out;
    while (true) {
      Token t = eat();
      if (scope_.count(t.text))
        throw ParseError(t.loc, "repeated declaration of '" + t.text + "'");
      scope_[t.text] = {kind, static_cast<int>(out.size())};
      out.push_back(t.text);
      if (!at_punct(',')) break;
      ++pos_;
      if (peek().kind != Tok::Ident)
        throw ParseError(peek().loc, "expected identifier after ','");
    }
    return out;
  }

  RawTerm parse_term() {
    RawTerm t;
    t.loc = peek().loc;
    t.param_exps.assign(names_.params.size(), 0);
    t.var_exps.assign(names_.algebra_vars.size(), 0);
    bool any = false;

    if (peek().kind == Tok::Int) {
      any = true;
      Rational num = Rational::from_string(eat().text);
      if (at_punct('/')) {
        ++pos_;
        if (peek().kind != Tok::Int)
          throw ParseError(peek().loc, "expected an integer denominator");
        Token d = eat();
        Rational den = Rational::from_string(d.text);
        if (den.is_zero()) throw ParseError(d.loc, "zero denominator");
        num = num / den;
      }
      t.coeff = num;
    }

    while (true) {
      bool starred = false;
      if (at_punct('*')) {
        starred = true;
        ++pos_;
      }
      if (peek().kind != Tok::Ident) {
        if (starred) throw ParseError(peek().loc, "expected identifier after '*'");
        break;
      }
      Token id = eat();
      any = true;
      int power = 1;
      if (at_punct('^')) {
        ++pos_;
        if (peek().kind != Tok::Int) throw ParseError(peek().loc, "expected an exponent");
        Token p = eat();
        if (p.text.size() > 6) throw ParseError(p.loc, "exponent too large");
        power = std::stoi(p.text);
      }
      auto it = scope_.find(id.text);
      if (it == scope_.end())
        throw ParseError(id.loc, "unknown identifier '" + id.text + "'");
      auto [kind, idx] = it->second;
      switch (kind) {
        case NameKind::Param:
          t.param_exps[static_cast<size_t>(idx)] += power;
          break;
        case NameKind::Var:
          t.var_exps[static_cast<size_t>(idx)] += power;
          break;
        case NameKind::Gen:
          if (t.slot != 0 && t.slot != idx + 1)
            throw ParseError(id.loc, "term mentions two module generators");
          t.slot = idx + 1;
          t.gen_power += power;
          break;
      }
    }

    if (!any) throw ParseError(t.loc, "expected a term");
    return t;
  }

  template <typename Emit>
  void parse_sum(Emit&& emit) {
    bool negative = false;
    if (at_punct('-')) {
      negative = true;
      ++pos_;
    } else if (at_punct('+')) {
      ++pos_;
    }
    while (true) {
      RawTerm t = parse_term();
      if (negative) t.coeff = -t.coeff;
      emit(t);
      if (at_punct('+')) {
        negative = false;
        ++pos_;
      } else if (at_punct('-')) {
        negative = true;
        ++pos_;
      } else {
        break;
      }
    }
  }

  AlgPoly parse_alg_poly() {
    const int k = names_.param_count(), n = names_.var_count();
    AlgPoly p(k, n);
    parse_sum([&](const RawTerm& t) {
      ParamPoly pm(k);
      pm.add_term(ExponentVector(t.param_exps), t.coeff);
      p.add_term(ExponentVector(t.var_exps), TrackedScalar::of(pm));
    });
    return p;
  }

  ModVector parse_mod_vector() {
    const int k = names_.param_count(), n = names_.var_count(), m = names_.gen_count();
    ModVector v(k, n, m);
    parse_sum([&](const RawTerm& t) {
      if (t.slot == 0)
        throw ParseError(t.loc, "module relation term needs a module generator");
      if (t.gen_power != 1)
        throw ParseError(t.loc, "module generator must appear to the first power");
      ParamPoly pm(k);
      pm.add_term(ExponentVector(t.param_exps), t.coeff);
      v.add_term(ModuleIndex(t.slot, ExponentVector(t.var_exps)), TrackedScalar::of(pm));
    });
    return v;
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
  std::map<std::string, std::pair<NameKind, int>> scope_;
  NameTable names_;
};

// Appends one expanded term: rational coefficient times a product of
// parameter, variable, and generator factors.
void append_dsl_term(std::ostringstream& out, bool& first, Rational q,
                     const ExponentVector& pe, const std::vector<std::string>& params,
                     const ExponentVector& xe, const std::vector<std::string>& vars,
                     const std::string& gen) {
  bool neg = q.sign() < 0;
  if (neg) q = -q;
  if (first) {
    if (neg) out << '-';
    first = false;
  } else {
    out << (neg ? " - " : " + ");
  }
  std::string mono = monomial_str(pe, params);
  std::string xmono = monomial_str(xe, vars);
  if (!xmono.empty()) {
    if (!mono.empty()) mono += '*';
    mono += xmono;
  }
  if (!gen.empty()) {
    if (!mono.empty()) mono += '*';
    mono += gen;
  }
  if (mono.empty())
    out << q.str();
  else if (q.is_one())
    out << mono;
  else
    out << q.str() << '*' << mono;
}

std::string format_alg_poly(const AlgPoly& p, const NameTable& names) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [xe, c] : p.terms())
    for (const auto& [pe, q] : c.num().terms())
      append_dsl_term(out, first, q, pe, names.params, xe, names.algebra_vars, "");
  return out.str();
}

std::string format_mod_vector(const ModVector& v, const NameTable& names) {
  if (v.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [j, c] : v.terms())
    for (const auto& [pe, q] : c.num().terms())
      append_dsl_term(out, first, q, pe, names.params, j.exps, names.algebra_vars,
                      names.module_gens[static_cast<size_t>(j.slot - 1)]);
  return out.str();
}

void append_name_list(std::ostringstream& out, const std::vector<std::string>& names) {
  for (size_t i = 0; i < names.size(); ++i) out << (i ? ", " : " ") << names[i];
}

}  // namespace

ProblemSpec parse(const std::string& text) { return Parser(text).parse_problem(); }

std::string format(const ProblemSpec& problem) {
  problem.validate();
  std::ostringstream out;
  out << "params";
  append_name_list(out, problem.names.params);
  out << "; algebra";
  append_name_list(out, problem.names.algebra_vars);
  out << " / (";
  for (size_t i = 0; i < problem.algebra_relations.size(); ++i)
    out << (i ? ", " : "") << format_alg_poly(problem.algebra_relations[i], problem.names);
  out << "); module";
  append_name_list(out, problem.names.module_gens);
  out << " / (";
  for (size_t i = 0; i < problem.module_relations.size(); ++i)
    out << (i ? ", " : "") << format_mod_vector(problem.module_relations[i], problem.names);
  out << ");";
  return out.str();
}

ParamPoly parse_param_poly(const std::string& text, const std::vector<std::string>& params) {
  Parser parser(text);
  parser.preload(NameKind::Param, params);
  return parser.parse_param_poly_body();
}

ExponentVector parse_monomial(const std::string& text, const std::vector<std::string>& vars) {
  Parser parser(text);
  parser.preload(NameKind::Var, vars);
  return parser.parse_monomial_body();
}

ModuleIndex parse_module_monomial(const std::string& text, const NameTable& names) {
  Parser parser(text);
  parser.preload(NameKind::Var, names.algebra_vars);
  parser.preload(NameKind::Gen, names.module_gens);
  return parser.parse_module_monomial_body();
}

TrackedScalar parse_scalar(const std::string& text, const std::vector<std::string>& params) {
  Parser parser(text);
  parser.preload(NameKind::Param, params);
  return parser.parse_scalar_body();
}

std::string scalar_str(const TrackedScalar& s, const std::vector<std::string>& params) {
  return "(" + s.num().str(params) + ")/(" + s.den().str(params) + ")";
}

}  // namespace gfl::dsl
