#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "gfl/certificate.hpp"
#include "gfl/dsl.hpp"
#include "gfl/engine.hpp"
#include "gfl/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kInputError = 2;
constexpr int kLimit = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) gfl::fail(gfl::Err::Io, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  out << bytes;
  if (!out) gfl::fail(gfl::Err::Io, "cannot write " + path);
}

int exit_code_for(const gfl::Error& e) {
  switch (e.kind()) {
    case gfl::Err::CapExceeded:
      return kLimit;
    case gfl::Err::WrongProblem:
      return kVerificationFailed;
    default:
      return kInputError;
  }
}

std::string default_cert_path(const std::string& input) {
  const std::string ext = ".gfl";
  if (input.size() > ext.size() && input.compare(input.size() - ext.size(), ext.size(), ext) == 0)
    return input.substr(0, input.size() - ext.size()) + ".cert";
  return input + ".cert";
}

gfl::SolveConfig make_config(const std::string& order, long cap, bool cap_set) {
  gfl::SolveConfig cfg;
  cfg.order = (order == "grlex") ? gfl::TermOrder::GrLex : gfl::TermOrder::Lex;
  if (cap_set) cfg.degree_cap = cap;
  return cfg;
}

std::string corner_list_str(const std::vector<gfl::CornerRelation>& relations,
                            const gfl::NameTable& names, bool module_side) {
  if (relations.empty()) return "(none)";
  std::string out;
  for (size_t i = 0; i < relations.size(); ++i) {
    if (i) out += ", ";
    if (module_side) {
      out += module_monomial_str(relations[i].corner, names);
    } else {
      std::string mono = monomial_str(relations[i].corner.exps, names.algebra_vars);
      out += mono.empty() ? "1" : mono;
    }
  }
  return out;
}

void print_summary(const gfl::Certificate& cert) {
  std::cout << "f = " << cert.witness.str(cert.names.params) << "\n";
  int shown = 1;
  for (const auto& r : cert.algebra_corners) shown = std::max(shown, r.corner.total_degree() + 1);
  for (const auto& r : cert.module_corners) shown = std::max(shown, r.corner.total_degree() + 1);
  std::cout << "algebra side: " << cert.algebra_corners.size() << " corner relation(s), "
            << cert.algebra_staircase.count_up_to_degree(shown)
            << " staircase element(s) up to degree " << shown << "\n";
  std::cout << "module side: " << cert.module_corners.size() << " corner relation(s), "
            << cert.module_staircase.count_up_to_degree(shown)
            << " staircase element(s) up to degree " << shown << "\n";
}

int run_solve(const std::string& input, const std::string& output, const std::string& order,
              long cap, bool cap_set) {
  gfl::ProblemSpec problem = gfl::dsl::parse(read_file(input));
  gfl::Certificate cert = gfl::solve(problem, make_config(order, cap, cap_set));
  const std::string target = output.empty() ? default_cert_path(input) : output;
  write_file(target, gfl::serialize(cert));
  print_summary(cert);
  std::cout << "certificate: " << target << "\n";
  return kOk;
}

int run_verify(const std::string& input, const std::string& cert_path, int trials,
               long long seed) {
  gfl::ProblemSpec problem = gfl::dsl::parse(read_file(input));
  gfl::Certificate cert = gfl::deserialize(read_file(cert_path), problem.names);
  gfl::VerifyReport report = gfl::verify(problem, cert, trials, seed);
  std::cout << report.str();
  std::cout << "result: " << (report.passed ? "PASSED" : "FAILED") << "\n";
  return report.passed ? kOk : kVerificationFailed;
}

int run_explain(const std::string& input, const std::string& cert_path, const std::string& order,
                long cap, bool cap_set) {
  gfl::ProblemSpec problem = gfl::dsl::parse(read_file(input));
  gfl::Certificate cert;
  if (cert_path.empty()) {
    cert = gfl::solve(problem, make_config(order, cap, cap_set));
  } else {
    cert = gfl::deserialize(read_file(cert_path), problem.names);
    const std::string expected = gfl::problem_digest(problem);
    if (cert.problem_digest != expected)
      gfl::fail(gfl::Err::WrongProblem, "certificate digest " + cert.problem_digest +
                                            " was not produced from this problem (expected " +
                                            expected + ")");
  }
  std::cout << "f = " << cert.witness.str(cert.names.params) << "\n";
  if (problem.var_count() == 2) {
    std::cout << "algebra staircase (C corner, # removed, . family):\n"
              << cert.algebra_staircase.render_ascii();
    std::cout << "module staircase (C corner, # removed, . family):\n"
              << cert.module_staircase.render_ascii();
  } else {
    std::cout << "algebra corners: " << corner_list_str(cert.algebra_corners, cert.names, false)
              << "\n";
    std::cout << "module corners: " << corner_list_str(cert.module_corners, cert.names, true)
              << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"witnesses and staircase certificates for generic freeness"};
  app.require_subcommand(1);

  std::string input, output, cert_path, order = "lex";
  long cap = 0;
  int trials = 5;
  long long seed = 0;

  CLI::App* cmd_solve = app.add_subcommand("solve", "compute a certificate for a problem file");
  cmd_solve->add_option("input", input, "problem file (.gfl)")->required();
  cmd_solve->add_option("-o,--output", output, "certificate path (default: <input>.cert)");
  cmd_solve->add_option("--order", order, "term order: lex or grlex")
      ->check(CLI::IsMember({"lex", "grlex"}));
  CLI::Option* solve_cap = cmd_solve->add_option("--cap", cap, "completion degree cap");

  CLI::App* cmd_verify = app.add_subcommand("verify", "verify a certificate against its problem");
  cmd_verify->add_option("input", input, "problem file (.gfl)")->required();
  cmd_verify->add_option("certificate", cert_path, "certificate file")->required();
  cmd_verify->add_option("--trials", trials, "number of specialization points (default 5)");
  cmd_verify->add_option("--seed", seed, "sampling seed (default 0)");

  CLI::App* cmd_explain = app.add_subcommand("explain", "render the staircases of a problem");
  cmd_explain->add_option("input", input, "problem file (.gfl)")->required();
  cmd_explain->add_option("--cert", cert_path, "use this certificate instead of solving");
  cmd_explain->add_option("--order", order, "term order: lex or grlex")
      ->check(CLI::IsMember({"lex", "grlex"}));
  CLI::Option* explain_cap = cmd_explain->add_option("--cap", cap, "completion degree cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (cmd_solve->parsed())
      return run_solve(input, output, order, cap, solve_cap->count() > 0);
    if (cmd_verify->parsed()) return run_verify(input, cert_path, trials, seed);
    return run_explain(input, cert_path, order, cap, explain_cap->count() > 0);
  } catch (const gfl::Error& e) {
    std::cerr << "gfl: " << e.what() << "\n";
    return exit_code_for(e);
  }
}
