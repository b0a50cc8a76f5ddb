#include "qes/ansatz.hpp"
#include "qes/corpus.hpp"
#include "qes/errors.hpp"
#include "qes/pipeline.hpp"
#include "qes/problem.hpp"
#include "qes/report.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using namespace qes;

std::vector<BranchSign> parse_signs(const std::string& text) {
  if (text == "plus") return {BranchSign::Plus};
  if (text == "minus") return {BranchSign::Minus};
  return {BranchSign::Plus, BranchSign::Minus};
}

std::string order_header(const PreparedProblem& problem, unsigned s) {
  std::string out = "lex:";
  bool first = true;
  auto add = [&](const std::string& name) {
    out += (first ? " " : " > ") + name;
    first = false;
  };
  for (unsigned j = s; j-- > 0;) add(unknown_name(j));
  for (const auto& v : problem.registry->variables()) add(v.name);
  return out;
}

int solve(const std::string& file, std::optional<unsigned> s_max, const std::string& sign, const std::string& format,
          unsigned jobs, bool timing) {
  auto spec = parse_problem(file);
  if (s_max) spec.s_max = *s_max;
  if (!sign.empty()) spec.signs = parse_signs(sign);
  PipelineOptions options;
  options.jobs = jobs;
  options.timing = timing;
  options.budget = GroebnerBudget::from_environment();
  const auto report = run_pipeline(spec, options);
  if (format == "json") std::cout << render_json(report);
  else if (format == "md") std::cout << render_markdown(report);
  else std::cout << render_table(report);
  return exit_code(report.summary);
}

int groebner(const std::string& file, unsigned s, const std::string& sign) {
  const auto spec = parse_problem(file);
  const auto problem = prepare(spec);
  PipelineOptions options;
  options.budget = GroebnerBudget::from_environment();
  const auto bs = parse_signs(sign).front();
  const auto rep = run_case(spec, problem, bs, s, options);
  std::cout << order_header(problem, s) << "\n";
  for (const auto& g : rep.groebner_basis) std::cout << g << "\n";
  for (const auto& n : rep.notes) std::cerr << "note: " << n << "\n";
  if (rep.status != "ok") {
    std::cerr << "error: " << rep.status << ": " << rep.error << "\n";
    return rep.status == "budget exceeded" ? 3 : 2;
  }
  return 0;
}

int reproduce(const std::string& table) {
  const auto result = reproduce_corpus(table);
  std::cout << render_corpus(result);
  return result.passed() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasi-exactly-solvable polynomial potentials: exact spectral polynomials and eigenpairs"};
  app.require_subcommand(1);

  auto* solve_cmd = app.add_subcommand("solve", "Run every (sign, s) case of a problem file");
  std::string solve_file, solve_sign, format = "table";
  std::optional<unsigned> s_max;
  unsigned jobs = 1;
  bool timing = false;
  solve_cmd->add_option("file", solve_file, "Problem file")->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("--s-max", s_max, "Largest ansatz degree");
  solve_cmd->add_option("--sign", solve_sign, "Branch sign")->check(CLI::IsMember({"plus", "minus", "both"}));
  solve_cmd->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "md", "table"}));
  solve_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  solve_cmd->add_flag("--timing", timing, "Record per-case wall time");

  auto* gb_cmd = app.add_subcommand("groebner", "Print the reduced Groebner basis of one case");
  std::string gb_file, gb_sign;
  unsigned gb_s = 0;
  gb_cmd->add_option("file", gb_file, "Problem file")->required()->check(CLI::ExistingFile);
  gb_cmd->add_option("--s", gb_s, "Ansatz degree")->required();
  gb_cmd->add_option("--sign", gb_sign, "Branch sign")->required()->check(CLI::IsMember({"plus", "minus"}));

  auto* rep_cmd = app.add_subcommand("reproduce", "Recompute the built-in table corpus");
  std::string table = "all";
  rep_cmd->add_option("--table", table, "table1..table15 or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*solve_cmd) return solve(solve_file, s_max, solve_sign, format, jobs, timing);
    if (*gb_cmd) return groebner(gb_file, gb_s, gb_sign);
    if (*rep_cmd) return reproduce(table);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const BudgetError& e) {
    std::cerr << "error: budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const VerificationError& e) {
    std::cerr << "error: verification failed: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
