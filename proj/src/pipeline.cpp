#include "qes/pipeline.hpp"

#include "qes/ansatz.hpp"
#include "qes/errors.hpp"
#include "qes/spectral.hpp"
#include "qes/square_form.hpp"

#include <atomic>
#include <chrono>
#include <thread>

namespace qes {
namespace {

std::string bound_text(const Rational& r) { return r == 0 ? "0" : format_real(to_real(r), 3); }

EigenpairReport describe(const Eigenpair& pair, const XPoly& v, int digits, const Real& tolerance) {
  EigenpairReport r;
  const auto& reg = pair.solution.registry;
  const Value& lam = pair.lambda();
  r.lambda = lam.to_string(digits);
  r.lambda_approx = lam.is_symbolic() ? r.lambda : format_complex(lam.scalar().approx(), digits);
  for (const auto idx : pair.parameters())
    r.parameters.push_back({(*reg)[idx].name, pair.solution.is_free(idx) ? "free" : pair.solution.values[idx].to_string(digits)});
  r.p = polynomial_text(pair.p_coefficients(), reg, digits);
  r.exponent = polynomial_text(exponent_values(v, pair), reg, digits);
  r.bound_state = std::string(to_string(pair.bound_state));
  const auto res = compute_residual(v, pair, tolerance);
  r.exact = res.exact;
  r.residual = res.text;
  return r;
}

}  // namespace

CaseReport run_case(const ProblemSpec& spec, const PreparedProblem& problem, BranchSign sign, unsigned s,
                    const PipelineOptions& options) {
  CaseReport rep;
  rep.sign = std::string(to_string(sign));
  rep.s = s;
  const auto start = std::chrono::steady_clock::now();
  const Real tolerance = spec.tolerance_value();
  const auto& v = problem.potential;

  try {
    if (problem.parity.kind == ParityResult::Kind::NotIntegrable) {
      rep.verdict = std::string(to_string(Verdict::NotIntegrable));
      rep.notes.push_back("potential of odd degree: no Liouvillian solutions");
    } else if (problem.parity.n == 0) {
      rep.verdict = std::string(to_string(Verdict::Unconstrained));
      rep.notes.push_back("constant potential: the equation has constant coefficients and is integrable for every lambda");
    } else {
      const unsigned n = problem.parity.n;
      if (problem.parity.solvable_advisory) rep.notes.push_back("quadratic potential: algebraically solvable");
      const auto sf = shift_by_lambda(complete_square(v, n));
      const MultiPoly qp = quantization_polynomial(sf, s, sign);
      rep.quantization = qp.to_string();
      if (qp.is_constant() && !qp.is_zero()) {
        rep.verdict = std::string(to_string(Verdict::NotIntegrable));
        rep.groebner_basis = {"1"};
        rep.notes.push_back("quantization constraint is a nonzero constant");
      } else {
        const auto ode = auxiliary_ode(sf, sign);
        const auto residual = ansatz_residual(ode, s);
        const QuantizationConstraint qc{sign, s, qp};
        const auto sys = build_system(residual, std::span(&qc, 1), s, n);
        for (const auto& g : sys.generators) rep.generators.push_back(g.to_string());
        const auto gb = buchberger_reduced(sys.generators, MonomialOrder::block_lex(sys.registry), options.budget);
        for (const auto& g : gb.elements()) rep.groebner_basis.push_back(g.to_string());

        SolveOptions solve;
        solve.tolerance = tolerance;
        const auto sr = analyse(gb, v, sign, s, n, solve);
        rep.verdict = std::string(to_string(sr.verdict));
        for (const auto& t : sr.t_polynomials) rep.t.push_back(t.to_string());
        for (const auto& m : sr.param_constraints) rep.param_constraints.push_back(m.to_string());
        for (const auto& e : sr.eigenvalues)
          rep.eigenvalues.push_back({e.value.to_string(spec.precision), format_complex(e.value.approx(), spec.precision),
                                     bound_text(e.residual_bound), e.multiplicity});
        if (sr.general_p) rep.general_p = sr.general_p->to_string();
        for (const auto& pair : sr.eigenpairs) rep.eigenpairs.push_back(describe(pair, v, spec.precision, tolerance));
        rep.notes.insert(rep.notes.end(), sr.notes.begin(), sr.notes.end());
      }
    }
  } catch (const BudgetError& e) {
    rep.status = "budget exceeded";
    rep.error = e.what();
  } catch (const VerificationError& e) {
    rep.status = "verification failed";
    rep.error = e.what();
  }
  if (options.timing)
    rep.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

RunReport run_pipeline(const ProblemSpec& spec, const PipelineOptions& options) {
  const PreparedProblem problem = prepare(spec);
  std::vector<std::pair<BranchSign, unsigned>> work;
  for (const auto sign : {BranchSign::Plus, BranchSign::Minus})
    if (std::find(spec.signs.begin(), spec.signs.end(), sign) != spec.signs.end())
      for (unsigned s = 0; s <= spec.s_max; ++s) work.emplace_back(sign, s);

  std::vector<CaseReport> cases(work.size());
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(work.size())));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < work.size(); ++i)
      cases[i] = run_case(spec, problem, work[i].first, work[i].second, options);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i; (i = next++) < work.size();)
            cases[i] = run_case(spec, problem, work[i].first, work[i].second, options);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  RunReport report{spec, std::move(cases), {}};
  report.summary = summarize(report.cases);
  return report;
}

}  // namespace qes
