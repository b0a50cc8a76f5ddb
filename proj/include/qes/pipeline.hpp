#pragma once

#include "qes/groebner.hpp"
#include "qes/problem.hpp"
#include "qes/report.hpp"

namespace qes {

struct PipelineOptions {
  // Worker threads for independent cases; reports keep (sign, s) order.
  unsigned jobs = 1;
  bool timing = false;
  GroebnerBudget budget;
};

// One (sign, s) case end to end. Budget and verification failures are
// recorded in the report rather than thrown.
CaseReport run_case(const ProblemSpec& spec, const PreparedProblem& problem, BranchSign sign, unsigned s,
                    const PipelineOptions& options = {});

// Every sign in spec.signs (plus first) times s = 0..s_max.
RunReport run_pipeline(const ProblemSpec& spec, const PipelineOptions& options = {});

}  // namespace qes
