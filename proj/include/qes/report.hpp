#pragma once

#include "qes/problem.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace qes {

struct EigenvalueReport {
  std::string value;
  std::string approx;
  std::string residual_bound;
  unsigned multiplicity = 1;

  bool operator==(const EigenvalueReport&) const = default;
};

struct ParameterReport {
  std::string name;
  // "free" when unconstrained.
  std::string value;

  bool operator==(const ParameterReport&) const = default;
};

struct EigenpairReport {
  std::string lambda;
  std::string lambda_approx;
  std::vector<ParameterReport> parameters;
  std::string p;
  // psi = P * exp(exponent).
  std::string exponent;
  std::string bound_state;
  bool exact = false;
  std::string residual;

  bool operator==(const EigenpairReport&) const = default;
};

struct CaseReport {
  std::string sign;
  unsigned s = 0;
  // "ok", "budget exceeded", "verification failed".
  std::string status = "ok";
  std::string quantization;
  std::vector<std::string> generators;
  std::vector<std::string> groebner_basis;
  std::string verdict;
  std::vector<std::string> t;
  std::vector<std::string> param_constraints;
  std::vector<EigenvalueReport> eigenvalues;
  std::string general_p;
  std::vector<EigenpairReport> eigenpairs;
  std::vector<std::string> notes;
  std::string error;
  std::optional<double> timing_ms;

  bool operator==(const CaseReport&) const = default;
};

struct RunSummary {
  std::size_t cases = 0;
  std::size_t integrable = 0;
  std::size_t not_integrable = 0;
  std::size_t unconstrained = 0;
  std::size_t eigenpairs = 0;
  std::size_t budget_exceeded = 0;
  std::size_t verification_failed = 0;

  bool operator==(const RunSummary&) const = default;
};

struct RunReport {
  ProblemSpec spec;
  std::vector<CaseReport> cases;
  RunSummary summary;

  bool operator==(const RunReport&) const = default;
};

RunSummary summarize(const std::vector<CaseReport>& cases);
// 0 ok, 2 verification failure, 3 budget exceeded.
int exit_code(const RunSummary& summary);

void to_json(nlohmann::json& j, const EigenvalueReport& r);
void from_json(const nlohmann::json& j, EigenvalueReport& r);
void to_json(nlohmann::json& j, const ParameterReport& r);
void from_json(const nlohmann::json& j, ParameterReport& r);
void to_json(nlohmann::json& j, const EigenpairReport& r);
void from_json(const nlohmann::json& j, EigenpairReport& r);
void to_json(nlohmann::json& j, const CaseReport& r);
void from_json(const nlohmann::json& j, CaseReport& r);
void to_json(nlohmann::json& j, const RunSummary& r);
void from_json(const nlohmann::json& j, RunSummary& r);
void to_json(nlohmann::json& j, const ProblemSpec& r);
void from_json(const nlohmann::json& j, ProblemSpec& r);
void to_json(nlohmann::json& j, const RunReport& r);
void from_json(const nlohmann::json& j, RunReport& r);

std::string render_json(const RunReport& report);
std::string render_markdown(const RunReport& report);
std::string render_table(const RunReport& report);

}  // namespace qes
