#include "qes/report.hpp"

#include "qes/errors.hpp"

#include <sstream>

namespace qes {

using nlohmann::json;

RunSummary summarize(const std::vector<CaseReport>& cases) {
  RunSummary s;
  s.cases = cases.size();
  for (const auto& c : cases) {
    if (c.status == "budget exceeded") ++s.budget_exceeded;
    else if (c.status == "verification failed") ++s.verification_failed;
    else if (c.verdict == "integrable") ++s.integrable;
    else if (c.verdict == "not integrable") ++s.not_integrable;
    else if (c.verdict == "unconstrained") ++s.unconstrained;
    s.eigenpairs += c.eigenpairs.size();
  }
  return s;
}

int exit_code(const RunSummary& summary) {
  if (summary.verification_failed > 0) return 2;
  if (summary.budget_exceeded > 0) return 3;
  return 0;
}

void to_json(json& j, const EigenvalueReport& r) {
  j = json{{"value", r.value}, {"approx", r.approx}, {"residual_bound", r.residual_bound},
           {"multiplicity", r.multiplicity}};
}

void from_json(const json& j, EigenvalueReport& r) {
  j.at("value").get_to(r.value);
  j.at("approx").get_to(r.approx);
  j.at("residual_bound").get_to(r.residual_bound);
  j.at("multiplicity").get_to(r.multiplicity);
}

void to_json(json& j, const ParameterReport& r) { j = json{{"name", r.name}, {"value", r.value}}; }

void from_json(const json& j, ParameterReport& r) {
  j.at("name").get_to(r.name);
  j.at("value").get_to(r.value);
}

void to_json(json& j, const EigenpairReport& r) {
  j = json{{"lambda", r.lambda},   {"lambda_approx", r.lambda_approx}, {"parameters", r.parameters},
           {"P", r.p},             {"exponent", r.exponent},           {"bound_state", r.bound_state},
           {"exact", r.exact},     {"residual", r.residual}};
}

void from_json(const json& j, EigenpairReport& r) {
  j.at("lambda").get_to(r.lambda);
  j.at("lambda_approx").get_to(r.lambda_approx);
  j.at("parameters").get_to(r.parameters);
  j.at("P").get_to(r.p);
  j.at("exponent").get_to(r.exponent);
  j.at("bound_state").get_to(r.bound_state);
  j.at("exact").get_to(r.exact);
  j.at("residual").get_to(r.residual);
}

void to_json(json& j, const CaseReport& r) {
  j = json{{"sign", r.sign},
           {"s", r.s},
           {"status", r.status},
           {"quantization", r.quantization},
           {"generators", r.generators},
           {"groebner_basis", r.groebner_basis},
           {"verdict", r.verdict},
           {"T", r.t},
           {"param_constraints", r.param_constraints},
           {"eigenvalues", r.eigenvalues},
           {"general_P", r.general_p},
           {"eigenpairs", r.eigenpairs},
           {"notes", r.notes},
           {"error", r.error}};
  if (r.timing_ms) j["timing_ms"] = *r.timing_ms;
}

void from_json(const json& j, CaseReport& r) {
  j.at("sign").get_to(r.sign);
  j.at("s").get_to(r.s);
  j.at("status").get_to(r.status);
  j.at("quantization").get_to(r.quantization);
  j.at("generators").get_to(r.generators);
  j.at("groebner_basis").get_to(r.groebner_basis);
  j.at("verdict").get_to(r.verdict);
  j.at("T").get_to(r.t);
  j.at("param_constraints").get_to(r.param_constraints);
  j.at("eigenvalues").get_to(r.eigenvalues);
  j.at("general_P").get_to(r.general_p);
  j.at("eigenpairs").get_to(r.eigenpairs);
  j.at("notes").get_to(r.notes);
  j.at("error").get_to(r.error);
  if (j.contains("timing_ms")) r.timing_ms = j.at("timing_ms").get<double>();
  else r.timing_ms.reset();
}

void to_json(json& j, const RunSummary& r) {
  j = json{{"cases", r.cases},
           {"integrable", r.integrable},
           {"not_integrable", r.not_integrable},
           {"unconstrained", r.unconstrained},
           {"eigenpairs", r.eigenpairs},
           {"budget_exceeded", r.budget_exceeded},
           {"verification_failed", r.verification_failed}};
}

void from_json(const json& j, RunSummary& r) {
  j.at("cases").get_to(r.cases);
  j.at("integrable").get_to(r.integrable);
  j.at("not_integrable").get_to(r.not_integrable);
  j.at("unconstrained").get_to(r.unconstrained);
  j.at("eigenpairs").get_to(r.eigenpairs);
  j.at("budget_exceeded").get_to(r.budget_exceeded);
  j.at("verification_failed").get_to(r.verification_failed);
}

void to_json(json& j, const ProblemSpec& r) {
  json params = json::array();
  for (const auto& p : r.parameters)
    params.push_back({{"name", p.name}, {"value", p.value ? to_string(*p.value) : std::string("free")}});
  json signs = json::array();
  for (const auto s : r.signs) signs.push_back(std::string(to_string(s)));
  j = json{{"potential", r.potential}, {"parameters", params},       {"s_max", r.s_max},
           {"signs", signs},           {"tolerance", r.tolerance}, {"precision", r.precision}};
}

void from_json(const json& j, ProblemSpec& r) {
  j.at("potential").get_to(r.potential);
  r.parameters.clear();
  for (const auto& p : j.at("parameters")) {
    ParameterBinding b{p.at("name").get<std::string>(), std::nullopt};
    const auto v = p.at("value").get<std::string>();
    if (v != "free") b.value = parse_rational(v);
    r.parameters.push_back(b);
  }
  j.at("s_max").get_to(r.s_max);
  r.signs.clear();
  for (const auto& s : j.at("signs")) r.signs.push_back(parse_branch_sign(s.get<std::string>()));
  j.at("tolerance").get_to(r.tolerance);
  j.at("precision").get_to(r.precision);
}

void to_json(json& j, const RunReport& r) { j = json{{"spec", r.spec}, {"cases", r.cases}, {"summary", r.summary}}; }

void from_json(const json& j, RunReport& r) {
  j.at("spec").get_to(r.spec);
  j.at("cases").get_to(r.cases);
  j.at("summary").get_to(r.summary);
}

std::string render_json(const RunReport& report) { return json(report).dump(2) + "\n"; }

namespace {

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::string pair_summary(const EigenpairReport& p) {
  std::string out = "lambda = " + p.lambda;
  for (const auto& q : p.parameters) out += ", " + q.name + " = " + q.value;
  out += ", P = " + p.p + " (" + p.bound_state + ")";
  return out;
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else out += c;
  }
  return out.empty() ? "-" : out;
}

// Every field of a case, one item per line, behind the given prefix.
void case_details(std::ostream& os, const CaseReport& c, const std::string& prefix) {
  os << prefix << "status: " << c.status << "\n";
  if (!c.quantization.empty()) os << prefix << "quantization: " << c.quantization << "\n";
  for (const auto& g : c.generators) os << prefix << "generator: " << g << "\n";
  for (const auto& g : c.groebner_basis) os << prefix << "basis: " << g << "\n";
  for (const auto& t : c.t) os << prefix << "T: " << t << "\n";
  for (const auto& m : c.param_constraints) os << prefix << "constraint: " << m << "\n";
  for (const auto& e : c.eigenvalues) {
    os << prefix << "eigenvalue: " << e.value;
    if (e.approx != e.value) os << " ~ " << e.approx;
    os << ", residual bound " << e.residual_bound << ", multiplicity " << e.multiplicity << "\n";
  }
  if (!c.general_p.empty()) os << prefix << "P: " << c.general_p << "\n";
  for (const auto& p : c.eigenpairs) {
    os << prefix << "pair: " << pair_summary(p) << "\n";
    if (p.lambda_approx != p.lambda) os << prefix << "  lambda ~ " << p.lambda_approx << "\n";
    os << prefix << "  exponent: " << p.exponent << "\n";
    os << prefix << "  residual (" << (p.exact ? "exact" : "relative") << "): " << p.residual << "\n";
  }
  for (const auto& n : c.notes) os << prefix << "note: " << n << "\n";
  if (!c.error.empty()) os << prefix << "error: " << c.error << "\n";
  if (c.timing_ms) os << prefix << "time: " << *c.timing_ms << " ms\n";
}

}  // namespace

std::string render_markdown(const RunReport& report) {
  std::ostringstream os;
  os << "# Potential V(x) = " << report.spec.potential << "\n\n";
  for (const auto& p : report.spec.parameters)
    os << "- " << p.name << " = " << (p.value ? to_string(*p.value) : std::string("free")) << "\n";
  if (!report.spec.parameters.empty()) os << "\n";
  for (const auto sign : report.spec.signs) {
    const std::string name(to_string(sign));
    os << "## " << name << " branch\n\n";
    os << "| s | verdict | T(s, lambda) | parameter constraints | eigenpairs | notes |\n";
    os << "|---|---|---|---|---|---|\n";
    for (const auto& c : report.cases) {
      if (c.sign != name) continue;
      std::vector<std::string> pairs;
      for (const auto& p : c.eigenpairs) pairs.push_back(pair_summary(p));
      std::vector<std::string> notes = c.notes;
      if (!c.error.empty()) notes.push_back(c.status + ": " + c.error);
      os << "| " << c.s << " | " << md_cell(c.status == "ok" ? c.verdict : c.status) << " | "
         << md_cell(join(c.t, "; ")) << " | " << md_cell(join(c.param_constraints, "; ")) << " | "
         << md_cell(join(pairs, "<br>")) << " | " << md_cell(join(notes, "<br>")) << " |\n";
    }
    os << "\n";
  }
  os << "## Details\n\n";
  for (const auto& c : report.cases) {
    os << "### " << c.sign << ", s = " << c.s << "\n\n";
    case_details(os, c, "- ");
    os << "\n";
  }
  const auto& s = report.summary;
  os << "Summary: " << s.cases << " cases, " << s.integrable << " integrable, " << s.not_integrable
     << " not integrable, " << s.unconstrained << " unconstrained, " << s.eigenpairs << " verified eigenpairs";
  if (s.budget_exceeded) os << ", " << s.budget_exceeded << " over budget";
  if (s.verification_failed) os << ", " << s.verification_failed << " failed verification";
  os << ".\n";
  return os.str();
}


std::string render_table(const RunReport& report) {
  std::ostringstream os;
  os << "potential: " << report.spec.potential << "\n";
  for (const auto& p : report.spec.parameters)
    os << "parameter: " << p.name << " = " << (p.value ? to_string(*p.value) : std::string("free")) << "\n";
  for (const auto& c : report.cases) {
    os << c.sign << " s=" << c.s << ": " << (c.status == "ok" ? c.verdict : c.status) << "\n";
    case_details(os, c, "  ");
  }
  const auto& s = report.summary;
  os << "summary: " << s.cases << " cases, " << s.integrable << " integrable, " << s.not_integrable
     << " not integrable, " << s.unconstrained << " unconstrained, " << s.eigenpairs << " eigenpairs, "
     << s.budget_exceeded << " over budget, " << s.verification_failed << " failed verification\n";
  return os.str();
}

}  // namespace qes
