#include "qes/corpus.hpp"

#include "qes/errors.hpp"
#include "qes/parser.hpp"
#include "qes/pipeline.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace qes {
namespace corpus {
namespace {

ProblemSpec make(std::string potential, std::vector<ParameterBinding> params, unsigned s_max) {
  ProblemSpec spec;
  spec.potential = std::move(potential);
  spec.parameters = std::move(params);
  spec.s_max = s_max;
  return spec;
}

}  // namespace

ProblemSpec quartic(std::optional<Rational> mu) { return make("x^4+4*x^3+2*x^2-mu*x", {{"mu", mu}}, 5); }

ProblemSpec sextic_first(unsigned s) {
  return make("x^6-(4*J-1)*x^2", {{"J", ratio(static_cast<long>(s) + 2, 2)}}, s);
}

ProblemSpec sextic_second(unsigned s) {
  return make("x^6-(4*J+1)*x^2", {{"J", ratio(static_cast<long>(s) + 1, 2)}}, s);
}

ProblemSpec octic() {
  return make("x^8+(2*delta+4)*x^4+mu*x^3+delta^2+4*delta+4", {{"mu", std::nullopt}, {"delta", std::nullopt}}, 5);
}

ProblemSpec decatic() {
  return make("x^10-x^8+x^6+delta*x^4+epsilon*x^2", {{"delta", std::nullopt}, {"epsilon", std::nullopt}}, 3);
}

ProblemSpec dodecatic() {
  return make("x^12+kappa*x^6+mu*x^5", {{"mu", std::nullopt}, {"kappa", std::nullopt}}, 4);
}

ProblemSpec tetrakaidecatic() {
  return make("(x^7+delta+2)^2+mu*x^6+kappa*x^2",
              {{"mu", std::nullopt}, {"delta", std::nullopt}, {"kappa", std::nullopt}}, 4);
}

ProblemSpec harmonic() { return make("x^2", {}, 10); }

}  // namespace corpus

namespace {

struct ExpectedPair {
  std::string lambda;
  std::vector<std::pair<std::string, std::string>> params;
  std::string p;
};

CaseReport compute(const ProblemSpec& spec, BranchSign sign, unsigned s) {
  PipelineOptions options;
  options.budget = GroebnerBudget::from_environment();
  return run_case(spec, prepare(spec), sign, s, options);
}

std::string label(unsigned s, BranchSign sign) { return "s=" + std::to_string(s) + " " + std::string(to_string(sign)); }

std::string join(const std::vector<std::string>& items, const std::string& sep = "; ") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::string normalized(const std::string& expr, const ProblemSpec& spec) {
  const auto reg = prepare(spec).registry;
  return content_normalize(parse_multipoly(expr, reg)).to_string();
}

std::string case_failure(const CaseReport& rep) {
  if (rep.status != "ok") return rep.status + ": " + rep.error;
  return "";
}

RowResult finish(RowResult row, bool matches, const std::optional<std::string>& printed) {
  if (!matches) {
    row.status = RowStatus::Fail;
    if (printed) row.note = "the table prints " + *printed;
  } else if (printed) {
    row.status = RowStatus::Flag;
    row.note = "the table prints " + *printed + "; recomputation gives the corrected value";
  } else {
    row.status = RowStatus::Pass;
  }
  return row;
}

RowResult t_row(const std::string& table, const ProblemSpec& spec, BranchSign sign, unsigned s,
                const std::string& expected, std::optional<std::string> printed = std::nullopt) {
  const auto rep = compute(spec, sign, s);
  RowResult row{table, label(s, sign), RowStatus::Fail, normalized(expected, spec), join(rep.t), case_failure(rep)};
  const bool ok = rep.status == "ok" && rep.t.size() == 1 && rep.t.front() == row.expected;
  return finish(row, ok, printed);
}

RowResult spectrum_row(const std::string& table, const ProblemSpec& spec, BranchSign sign, unsigned s,
                       const std::vector<std::string>& expected, std::optional<std::string> printed = std::nullopt) {
  const auto rep = compute(spec, sign, s);
  std::vector<std::string> actual;
  for (const auto& e : rep.eigenvalues) actual.push_back(e.value);
  RowResult row{table, label(s, sign), RowStatus::Fail, "{" + join(expected, ", ") + "}", "{" + join(actual, ", ") + "}",
                case_failure(rep)};
  bool ok = rep.status == "ok" && rep.eigenvalues.size() == expected.size();
  for (std::size_t i = 0; ok && i < expected.size(); ++i) {
    const auto& e = rep.eigenvalues[i];
    if (expected[i].find('.') != std::string::npos) {
      // Closed forms in the table are Cardano radicals; compare numerically.
      ok = e.approx.find('I') == std::string::npos &&
           abs(Real(e.approx) - Real(expected[i])) <= Real("1e-25") * (1 + abs(Real(expected[i])));
    } else {
      ok = e.value == expected[i];
    }
  }
  return finish(row, ok, printed);
}

std::string pair_text(const ExpectedPair& p) {
  std::string out = "lambda = " + p.lambda;
  for (const auto& [k, v] : p.params) out += ", " + k + " = " + v;
  return out + ", P = " + p.p;
}

std::string pair_text(const EigenpairReport& p) {
  std::string out = "lambda = " + p.lambda;
  for (const auto& q : p.parameters) out += ", " + q.name + " = " + q.value;
  return out + ", P = " + p.p;
}

bool pair_matches(const ExpectedPair& e, const EigenpairReport& a) {
  if (e.lambda != a.lambda || e.p != a.p) return false;
  if (!a.exact || a.residual != "0") return false;
  for (const auto& [k, v] : e.params) {
    const auto it = std::find_if(a.parameters.begin(), a.parameters.end(), [&](const auto& q) { return q.name == k; });
    if (it == a.parameters.end() || it->value != v) return false;
  }
  return true;
}

RowResult pairs_row(const std::string& table, const ProblemSpec& spec, BranchSign sign, unsigned s,
                    const std::vector<ExpectedPair>& expected) {
  const auto rep = compute(spec, sign, s);
  std::vector<std::string> exp_text, act_text;
  for (const auto& e : expected) exp_text.push_back(pair_text(e));
  for (const auto& a : rep.eigenpairs) act_text.push_back(pair_text(a));
  RowResult row{table, label(s, sign), RowStatus::Fail, join(exp_text), join(act_text), case_failure(rep)};
  bool ok = rep.status == "ok" && rep.verdict == "integrable" && rep.eigenpairs.size() == expected.size();
  for (const auto& e : expected)
    ok = ok && std::any_of(rep.eigenpairs.begin(), rep.eigenpairs.end(), [&](const auto& a) { return pair_matches(e, a); });
  return finish(row, ok, std::nullopt);
}

RowResult not_integrable_row(const std::string& table, const ProblemSpec& spec, BranchSign sign, unsigned s) {
  const auto rep = compute(spec, sign, s);
  RowResult row{table, label(s, sign), RowStatus::Fail, "not integrable, basis {1}",
                rep.verdict + ", basis {" + join(rep.groebner_basis, ", ") + "}", case_failure(rep)};
  const bool ok = rep.status == "ok" && rep.verdict == "not integrable" && rep.groebner_basis == std::vector<std::string>{"1"};
  return finish(row, ok, std::nullopt);
}

RowResult elimination_row(const std::string& table, const ProblemSpec& spec, BranchSign sign, unsigned s,
                          const std::vector<std::string>& expected) {
  const auto rep = compute(spec, sign, s);
  std::vector<std::string> exp;
  for (const auto& e : expected) exp.push_back(normalized(e, spec));
  std::vector<std::string> act = rep.param_constraints;
  act.insert(act.end(), rep.t.begin(), rep.t.end());
  std::sort(exp.begin(), exp.end());
  std::sort(act.begin(), act.end());
  RowResult row{table, label(s, sign), RowStatus::Fail, join(exp), join(act), case_failure(rep)};
  return finish(row, rep.status == "ok" && exp == act, std::nullopt);
}

RowResult general_p_row(const std::string& table, const ProblemSpec& spec, BranchSign sign, unsigned s,
                        const std::string& expected) {
  const auto rep = compute(spec, sign, s);
  const std::string exp = parse_xpoly(expected, prepare(spec).registry).to_string();
  RowResult row{table, label(s, sign), RowStatus::Fail, exp, rep.general_p, case_failure(rep)};
  return finish(row, rep.status == "ok" && rep.general_p == exp, std::nullopt);
}

// Minus-branch pairs with real parameters are bound; plus-branch pairs never are.
RowResult bound_row(const std::string& table, const ProblemSpec& spec, BranchSign sign, unsigned s) {
  const auto rep = compute(spec, sign, s);
  std::vector<std::string> states;
  bool ok = rep.status == "ok" && !rep.eigenpairs.empty();
  bool any_bound = false;
  for (const auto& p : rep.eigenpairs) {
    states.push_back(p.bound_state);
    if (sign == BranchSign::Plus) ok = ok && p.bound_state == "not bound";
    else ok = ok && p.bound_state != "not bound";
    any_bound = any_bound || p.bound_state == "bound";
  }
  if (sign == BranchSign::Minus) ok = ok && any_bound;
  RowResult row{table, label(s, sign) + " bound states", RowStatus::Fail,
                sign == BranchSign::Plus ? "not bound" : "bound (indeterminate for complex parameters)", join(states, ", "),
                case_failure(rep)};
  return finish(row, ok, std::nullopt);
}

using TableFn = std::function<std::vector<RowResult>()>;

const std::map<std::string, TableFn>& tables() {
  static const std::map<std::string, TableFn> t = {
      {"table1",
       [] {
         const std::vector<std::string> ts = {
             "lambda+3",
             "lambda^2+10*lambda+17",
             "lambda^3+21*lambda^2+115*lambda+135",
             "lambda^4+36*lambda^3+406*lambda^2+1572*lambda+1521",
             "lambda^5+55*lambda^4+1050*lambda^3+8366*lambda^2+26613*lambda+27659",
             "lambda^6+78*lambda^5+2255*lambda^4+30276*lambda^3+196015*lambda^2+596046*lambda+777825"};
         std::vector<RowResult> rows;
         for (unsigned s = 0; s <= 5; ++s)
           rows.push_back(t_row("table1", corpus::quartic(Rational(2 - 2 * static_cast<long>(s))), BranchSign::Plus, s,
                                ts[s], s == 0 ? std::optional<std::string>("lambda - 1") : std::nullopt));
         return rows;
       }},
      {"table2",
       [] {
         const std::vector<std::string> ts = {
             "lambda-1",
             "lambda^2-6*lambda+1",
             "lambda^3-15*lambda^2+43*lambda+51",
             "lambda^4-28*lambda^3+214*lambda^2-156*lambda-1615",
             "lambda^5-45*lambda^4+650*lambda^3-2634*lambda^2-8027*lambda+41799",
             "lambda^6-66*lambda^5+1535*lambda^4-13404*lambda^3+3343*lambda^2+428670*lambda-984879"};
         std::vector<RowResult> rows;
         for (unsigned s = 0; s <= 5; ++s)
           rows.push_back(t_row("table2", corpus::quartic(Rational(6 + 2 * static_cast<long>(s))), BranchSign::Minus, s, ts[s]));
         return rows;
       }},
      {"table3",
       [] {
         return std::vector<RowResult>{
             spectrum_row("table3", corpus::quartic(Rational(2)), BranchSign::Plus, 0, {"-3"}, "{1}"),
             spectrum_row("table3", corpus::quartic(Rational(0)), BranchSign::Plus, 1, {"-5 - 2*sqrt(2)", "-5 + 2*sqrt(2)"}),
             spectrum_row("table3", corpus::quartic(Rational(-2)), BranchSign::Plus, 2,
                          {"-12.8919904044561205363507706735459", "-6.49599922965497554805066368767868",
                           "-1.61201036588890391559856563877462"})};
       }},
      {"table4",
       [] {
         return std::vector<RowResult>{
             spectrum_row("table4", corpus::quartic(Rational(6)), BranchSign::Minus, 0, {"1"}),
             spectrum_row("table4", corpus::quartic(Rational(8)), BranchSign::Minus, 1, {"3 - 2*sqrt(2)", "3 + 2*sqrt(2)"}),
             spectrum_row("table4", corpus::quartic(Rational(10)), BranchSign::Minus, 2,
                          {"-0.891990404456120536350770673546697", "5.50400077034502445194933631232132",
                           "10.3879896341110960844014343612254"})};
       }},
      {"table5",
       [] {
         const auto m = BranchSign::Minus;
         return std::vector<RowResult>{
             t_row("table5", corpus::sextic_first(0), m, 0, "lambda"),
             t_row("table5", corpus::sextic_first(2), m, 2, "lambda^2-8"),
             t_row("table5", corpus::sextic_first(4), m, 4, "lambda^3-64*lambda"),
             t_row("table5", corpus::sextic_first(6), m, 6, "lambda^4-240*lambda^2+2880", "lambda^4 - 240*lambda^2 + 880"),
             t_row("table5", corpus::sextic_first(8), m, 8, "lambda^5-640*lambda^3+47104*lambda"),
             t_row("table5", corpus::sextic_first(10), m, 10, "lambda^6-1400*lambda^4+331456*lambda^2+5184000")};
       }},
      {"table6",
       [] {
         const auto m = BranchSign::Minus;
         return std::vector<RowResult>{
             pairs_row("table6", corpus::sextic_first(0), m, 0, {{"0", {}, "1"}}),
             pairs_row("table6", corpus::sextic_first(2), m, 2,
                       {{"-2*sqrt(2)", {}, "x^2 + 1/2*sqrt(2)"}, {"2*sqrt(2)", {}, "x^2 - 1/2*sqrt(2)"}}),
             pairs_row("table6", corpus::sextic_first(4), m, 4,
                       {{"0", {}, "x^4 - 3/2"}, {"-8", {}, "x^4 + 2*x^2 + 1/2"}, {"8", {}, "x^4 - 2*x^2 + 1/2"}})};
       }},
      {"table7",
       [] {
         const auto m = BranchSign::Minus;
         return std::vector<RowResult>{
             t_row("table7", corpus::sextic_second(1), m, 1, "lambda"),
             t_row("table7", corpus::sextic_second(3), m, 3, "lambda^2-24"),
             t_row("table7", corpus::sextic_second(5), m, 5, "lambda^3-128*lambda"),
             t_row("table7", corpus::sextic_second(7), m, 7, "lambda^4-400*lambda^2+12096"),
             t_row("table7", corpus::sextic_second(9), m, 9, "lambda^5-960*lambda^3+129024*lambda")};
       }},
      {"table8",
       [] {
         const auto m = BranchSign::Minus;
         return std::vector<RowResult>{
             pairs_row("table8", corpus::sextic_second(1), m, 1, {{"0", {}, "x"}}),
             pairs_row("table8", corpus::sextic_second(3), m, 3,
                       {{"-2*sqrt(6)", {}, "x^3 + 1/2*sqrt(6)*x"}, {"2*sqrt(6)", {}, "x^3 - 1/2*sqrt(6)*x"}}),
             pairs_row("table8", corpus::sextic_second(5), m, 5,
                       {{"0", {}, "x^5 - 5/2*x"},
                        {"-8*sqrt(2)", {}, "x^5 + 2*sqrt(2)*x^3 + 3/2*x"},
                        {"8*sqrt(2)", {}, "x^5 - 2*sqrt(2)*x^3 + 3/2*x"}})};
       }},
      {"table9",
       [] {
         const auto p = BranchSign::Plus;
         const auto spec = corpus::octic();
         std::vector<RowResult> rows{
             pairs_row("table9", spec, p, 0, {{"0", {{"mu", "4"}, {"delta", "free"}}, "1"}}),
             pairs_row("table9", spec, p, 1, {{"0", {{"mu", "6"}, {"delta", "-2"}}, "x"}})};
         for (unsigned s = 2; s <= 4; ++s) rows.push_back(not_integrable_row("table9", spec, p, s));
         rows.push_back(pairs_row("table9", spec, p, 5, {{"0", {{"mu", "14"}, {"delta", "-2"}}, "x^5 + 2"}}));
         return rows;
       }},
      {"table10",
       [] {
         const auto m = BranchSign::Minus;
         const auto spec = corpus::octic();
         std::vector<RowResult> rows{
             pairs_row("table10", spec, m, 0, {{"0", {{"mu", "-4"}, {"delta", "free"}}, "1"}}),
             pairs_row("table10", spec, m, 1, {{"0", {{"mu", "-6"}, {"delta", "-2"}}, "x"}})};
         for (unsigned s = 2; s <= 4; ++s) rows.push_back(not_integrable_row("table10", spec, m, s));
         rows.push_back(pairs_row("table10", spec, m, 5, {{"0", {{"mu", "-14"}, {"delta", "-2"}}, "x^5 - 2"}}));
         return rows;
       }},
      {"table11",
       [] {
         const auto p = BranchSign::Plus;
         const auto spec = corpus::decatic();
         std::vector<RowResult> rows{
             elimination_row("table11", spec, p, 0, {"8*delta-37", "-epsilon-87/64", "lambda+3/8"}),
             elimination_row("table11", spec, p, 1, {"8*delta-53", "64*epsilon+151", "lambda+9/8"}),
             elimination_row("table11", spec, p, 2,
                             {"8*delta-69", "262144*epsilon^3+2117632*epsilon^2+6925504*epsilon+17694023",
                              "lambda-(-4096*epsilon^2-19328*epsilon-49425)/16384"}),
             elimination_row("table11", spec, p, 3,
                             {"8*delta-85", "262144*epsilon^3+2904064*epsilon^2+11947200*epsilon+43776519",
                              "lambda-(-4096*epsilon^2-27520*epsilon-85137)/16384"})};
         for (unsigned s = 0; s <= 3; ++s) rows.push_back(bound_row("table11", spec, p, s));
         return rows;
       }},
      {"table12",
       [] {
         const auto m = BranchSign::Minus;
         const auto spec = corpus::decatic();
         std::vector<RowResult> rows{
             elimination_row("table12", spec, m, 0, {"8*delta+43", "-epsilon+105/64", "lambda-3/8"}),
             elimination_row("table12", spec, m, 1, {"8*delta+59", "64*epsilon-169", "lambda-9/8"}),
             elimination_row("table12", spec, m, 2,
                             {"8*delta+75", "262144*epsilon^3-2338816*epsilon^2+8178880*epsilon-3037945",
                              "lambda-(4096*epsilon^2-21632*epsilon+55185)/16384"}),
             elimination_row("table12", spec, m, 3,
                             {"8*delta+91", "262144*epsilon^3-3125248*epsilon^2+13642944*epsilon+2959431",
                              "lambda-(4096*epsilon^2-29824*epsilon+93201)/16384"})};
         for (unsigned s = 0; s <= 3; ++s) rows.push_back(bound_row("table12", spec, m, s));
         return rows;
       }},
      {"table13",
       [] {
         const auto spec = corpus::decatic();
         const std::vector<std::string> plus = {"1", "x", "x^2-(64*epsilon+215)/256", "x^3-(64*epsilon+279)/256*x"};
         const std::vector<std::string> minus = {"1", "x", "x^2+(64*epsilon-233)/256", "x^3+(64*epsilon-297)/256*x"};
         std::vector<RowResult> rows;
         for (unsigned s = 0; s <= 3; ++s) {
           rows.push_back(general_p_row("table13", spec, BranchSign::Plus, s, plus[s]));
           rows.push_back(general_p_row("table13", spec, BranchSign::Minus, s, minus[s]));
         }
         return rows;
       }},
      {"table14",
       [] {
         const auto spec = corpus::dodecatic();
         std::vector<RowResult> rows;
         for (const auto sign : {BranchSign::Plus, BranchSign::Minus}) {
           const std::string sg = sign == BranchSign::Plus ? "" : "-";
           rows.push_back(pairs_row("table14", spec, sign, 0, {{"-1/4*kappa^2", {{"mu", sg + "6"}, {"kappa", "free"}}, "1"}}));
           rows.push_back(pairs_row("table14", spec, sign, 1, {{"0", {{"mu", sg + "8"}, {"kappa", "0"}}, "x"}}));
           for (unsigned s = 2; s <= 4; ++s) rows.push_back(not_integrable_row("table14", spec, sign, s));
         }
         return rows;
       }},
      {"table15",
       [] {
         const auto spec = corpus::tetrakaidecatic();
         std::vector<RowResult> rows;
         for (const auto sign : {BranchSign::Plus, BranchSign::Minus}) {
           const std::string sg = sign == BranchSign::Plus ? "" : "-";
           rows.push_back(pairs_row("table15", spec, sign, 0,
                                    {{"0", {{"mu", sg + "7"}, {"delta", "free"}, {"kappa", "0"}}, "1"}}));
           rows.push_back(pairs_row("table15", spec, sign, 1,
                                    {{"0", {{"mu", sg + "9"}, {"delta", "-2"}, {"kappa", "0"}}, "x"}}));
           for (unsigned s = 2; s <= 4; ++s) rows.push_back(not_integrable_row("table15", spec, sign, s));
         }
         return rows;
       }},
  };
  return t;
}

}  // namespace

std::string_view to_string(RowStatus s) {
  switch (s) {
    case RowStatus::Pass:
      return "PASS";
    case RowStatus::Flag:
      return "FLAG";
    case RowStatus::Fail:
      return "FAIL";
  }
  return "";
}

bool CorpusResult::passed() const {
  return std::none_of(rows.begin(), rows.end(), [](const RowResult& r) { return r.status == RowStatus::Fail; });
}

std::vector<std::string> corpus_tables() {
  std::vector<std::string> out;
  for (int i = 1; i <= 15; ++i) out.push_back("table" + std::to_string(i));
  return out;
}

CorpusResult reproduce_corpus(std::string_view table_id) {
  std::string id(table_id);
  if (!id.empty() && std::all_of(id.begin(), id.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    id = "table" + id;
  CorpusResult result;
  if (id == "all") {
    for (const auto& name : corpus_tables()) {
      auto rows = tables().at(name)();
      result.rows.insert(result.rows.end(), rows.begin(), rows.end());
    }
    return result;
  }
  const auto it = tables().find(id);
  if (it == tables().end()) throw UsageError("unknown table '" + std::string(table_id) + "' (expected table1..table15 or all)");
  result.rows = it->second();
  return result;
}

std::string render_corpus(const CorpusResult& result) {
  std::ostringstream os;
  std::size_t pass = 0, flag = 0, fail = 0;
  for (const auto& r : result.rows) {
    os << r.table << " " << r.label << ": " << to_string(r.status);
    if (r.status != RowStatus::Pass) {
      os << "\n  expected: " << r.expected << "\n  actual:   " << r.actual;
      if (!r.note.empty()) os << "\n  note:     " << r.note;
    }
    os << "\n";
    if (r.status == RowStatus::Pass) ++pass;
    else if (r.status == RowStatus::Flag) ++flag;
    else ++fail;
  }
  os << result.rows.size() << " rows: " << pass << " pass, " << flag << " flagged, " << fail << " failed\n";
  return os.str();
}

}  // namespace qes
