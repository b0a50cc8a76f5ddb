#include "qes/spectral.hpp"

#include "qes/ansatz.hpp"
#include "qes/errors.hpp"
#include "qes/square_form.hpp"

#include <algorithm>

namespace qes {
namespace {

const Real kZeroRelative("1e-50");
const Real kVanishRelative("1e-40");

using ScalarPoly = std::vector<Scalar>;

struct Partial {
  std::vector<std::optional<Value>> values;
  bool numeric = false;
};

void add_note(std::vector<std::string>* notes, const std::string& note) {
  if (notes && std::find(notes->begin(), notes->end(), note) == notes->end()) notes->push_back(note);
}

std::vector<Scalar> scalar_values(const Partial& p) {
  std::vector<Scalar> out(p.values.size());
  for (std::size_t i = 0; i < p.values.size(); ++i)
    if (p.values[i]) out[i] = p.values[i]->scalar();
  return out;
}

Scalar eval_scalar(const MultiPoly& f, const std::vector<Scalar>& vals) {
  return evaluate<Scalar>(f, std::span<const Scalar>(vals));
}

// Sum over terms of |coeff| * prod |value|^e.
Real magnitude(const MultiPoly& f, const std::vector<Scalar>& vals) {
  Real total(0);
  for (const auto& t : f.terms()) {
    Real term = abs(to_real(t.coeff));
    for (std::size_t i = 0; i < t.monomial.size(); ++i)
      for (std::uint32_t k = 0; k < t.monomial[i]; ++k) term *= abs(vals[i].approx());
    total += term;
  }
  return total;
}

bool is_free_value(const Value& value, const RegistryPtr& reg, std::size_t var) {
  return value.is_symbolic() && value.symbolic() == MultiPoly::variable(reg, var);
}

MultiPoly substitute_known(MultiPoly f, const Partial& p, const RegistryPtr& reg) {
  for (std::size_t u = 0; u < p.values.size(); ++u) {
    if (!p.values[u] || !f.depends_on(u) || is_free_value(*p.values[u], reg, u)) continue;
    f = f.substitute(u, p.values[u]->symbolic());
  }
  return f;
}

// Scalar coefficients of f in var, near-zero numeric entries set to exact zero
// and the top trimmed.
ScalarPoly scalar_coefficients(const MultiPoly& f, std::size_t var, const std::vector<Scalar>& vals) {
  ScalarPoly out;
  for (const auto& c : f.coefficients_in(var)) {
    Scalar v = eval_scalar(c, vals);
    if (!v.is_exact() && v.is_zero(kZeroRelative * magnitude(c, vals))) v = Scalar(Rational(0));
    out.push_back(v);
  }
  while (!out.empty() && out.back().is_exact() && out.back().exact()->is_zero()) out.pop_back();
  return out;
}

// f vanishes at the assignment; every variable of f must be assigned.
bool vanishes(const MultiPoly& f, const Partial& p, const RegistryPtr& reg) {
  if (!p.numeric) return substitute_known(f, p, reg).is_zero();
  const auto vals = scalar_values(p);
  const Scalar v = eval_scalar(f, vals);
  return v.is_zero(kVanishRelative * magnitude(f, vals));
}

// Converts a symbolic branch to the numeric domain. Fails when a value still
// depends on a free variable.
bool make_numeric(Partial& p) {
  if (p.numeric) return true;
  for (auto& v : p.values) {
    if (!v || !v->is_symbolic()) continue;
    const auto q = v->rational();
    if (!q) return false;
    v = Value(Scalar(*q));
  }
  p.numeric = true;
  return true;
}

std::vector<Scalar> numeric_roots(const ScalarPoly& c, const Real& tolerance) {
  bool rational = true;
  for (const auto& x : c) rational = rational && x.is_rational();
  std::vector<Scalar> out;
  if (rational) {
    UPoly u;
    for (const auto& x : c) u.push_back(x.exact()->a());
    for (const auto& e : roots(u, tolerance)) out.push_back(e.value);
    return out;
  }
  std::vector<Complex> cc;
  for (const auto& x : c) cc.push_back(x.approx());
  for (const auto& z : aberth(cc)) {
    bool dup = false;
    for (const auto& o : out)
      if (abs(o.approx() - z) <= Real("1e-30") * (1 + abs(z))) dup = true;
    if (!dup) out.push_back(Scalar::numeric(z));
  }
  return out;
}

ScalarPoly sp_mul(const ScalarPoly& a, const ScalarPoly& b) {
  if (a.empty() || b.empty()) return {};
  ScalarPoly out(a.size() + b.size() - 1, Scalar(Rational(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
  return out;
}

ScalarPoly sp_add(const ScalarPoly& a, const ScalarPoly& b) {
  ScalarPoly out(std::max(a.size(), b.size()), Scalar(Rational(0)));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = out[i] + a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = out[i] + b[i];
  return out;
}

ScalarPoly sp_derivative(const ScalarPoly& a) {
  ScalarPoly out;
  for (std::size_t k = 1; k < a.size(); ++k) out.push_back(a[k] * Scalar(Rational(static_cast<long>(k))));
  return out;
}

Complex sp_eval(const ScalarPoly& a, const Complex& x) {
  Complex acc(0);
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + it->approx();
  return acc;
}

ScalarPoly sp_from(const XPoly& p, const std::vector<Scalar>& vals) {
  ScalarPoly out;
  for (const auto& c : p.coefficients()) out.push_back(eval_scalar(c, vals));
  return out;
}

std::string coefficient_prefix(const Value& c, int digits, bool constant_term) {
  const auto q = c.rational();
  if (constant_term) return c.to_string(digits);
  if (q) {
    if (*q == 1) return "";
    if (*q == -1) return "-";
    return to_string(*q) + "*";
  }
  if (!c.is_symbolic() && c.scalar().is_exact() && c.scalar().exact()->a() == 0) return c.to_string(digits) + "*";
  if (!c.is_symbolic() && !c.scalar().is_exact() && c.scalar().approx().imag() == 0)
    return format_real(c.scalar().approx().real(), digits) + "*";
  return "(" + c.to_string(digits) + ")*";
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Integrable:
      return "integrable";
    case Verdict::NotIntegrable:
      return "not integrable";
    case Verdict::Unconstrained:
      return "unconstrained";
  }
  return "";
}

Verdict parse_verdict(std::string_view text) {
  if (text == "integrable") return Verdict::Integrable;
  if (text == "not integrable") return Verdict::NotIntegrable;
  if (text == "unconstrained") return Verdict::Unconstrained;
  throw UsageError("unknown verdict '" + std::string(text) + "'");
}

std::string_view to_string(BoundState b) {
  switch (b) {
    case BoundState::Bound:
      return "bound";
    case BoundState::NotBound:
      return "not bound";
    case BoundState::Indeterminate:
      return "indeterminate";
  }
  return "";
}

const MultiPoly& Value::symbolic() const {
  if (!is_symbolic()) throw PreconditionError("value is numeric");
  return std::get<MultiPoly>(v_);
}

const Scalar& Value::scalar() const {
  if (is_symbolic()) throw PreconditionError("value is symbolic");
  return std::get<Scalar>(v_);
}

std::optional<Rational> Value::rational() const {
  if (is_symbolic()) return symbolic().constant_value();
  const auto& s = scalar();
  if (s.is_rational()) return s.exact()->a();
  return std::nullopt;
}

bool Value::is_real() const { return is_symbolic() || scalar().is_real(); }

std::string Value::to_string(int digits) const {
  if (is_symbolic()) return symbolic().to_string();
  return scalar().to_string(digits);
}

bool Solution::is_numeric() const { return !values.empty() && !values.front().is_symbolic(); }

bool Solution::is_free(std::size_t var) const { return is_free_value(values.at(var), registry, var); }

const Value& Eigenpair::lambda() const {
  const auto idx = solution.registry->eigenvalue();
  if (!idx) throw PreconditionError("registry has no eigenvalue variable");
  return solution.values[*idx];
}

std::vector<Value> Eigenpair::p_coefficients() const {
  std::vector<Value> out;
  for (unsigned j = 0; j < s; ++j) out.push_back(solution.values[solution.registry->index_of(unknown_name(j))]);
  if (solution.is_numeric()) out.emplace_back(Scalar(Rational(1)));
  else out.emplace_back(MultiPoly::constant(solution.registry, 1));
  return out;
}

std::vector<std::size_t> Eigenpair::parameters() const { return solution.registry->indices_in(Block::Parameter); }

SpectralResult spectral_extract(const GroebnerBasis& g, unsigned s, const SolveOptions& options) {
  SpectralResult res;
  const auto& reg = g.order().registry();
  if (g.is_unit()) {
    res.verdict = Verdict::NotIntegrable;
    return res;
  }
  const Block keep[] = {Block::Eigenvalue, Block::Parameter};
  const auto elim = eliminate(g, keep);
  const auto lam = reg->eigenvalue();
  for (const auto& e : elim) {
    if (lam && e.depends_on(*lam)) res.t_polynomials.push_back(e);
    else res.param_constraints.push_back(e);
  }
  res.verdict = elim.empty() ? Verdict::Unconstrained : Verdict::Integrable;

  if (lam && res.t_polynomials.size() == 1) {
    const auto& t = res.t_polynomials.front();
    bool univariate = true;
    for (std::size_t v = 0; v < reg->size(); ++v)
      if (v != *lam && t.depends_on(v)) univariate = false;
    if (univariate) res.eigenvalues = roots(t, *lam, options.tolerance);
  }

  // General P: each unknown pinned by an element linear in it.
  std::vector<Variable> base_vars;
  for (const auto& v : reg->variables())
    if (v.block != Block::Ansatz) base_vars.push_back(v);
  const auto base = make_registry(base_vars);
  std::vector<MultiPoly> coeffs;
  bool complete = true;
  for (unsigned j = 0; j < s && complete; ++j) {
    const auto idx = reg->index_of(unknown_name(j));
    std::optional<MultiPoly> value;
    for (const auto& e : g.elements()) {
      if (e.leading_variable() != idx || e.degree_in(idx) != 1) continue;
      const auto c = e.coefficients_in(idx);
      bool tail_ok = true;
      for (const auto a : reg->indices_in(Block::Ansatz))
        if (c[0].depends_on(a)) tail_ok = false;
      if (!c[1].is_constant() || !tail_ok) continue;
      value = (-c[0] * (Rational(1) / *c[1].constant_value())).embed(base);
      break;
    }
    if (value) coeffs.push_back(*value);
    else complete = false;
  }
  if (complete) {
    coeffs.push_back(MultiPoly::constant(base, 1));
    res.general_p = XPoly(base, std::move(coeffs));
  }
  return res;
}

std::vector<Solution> solve_triangular(const GroebnerBasis& g, const std::vector<std::optional<Value>>& fixed,
                                       const SolveOptions& options, std::vector<std::string>* notes) {
  const auto& order = g.order();
  if (!order.is_identity()) throw PreconditionError("triangular solving needs the registry lex order");
  const auto& reg = order.registry();
  const std::size_t nvars = reg->size();
  if (fixed.size() != nvars) throw PreconditionError("assignment size does not match the registry");
  if (g.is_unit()) return {};

  Partial start;
  start.values = fixed;
  bool wants_numeric = false;
  for (const auto& v : fixed)
    if (v && !v->rational() && !v->is_symbolic()) wants_numeric = true;
  if (wants_numeric) {
    if (!make_numeric(start)) throw PreconditionError("numeric assignment mixed with symbolic values");
  } else {
    for (auto& v : start.values)
      if (v && !v->is_symbolic()) v = Value(MultiPoly::constant(reg, *v->rational()));
  }

  std::vector<std::vector<const MultiPoly*>> by_var(nvars);
  for (const auto& e : g.elements())
    if (const auto lv = e.leading_variable()) by_var[*lv].push_back(&e);

  std::vector<Partial> partials{start};
  for (std::size_t v = nvars; v-- > 0;) {
    const auto& cands = by_var[v];
    std::vector<Partial> next;
    for (auto& p : partials) {
      if (p.values[v]) {
        bool ok = true;
        for (const auto* c : cands) ok = ok && vanishes(*c, p, reg);
        if (ok) next.push_back(std::move(p));
        continue;
      }

      std::vector<Value> choices;
      if (!p.numeric) {
        std::vector<MultiPoly> subs;
        bool dead = false;
        for (const auto* c : cands) {
          MultiPoly sub = substitute_known(*c, p, reg);
          if (sub.is_zero()) continue;
          if (sub.degree_in(v) == 0) {
            if (!sub.is_constant())
              add_note(notes, "a basis element constrains a variable taken as free; branch dropped");
            dead = true;
            break;
          }
          subs.push_back(std::move(sub));
        }
        if (dead) continue;
        if (subs.empty()) {
          p.values[v] = Value(MultiPoly::variable(reg, v));
          next.push_back(std::move(p));
          continue;
        }
        const auto best = std::min_element(subs.begin(), subs.end(), [&](const MultiPoly& a, const MultiPoly& b) {
          return a.degree_in(v) < b.degree_in(v);
        });
        const auto coeffs = best->coefficients_in(v);
        const std::size_t d = coeffs.size() - 1;
        bool all_constant = true;
        for (const auto& c : coeffs) all_constant = all_constant && c.is_constant();
        if (all_constant) {
          UPoly u;
          for (const auto& c : coeffs) u.push_back(c.constant_value().value_or(Rational(0)));
          for (const auto& e : roots(u, options.tolerance)) {
            if (e.value.is_rational()) choices.emplace_back(MultiPoly::constant(reg, e.value.exact()->a()));
            else choices.emplace_back(e.value);
          }
        } else if (d == 1 && coeffs[1].is_constant()) {
          choices.emplace_back(-coeffs[0] * (Rational(1) / *coeffs[1].constant_value()));
        } else {
          add_note(notes, "variable " + (*reg)[v].name +
                              " is not isolated over the free parameters; those branches are reported through T only");
          continue;
        }
      } else {
        const auto vals = scalar_values(p);
        std::vector<ScalarPoly> polys;
        bool dead = false;
        for (const auto* c : cands) {
          ScalarPoly sp = scalar_coefficients(*c, v, vals);
          if (sp.empty()) continue;
          if (sp.size() == 1) {
            dead = true;
            break;
          }
          polys.push_back(std::move(sp));
        }
        if (dead) continue;
        if (polys.empty()) {
          add_note(notes, "variable " + (*reg)[v].name + " is free on a numeric branch; branch dropped");
          continue;
        }
        const auto best = std::min_element(polys.begin(), polys.end(),
                                           [](const ScalarPoly& a, const ScalarPoly& b) { return a.size() < b.size(); });
        if (best->size() == 2) choices.emplace_back(-(*best)[0] / (*best)[1]);
        else
          for (const auto& r : numeric_roots(*best, options.tolerance)) choices.emplace_back(r);
      }

      for (const auto& choice : choices) {
        Partial q = p;
        if (!choice.is_symbolic() && !choice.rational()) {
          if (!make_numeric(q)) {
            add_note(notes, "an irrational value depends on free parameters; branch reported through T only");
            continue;
          }
        }
        if (q.numeric && choice.is_symbolic()) q.values[v] = Value(Scalar(*choice.rational()));
        else if (!q.numeric && !choice.is_symbolic()) q.values[v] = Value(MultiPoly::constant(reg, *choice.rational()));
        else q.values[v] = choice;
        bool ok = true;
        for (const auto* c : cands) ok = ok && vanishes(*c, q, reg);
        if (ok) next.push_back(std::move(q));
      }
    }
    partials = std::move(next);
  }

  std::vector<Solution> out;
  for (auto& p : partials) {
    Solution sol{reg, {}};
    for (auto& v : p.values) sol.values.push_back(std::move(*v));
    out.push_back(std::move(sol));
  }
  return out;
}

std::vector<std::vector<Value>> back_substitute(const GroebnerBasis& g, const std::vector<std::optional<Value>>& fixed,
                                                const SolveOptions& options) {
  const auto& reg = g.order().registry();
  for (std::size_t v = 0; v < reg->size(); ++v)
    if ((*reg)[v].block != Block::Ansatz && !fixed.at(v))
      throw PreconditionError("back substitution needs lambda and every parameter assigned");
  const auto sols = solve_triangular(g, fixed, options);
  if (sols.empty()) throw PreconditionError("assignment is inconsistent with the basis");
  const unsigned s = static_cast<unsigned>(reg->indices_in(Block::Ansatz).size());
  std::vector<std::vector<Value>> out;
  for (const auto& sol : sols) {
    Eigenpair pair;
    pair.s = s;
    pair.solution = sol;
    out.push_back(pair.p_coefficients());
  }
  return out;
}

ResidualReport compute_residual(const XPoly& v, const Eigenpair& pair, const Real& tolerance) {
  const auto& reg = pair.solution.registry;
  const auto sf = shift_by_lambda(complete_square(v, pair.n));
  const auto ode = auxiliary_ode(sf, pair.sign);
  XPoly a1 = ode.a1.embed(reg);
  XPoly a0 = ode.a0.embed(reg);
  const auto pc = pair.p_coefficients();

  ResidualReport rep;
  if (!pair.solution.is_numeric()) {
    for (std::size_t var = 0; var < reg->size(); ++var) {
      if ((*reg)[var].block == Block::Ansatz || pair.solution.is_free(var)) continue;
      a1 = a1.substitute(var, pair.solution.values[var].symbolic());
      a0 = a0.substitute(var, pair.solution.values[var].symbolic());
    }
    std::vector<MultiPoly> coeffs;
    for (const auto& c : pc) coeffs.push_back(c.symbolic());
    const XPoly p(reg, std::move(coeffs));
    const XPoly dp = p.derivative();
    const XPoly r = dp.derivative() + a1 * dp + a0 * p;
    rep.exact = true;
    rep.zero = r.is_zero();
    rep.text = r.is_zero() ? "0" : r.to_string();
    return rep;
  }

  std::vector<Scalar> vals;
  for (const auto& x : pair.solution.values) vals.push_back(x.scalar());
  const ScalarPoly sa1 = sp_from(a1, vals), sa0 = sp_from(a0, vals);
  ScalarPoly p;
  for (const auto& c : pc) p.push_back(c.scalar());
  const ScalarPoly dp = sp_derivative(p);
  const ScalarPoly ddp = sp_derivative(dp);
  const ScalarPoly t1 = sp_mul(sa1, dp), t0 = sp_mul(sa0, p);
  const ScalarPoly r = sp_add(ddp, sp_add(t1, t0));

  bool all_exact = true;
  for (const auto& c : r) all_exact = all_exact && c.is_exact();
  if (all_exact) {
    rep.exact = true;
    rep.zero = std::all_of(r.begin(), r.end(), [](const Scalar& c) { return c.exact()->is_zero(); });
    std::vector<Value> rv;
    for (const auto& c : r) rv.emplace_back(c);
    rep.text = rep.zero ? "0" : polynomial_text(rv, reg, 50);
    return rep;
  }

  Real worst(0), scale(0);
  for (int x = -2; x <= 2; ++x) {
    const Complex x0(static_cast<long>(x));
    const Complex a = sp_eval(ddp, x0), b = sp_eval(t1, x0), c = sp_eval(t0, x0);
    worst = std::max(worst, Real(abs(a + b + c)));
    scale = std::max(scale, Real(abs(a) + abs(b) + abs(c)));
  }
  rep.exact = false;
  rep.relative = scale == 0 ? worst : Real(worst / scale);
  rep.zero = rep.relative <= tolerance;
  rep.text = format_real(rep.relative, 6);
  return rep;
}

ResidualReport verify_eigenpair(const XPoly& v, const Eigenpair& pair, const Real& tolerance) {
  auto rep = compute_residual(v, pair, tolerance);
  if (!rep.zero) {
    const std::string kind = rep.exact ? "exact residual " : "relative residual ";
    throw VerificationError("eigenpair with lambda = " + pair.lambda().to_string(20) + " (" +
                            std::string(to_string(pair.sign)) + ", s = " + std::to_string(pair.s) +
                            ") fails verification: " + kind + rep.text);
  }
  return rep;
}

BoundState classify_state(const Eigenpair& pair) {
  if (pair.sign == BranchSign::Plus) return BoundState::NotBound;
  if (pair.n % 2 == 0) return BoundState::NotBound;
  for (const auto idx : pair.parameters())
    if (!pair.solution.values[idx].is_real()) return BoundState::Indeterminate;
  return BoundState::Bound;
}

SpectralResult analyse(const GroebnerBasis& g, const XPoly& v, BranchSign sign, unsigned s, unsigned n,
                       const SolveOptions& options) {
  SpectralResult res = spectral_extract(g, s, options);
  if (res.verdict == Verdict::NotIntegrable) return res;
  const std::vector<std::optional<Value>> fixed(g.order().registry()->size());
  for (auto& sol : solve_triangular(g, fixed, options, &res.notes)) {
    Eigenpair pair;
    pair.sign = sign;
    pair.s = s;
    pair.n = n;
    pair.solution = std::move(sol);
    pair.bound_state = classify_state(pair);
    verify_eigenpair(v, pair, options.tolerance);
    res.eigenpairs.push_back(std::move(pair));
  }
  return res;
}

std::string polynomial_text(const std::vector<Value>& coeffs, const RegistryPtr& registry, int digits) {
  if (std::all_of(coeffs.begin(), coeffs.end(), [](const Value& c) { return c.is_symbolic(); })) {
    std::vector<MultiPoly> mp;
    for (const auto& c : coeffs) mp.push_back(c.symbolic());
    return XPoly(registry, std::move(mp)).to_string();
  }
  std::string out;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const Value& c = coeffs[k];
    const auto q = c.rational();
    if (q && *q == 0) continue;
    if (!q && c.scalar().is_zero()) continue;
    std::string term = coefficient_prefix(c, digits, k == 0);
    if (k >= 1) term += k == 1 ? "x" : "x^" + std::to_string(k);
    if (out.empty()) out = term;
    else if (term.front() == '-') out += " - " + term.substr(1);
    else out += " + " + term;
  }
  return out.empty() ? "0" : out;
}

std::vector<Value> exponent_values(const XPoly& v, const Eigenpair& pair) {
  const auto& reg = pair.solution.registry;
  const XPoly f = exponent(complete_square(v, pair.n)).f.embed(reg) * Rational(sign_value(pair.sign));
  std::vector<Value> out;
  if (pair.solution.is_numeric()) {
    std::vector<Scalar> vals;
    for (const auto& x : pair.solution.values) vals.push_back(x.scalar());
    for (const auto& c : f.coefficients()) out.emplace_back(eval_scalar(c, vals));
    return out;
  }
  for (MultiPoly c : f.coefficients()) {
    for (std::size_t var = 0; var < reg->size(); ++var)
      if (c.depends_on(var) && !pair.solution.is_free(var)) c = c.substitute(var, pair.solution.values[var].symbolic());
    out.emplace_back(std::move(c));
  }
  return out;
}

}  // namespace qes
