#include "qes/multipoly.hpp"

#include "qes/errors.hpp"

#include <algorithm>
#include <map>

namespace qes {
namespace {

// Merges two term lists sorted in decreasing order: a + sign*b.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].monomial > b[j].monomial)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].monomial > a[i].monomial) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coeff = -out.back().coeff;
    } else {
      Rational c = sign < 0 ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back({a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly::MultiPoly(RegistryPtr registry) : registry_(std::move(registry)) {
  if (!registry_) throw UsageError("polynomial without a variable registry");
}

MultiPoly MultiPoly::constant(RegistryPtr registry, const Rational& c) {
  MultiPoly p(std::move(registry));
  if (c != 0) p.terms_.push_back({Monomial(p.registry_->size()), c});
  return p;
}

MultiPoly MultiPoly::variable(RegistryPtr registry, std::string_view name) {
  const auto index = registry->index_of(name);
  return variable(std::move(registry), index);
}

MultiPoly MultiPoly::variable(RegistryPtr registry, std::size_t index) {
  MultiPoly p(std::move(registry));
  if (index >= p.registry_->size()) throw UsageError("variable index out of range");
  Monomial m(p.registry_->size());
  m[index] = 1;
  p.terms_.push_back({std::move(m), Rational(1)});
  return p;
}

MultiPoly MultiPoly::from_terms(RegistryPtr registry, std::vector<Term> terms) {
  MultiPoly p(std::move(registry));
  std::map<Monomial, Rational, std::greater<>> acc;
  for (auto& t : terms) {
    if (t.monomial.size() != p.registry_->size()) throw UsageError("monomial length does not match registry");
    acc[t.monomial] += t.coeff;
  }
  for (auto& [m, c] : acc)
    if (c != 0) p.terms_.push_back({m, c});
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

std::optional<Rational> MultiPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (is_constant()) return terms_.front().coeff;
  return std::nullopt;
}

const Term& MultiPoly::leading_term() const {
  if (terms_.empty()) throw PreconditionError("leading term of the zero polynomial");
  return terms_.front();
}

std::size_t MultiPoly::degree_in(std::size_t var) const {
  std::size_t d = 0;
  for (const auto& t : terms_) d = std::max<std::size_t>(d, t.monomial[var]);
  return d;
}

std::uint64_t MultiPoly::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.total_degree());
  return d;
}

bool MultiPoly::depends_on(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.monomial[var] != 0; });
}

std::optional<std::size_t> MultiPoly::leading_variable() const {
  // Lex order: the leading term carries the highest-priority variable present.
  if (terms_.empty()) return std::nullopt;
  return terms_.front().monomial.leading_variable();
}

void MultiPoly::require_same(const MultiPoly& g) const {
  if (!same_registry(registry_, g.registry_)) throw UsageError("polynomials belong to different registries");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& g) {
  require_same(g);
  terms_ = merge(terms_, g.terms_, +1);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& g) {
  require_same(g);
  terms_ = merge(terms_, g.terms_, -1);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& g) {
  require_same(g);
  const auto& small = terms_.size() <= g.terms_.size() ? terms_ : g.terms_;
  const auto& large = terms_.size() <= g.terms_.size() ? g.terms_ : terms_;
  std::vector<Term> acc;
  for (const auto& s : small) {
    // Multiplying by a monomial preserves the lex order, so each row stays sorted.
    std::vector<Term> row;
    row.reserve(large.size());
    for (const auto& l : large) row.push_back({s.monomial * l.monomial, s.coeff * l.coeff});
    acc = merge(acc, row, +1);
  }
  terms_ = std::move(acc);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  if (var >= registry_->size()) throw UsageError("variable index out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.monomial[var] == 0) continue;
    Term d = t;
    d.coeff *= t.monomial[var];
    d.monomial[var] -= 1;
    out.push_back(std::move(d));
  }
  // Differentiating in one variable keeps distinct monomials distinct and ordered.
  MultiPoly r(registry_);
  r.terms_ = std::move(out);
  return r;
}

MultiPoly MultiPoly::derivative(std::string_view var) const { return derivative(registry_->index_of(var)); }

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(registry_, 1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::substitute(std::size_t var, const MultiPoly& value) const {
  require_same(value);
  auto parts = coefficients_in(var);
  MultiPoly result(registry_);
  MultiPoly power = constant(registry_, 1);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k > 0) power *= value;
    if (!parts[k].is_zero()) result += parts[k] * power;
  }
  return result;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::size_t var) const {
  std::vector<std::vector<Term>> buckets(degree_in(var) + 1);
  for (const auto& t : terms_) {
    Term stripped = t;
    const auto k = stripped.monomial[var];
    stripped.monomial[var] = 0;
    buckets[k].push_back(std::move(stripped));
  }
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(registry_, std::move(b)));
  return out;
}

MultiPoly MultiPoly::embed(const RegistryPtr& target) const {
  if (same_registry(registry_, target)) {
    MultiPoly r = *this;
    r.registry_ = target;
    return r;
  }
  std::vector<std::size_t> map(registry_->size());
  std::vector<bool> used(registry_->size(), false);
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < t.monomial.size(); ++i)
      if (t.monomial[i] != 0) used[i] = true;
  for (std::size_t i = 0; i < registry_->size(); ++i) {
    auto j = target->find((*registry_)[i].name);
    if (!j) {
      if (used[i]) throw UsageError("variable '" + (*registry_)[i].name + "' is missing from the target registry");
      continue;
    }
    map[i] = *j;
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->size());
    for (std::size_t i = 0; i < t.monomial.size(); ++i)
      if (t.monomial[i] != 0) m[map[i]] = t.monomial[i];
    out.push_back({std::move(m), t.coeff});
  }
  return from_terms(target, std::move(out));
}

bool MultiPoly::operator==(const MultiPoly& other) const {
  return same_registry(registry_, other.registry_) && terms_ == other.terms_;
}

std::string monomial_to_string(const Monomial& m, const VarRegistry& registry) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += registry[i].name;
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

std::string render_terms(const std::vector<Term>& terms, const VarRegistry& registry) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms) {
    const bool negative = t.coeff < 0;
    const Rational magnitude = abs(t.coeff);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const std::string mono = monomial_to_string(t.monomial, registry);
    if (mono.empty()) {
      out += to_string(magnitude);
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += to_string(magnitude) + '*' + mono;
    }
  }
  return out;
}

std::string MultiPoly::to_string() const { return render_terms(terms_, *registry_); }

MultiPoly mp_arith(ArithKind kind, const MultiPoly& f, const MultiPoly& g) {
  switch (kind) {
    case ArithKind::Add: return f + g;
    case ArithKind::Sub: return f - g;
    case ArithKind::Mul: return f * g;
    case ArithKind::Neg: return -f;
  }
  throw UsageError("unknown arithmetic kind");
}

MultiPoly mp_derivative(const MultiPoly& f, std::string_view var) { return f.derivative(var); }

MultiPoly content_normalize(const MultiPoly& f) {
  if (f.is_zero()) throw PreconditionError("content_normalize of the zero polynomial");
  Integer den_lcm = 1;
  Integer num_gcd = 0;
  for (const auto& t : f.terms()) {
    den_lcm = lcm(den_lcm, t.coeff.get_den());
    num_gcd = gcd(num_gcd, t.coeff.get_num());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (f.leading_term().coeff < 0) scale = -scale;
  return f * scale;
}

}  // namespace qes
