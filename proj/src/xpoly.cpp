#include "qes/xpoly.hpp"

#include "qes/errors.hpp"

namespace qes {

XPoly::XPoly(RegistryPtr registry) : registry_(std::move(registry)) {
  if (!registry_) throw UsageError("polynomial without a variable registry");
}

XPoly::XPoly(RegistryPtr registry, std::vector<MultiPoly> coeffs)
    : registry_(std::move(registry)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (!same_registry(c.registry(), registry_)) throw UsageError("coefficient registry mismatch");
  trim();
}

XPoly XPoly::monomial(RegistryPtr registry, unsigned degree, MultiPoly coeff) {
  std::vector<MultiPoly> coeffs(degree + 1, MultiPoly(registry));
  coeffs[degree] = std::move(coeff);
  return XPoly(std::move(registry), std::move(coeffs));
}

XPoly XPoly::constant(MultiPoly c) {
  auto reg = c.registry();
  return XPoly(reg, {std::move(c)});
}

XPoly XPoly::x(RegistryPtr registry) {
  auto one = MultiPoly::constant(registry, 1);
  return monomial(std::move(registry), 1, std::move(one));
}

void XPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<unsigned> XPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<unsigned>(coeffs_.size() - 1);
}

MultiPoly XPoly::coeff(unsigned k) const { return k < coeffs_.size() ? coeffs_[k] : MultiPoly(registry_); }

XPoly XPoly::operator-() const {
  XPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

XPoly& XPoly::operator+=(const XPoly& g) {
  if (!same_registry(registry_, g.registry_)) throw UsageError("polynomials belong to different registries");
  if (coeffs_.size() < g.coeffs_.size()) coeffs_.resize(g.coeffs_.size(), MultiPoly(registry_));
  for (std::size_t k = 0; k < g.coeffs_.size(); ++k) coeffs_[k] += g.coeffs_[k];
  trim();
  return *this;
}

XPoly& XPoly::operator-=(const XPoly& g) { return *this += -g; }

XPoly& XPoly::operator*=(const XPoly& g) {
  if (!same_registry(registry_, g.registry_)) throw UsageError("polynomials belong to different registries");
  if (is_zero() || g.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<MultiPoly> out(coeffs_.size() + g.coeffs_.size() - 1, MultiPoly(registry_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < g.coeffs_.size(); ++j)
      if (!g.coeffs_[j].is_zero()) out[i + j] += coeffs_[i] * g.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

XPoly& XPoly::operator*=(const MultiPoly& c) {
  for (auto& k : coeffs_) k *= c;
  trim();
  return *this;
}

XPoly& XPoly::operator*=(const Rational& c) {
  for (auto& k : coeffs_) k *= c;
  trim();
  return *this;
}

XPoly XPoly::derivative() const {
  std::vector<MultiPoly> out;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out.push_back(coeffs_[k] * Rational(static_cast<long>(k)));
  return XPoly(registry_, std::move(out));
}

XPoly XPoly::derivative(std::string_view var) const {
  if (var == kSpatialVariable) return derivative();
  const auto index = registry_->index_of(var);
  std::vector<MultiPoly> out;
  for (const auto& c : coeffs_) out.push_back(c.derivative(index));
  return XPoly(registry_, std::move(out));
}

XPoly XPoly::antiderivative() const {
  if (is_zero()) return *this;
  std::vector<MultiPoly> out(coeffs_.size() + 1, MultiPoly(registry_));
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    out[k + 1] = coeffs_[k] * ratio(1, static_cast<unsigned long>(k + 1));
  return XPoly(registry_, std::move(out));
}

XPoly XPoly::substitute(std::size_t var, const MultiPoly& value) const {
  std::vector<MultiPoly> out;
  for (const auto& c : coeffs_) out.push_back(c.substitute(var, value));
  return XPoly(registry_, std::move(out));
}

XPoly XPoly::embed(const RegistryPtr& target) const {
  std::vector<MultiPoly> out;
  for (const auto& c : coeffs_) out.push_back(c.embed(target));
  return XPoly(target, std::move(out));
}

std::string XPoly::to_string() const {
  // Same term syntax as MultiPoly, with x leading each monomial.
  std::string out;
  if (is_zero()) return "0";
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k].is_zero()) continue;
    for (const auto& t : coeffs_[k].terms()) {
      const bool negative = t.coeff < 0;
      const Rational magnitude = abs(t.coeff);
      if (first) {
        if (negative) out += '-';
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      std::string mono;
      if (k > 0) mono = k == 1 ? std::string("x") : "x^" + std::to_string(k);
      const std::string rest = monomial_to_string(t.monomial, *registry_);
      if (!rest.empty()) mono = mono.empty() ? rest : mono + '*' + rest;
      if (mono.empty()) {
        out += qes::to_string(magnitude);
      } else if (magnitude == 1) {
        out += mono;
      } else {
        out += qes::to_string(magnitude) + '*' + mono;
      }
    }
  }
  return out;
}

bool XPoly::operator==(const XPoly& other) const {
  return same_registry(registry_, other.registry_) && coeffs_ == other.coeffs_;
}

XPoly mp_derivative(const XPoly& p, std::string_view var) { return p.derivative(var); }

std::vector<std::pair<unsigned, MultiPoly>> x_coefficients(const XPoly& p) {
  std::vector<std::pair<unsigned, MultiPoly>> out;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;)
    if (!c[k].is_zero()) out.emplace_back(static_cast<unsigned>(k), c[k]);
  return out;
}

XPoly from_x_coefficients(RegistryPtr registry, const std::vector<std::pair<unsigned, MultiPoly>>& coeffs) {
  XPoly out(registry);
  for (const auto& [k, c] : coeffs) out += XPoly::monomial(registry, k, c);
  return out;
}

}  // namespace qes
