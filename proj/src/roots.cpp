#include "qes/roots.hpp"

#include "qes/errors.hpp"

#include <algorithm>

namespace qes {
namespace {

void trim(UPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

UPoly make_monic(UPoly f) {
  trim(f);
  if (f.empty()) return f;
  const Rational lc = f.back();
  for (auto& c : f) c /= lc;
  return f;
}

std::vector<Complex> to_complex_coeffs(const UPoly& f) {
  std::vector<Complex> out;
  for (const auto& c : f) out.emplace_back(to_real(c));
  return out;
}

Complex horner(const std::vector<Complex>& f, const Complex& z) {
  Complex acc(0);
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Real cauchy_bound(const std::vector<Complex>& f) {
  const Real lc = abs(f.back());
  Real m(0);
  for (std::size_t k = 0; k + 1 < f.size(); ++k) m = std::max(m, Real(abs(f[k]) / lc));
  return 1 + m;
}

Real coefficient_norm(const std::vector<Complex>& f) {
  Real s(0);
  for (const auto& c : f) s += abs(c);
  return s;
}

Real residual(const std::vector<Complex>& f, const Complex& z) { return abs(horner(f, z)) / coefficient_norm(f); }

bool before(const Complex& a, const Complex& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

// Rational roots of a square-free polynomial, found by rounding lc * z for
// each numeric root and checking exactly.
std::vector<Rational> rational_roots(const UPoly& f, const std::vector<Complex>& approx) {
  Integer lcm_den = 1;
  for (const auto& c : f) lcm_den = lcm(lcm_den, Integer(c.get_den()));
  Rational lead = f.back() * Rational(lcm_den);
  // lead is an integer multiple of every rational root's denominator once
  // the polynomial is scaled to integer coefficients.
  std::vector<Rational> out;
  for (const auto& z : approx) {
    if (abs(z.imag()) > Real("1e-20") * (1 + abs(z))) continue;
    const Real scaled = z.real() * to_real(lead);
    const Real rounded = round(scaled);
    if (abs(scaled - rounded) > Real("1e-20") * (1 + abs(scaled))) continue;
    std::string digits = rounded.str(0, std::ios_base::fixed);
    digits = digits.substr(0, digits.find('.'));
    Rational cand(Integer(digits), Integer(lead.get_num()));
    cand.canonicalize();
    if (std::find(out.begin(), out.end(), cand) == out.end() && upoly_eval(f, cand) == 0) out.push_back(cand);
  }
  return out;
}

}  // namespace

UPoly upoly_from(const MultiPoly& t, std::size_t var) {
  UPoly out;
  for (const auto& term : t.terms()) {
    for (std::size_t i = 0; i < term.monomial.size(); ++i)
      if (i != var && term.monomial[i] != 0)
        throw PreconditionError("polynomial '" + t.to_string() + "' is not univariate in " + (*t.registry())[var].name);
    const auto e = term.monomial[var];
    if (out.size() <= e) out.resize(e + 1);
    out[e] += term.coeff;
  }
  trim(out);
  return out;
}

std::optional<unsigned> upoly_degree(const UPoly& f) {
  for (std::size_t k = f.size(); k-- > 0;)
    if (f[k] != 0) return static_cast<unsigned>(k);
  return std::nullopt;
}

UPoly upoly_derivative(const UPoly& f) {
  UPoly out;
  for (std::size_t k = 1; k < f.size(); ++k) out.push_back(f[k] * Rational(static_cast<long>(k)));
  trim(out);
  return out;
}

void upoly_divmod(const UPoly& f, const UPoly& g, UPoly& q, UPoly& r) {
  UPoly d = g;
  trim(d);
  if (d.empty()) throw PreconditionError("polynomial division by zero");
  r = f;
  trim(r);
  q.assign(r.size() >= d.size() ? r.size() - d.size() + 1 : 0, Rational(0));
  while (r.size() >= d.size()) {
    const std::size_t shift = r.size() - d.size();
    const Rational c = r.back() / d.back();
    q[shift] = c;
    for (std::size_t k = 0; k < d.size(); ++k) r[shift + k] -= c * d[k];
    trim(r);
  }
  trim(q);
}

UPoly upoly_gcd(const UPoly& f, const UPoly& g) {
  UPoly a = make_monic(f), b = make_monic(g);
  while (!b.empty()) {
    UPoly q, r;
    upoly_divmod(a, b, q, r);
    a = std::move(b);
    b = make_monic(std::move(r));
  }
  return a;
}

Rational upoly_eval(const UPoly& f, const Rational& t) {
  Rational acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::vector<UPoly> square_free_decomposition(const UPoly& f) {
  UPoly monic = make_monic(f);
  if (monic.empty()) throw PreconditionError("square-free decomposition of zero");
  std::vector<UPoly> out;
  UPoly a = upoly_gcd(monic, upoly_derivative(monic));
  UPoly q, r;
  UPoly b, c, d;
  upoly_divmod(monic, a, b, r);
  upoly_divmod(upoly_derivative(monic), a, c, r);
  UPoly bd = upoly_derivative(b);
  d = c;
  for (std::size_t k = 0; k < d.size() || k < bd.size(); ++k) {
    if (k >= d.size()) d.resize(k + 1);
    if (k < bd.size()) d[k] -= bd[k];
  }
  trim(d);
  while (upoly_degree(b).value_or(0) > 0) {
    UPoly g = upoly_gcd(b, d);
    out.push_back(g);
    UPoly nb, nc;
    upoly_divmod(b, g, nb, r);
    upoly_divmod(d, g, nc, r);
    b = nb;
    bd = upoly_derivative(b);
    d = nc;
    for (std::size_t k = 0; k < d.size() || k < bd.size(); ++k) {
      if (k >= d.size()) d.resize(k + 1);
      if (k < bd.size()) d[k] -= bd[k];
    }
    trim(d);
  }
  return out;
}

std::vector<Complex> aberth(const std::vector<Complex>& input) {
  std::vector<Complex> f = input;
  while (!f.empty() && f.back() == Complex(0)) f.pop_back();
  if (f.size() <= 1) return {};
  const std::size_t n = f.size() - 1;
  std::vector<Complex> df;
  for (std::size_t k = 1; k < f.size(); ++k) df.push_back(f[k] * Real(static_cast<long>(k)));

  const Real radius = cauchy_bound(f) / 2;
  const Real two_pi = 2 * boost::math::constants::pi<Real>();
  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Real angle = two_pi * Real(static_cast<long>(k)) / Real(static_cast<long>(n)) + Real("0.4");
    z[k] = Complex(radius * cos(angle), radius * sin(angle));
  }
  const Real eps("1e-95");
  for (int iter = 0; iter < 5000; ++iter) {
    Real worst(0);
    for (std::size_t i = 0; i < n; ++i) {
      const Complex fv = horner(f, z[i]);
      if (fv == Complex(0)) continue;
      const Complex ratio = fv / horner(df, z[i]);
      Complex sum(0);
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) sum += Complex(1) / (z[i] - z[j]);
      const Complex w = ratio / (Complex(1) - ratio * sum);
      z[i] -= w;
      const Real mag = abs(z[i]);
      worst = std::max(worst, Real(abs(w) / (mag > 1 ? mag : Real(1))));
    }
    if (worst < eps) break;
  }
  return z;
}

std::optional<std::vector<Real>> inclusion_radii(const std::vector<Complex>& f, const std::vector<Complex>& z) {
  const std::size_t n = z.size();
  if (n == 0 || n + 1 != f.size()) return std::nullopt;
  const Real bound = cauchy_bound(f);
  std::vector<Real> rad(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex denom = f.back();
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) denom *= z[i] - z[j];
    if (denom == Complex(0)) return std::nullopt;
    rad[i] = Real(static_cast<long>(n)) * abs(horner(f, z[i])) / abs(denom);
    if (abs(z[i]) > bound + rad[i]) return std::nullopt;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (abs(z[i] - z[j]) <= rad[i] + rad[j]) return std::nullopt;
  return rad;
}

bool certify_roots(const std::vector<Complex>& f, const std::vector<Complex>& z) {
  return inclusion_radii(f, z).has_value();
}

void snap_real_roots(std::vector<Complex>& z, const std::vector<Real>& rad) {
  // For real coefficients the conjugate of the root isolated in disk i lies
  // in the mirrored disk. If that mirror meets no other disk, the conjugate
  // is the same root, so the root is real.
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (abs(z[i].imag()) >= rad[i]) continue;
    const Complex mirror(z[i].real(), -z[i].imag());
    bool isolated = true;
    for (std::size_t j = 0; j < z.size() && isolated; ++j)
      if (j != i && abs(mirror - z[j]) <= rad[i] + rad[j]) isolated = false;
    if (isolated) z[i] = Complex(z[i].real(), Real(0));
  }
}

std::vector<Eigenvalue> roots(const UPoly& f_in, const Real& tolerance) {
  UPoly f = f_in;
  trim(f);
  if (f.empty()) throw PreconditionError("roots of the zero polynomial");
  if (f.size() == 1) return {};
  const std::vector<Complex> f_numeric = to_complex_coeffs(f);

  std::vector<Eigenvalue> out;
  const auto factors = square_free_decomposition(f);
  for (std::size_t m = 0; m < factors.size(); ++m) {
    UPoly g = factors[m];
    if (upoly_degree(g).value_or(0) == 0) continue;
    const unsigned mult = static_cast<unsigned>(m + 1);

    const auto approx = aberth(to_complex_coeffs(g));
    for (const auto& r : rational_roots(g, approx)) {
      out.push_back({Scalar(r), Rational(0), mult});
      UPoly q, rem;
      upoly_divmod(g, UPoly{-r, Rational(1)}, q, rem);
      g = q;
    }

    const unsigned d = upoly_degree(g).value_or(0);
    if (d == 1) {
      out.push_back({Scalar(Rational(-g[0] / g[1])), Rational(0), mult});
    } else if (d == 2) {
      // (-b +- sqrt(b^2 - 4ac)) / 2a with disc = num/den -> sqrt(num*den)/den.
      const Rational a = g[2], b = g[1], c = g[0];
      const Rational disc = b * b - 4 * a * c;
      const Integer radicand = disc.get_num() * disc.get_den();
      const Rational scale = Rational(1) / (Rational(disc.get_den()) * 2 * a);
      for (int sgn : {1, -1}) {
        const QuadSurd root(-b / (2 * a), Rational(sgn) * scale, radicand);
        out.push_back({Scalar(root), Rational(0), mult});
      }
    } else if (d > 2) {
      const auto gc = to_complex_coeffs(g);
      auto z = aberth(gc);
      const auto rad = inclusion_radii(gc, z);
      if (!rad)
        throw VerificationError("could not certify the numeric roots of a degree-" + std::to_string(d) + " factor");
      snap_real_roots(z, *rad);
      for (const auto& r : z) {
        const Real res = residual(f_numeric, r);
        if (res > tolerance) throw VerificationError("numeric root residual exceeds tolerance");
        out.push_back({Scalar::numeric(r), rational_upper_bound(res), mult});
      }
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Eigenvalue& a, const Eigenvalue& b) { return before(a.value.approx(), b.value.approx()); });
  return out;
}

std::vector<Eigenvalue> roots(const MultiPoly& t, std::size_t var, const Real& tolerance) {
  return roots(upoly_from(t, var), tolerance);
}

}  // namespace qes
