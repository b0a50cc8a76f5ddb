#include "qes/groebner.hpp"

#include "qes/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace qes {
namespace {

// Internal polynomials store monomials permuted into priority order, so the
// order is plain lexicographic comparison of exponent vectors.
using Terms = std::vector<Term>;

Monomial permute(const Monomial& m, const std::vector<std::size_t>& priority) {
  Monomial out(m.size());
  for (std::size_t k = 0; k < priority.size(); ++k) out[k] = m[priority[k]];
  return out;
}

Monomial unpermute(const Monomial& m, const std::vector<std::size_t>& priority) {
  Monomial out(m.size());
  for (std::size_t k = 0; k < priority.size(); ++k) out[priority[k]] = m[k];
  return out;
}

Terms to_internal(const MultiPoly& f, const MonomialOrder& order) {
  Terms out = f.terms();
  if (!order.is_identity()) {
    for (auto& t : out) t.monomial = permute(t.monomial, order.priority());
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.monomial > b.monomial; });
  }
  return out;
}

MultiPoly to_external(Terms terms, const MonomialOrder& order) {
  if (!order.is_identity())
    for (auto& t : terms) t.monomial = unpermute(t.monomial, order.priority());
  return MultiPoly::from_terms(order.registry(), std::move(terms));
}

void make_monic(Terms& p) {
  if (p.empty()) return;
  const Rational inv = 1 / p.front().coeff;
  for (auto& t : p) t.coeff *= inv;
}

// a[from:] - c * m * b
Terms sub_scaled(const Terms& a, std::size_t from, const Rational& c, const Monomial& m, const Terms& b,
                 std::size_t b_from) {
  Terms out;
  out.reserve(a.size() - from + b.size() - b_from);
  std::size_t i = from, j = b_from;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Monomial bm = m * b[j].monomial;
    if (i < a.size() && a[i].monomial > bm) {
      out.push_back(a[i++]);
    } else if (i == a.size() || bm > a[i].monomial) {
      out.push_back({std::move(bm), -(c * b[j].coeff)});
      ++j;
    } else {
      Rational v = a[i].coeff - c * b[j].coeff;
      if (v != 0) out.push_back({std::move(bm), std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

struct Reducer {
  std::size_t max_terms = 0;

  void check(const Terms& p) const {
    if (max_terms != 0 && p.size() > max_terms)
      throw BudgetError("Gröbner term budget exceeded: intermediate polynomial has " + std::to_string(p.size()) +
                        " terms (cap " + std::to_string(max_terms) + ")");
  }

  // Full reduction; divisors are assumed nonzero.
  Terms normal_form(Terms p, const std::vector<const Terms*>& divisors) const {
    Terms rem;
    std::size_t start = 0;
    while (start < p.size()) {
      const Term& lt = p[start];
      const Terms* hit = nullptr;
      for (const Terms* g : divisors) {
        if (g->front().monomial.divides(lt.monomial)) {
          hit = g;
          break;
        }
      }
      if (!hit) {
        rem.push_back(lt);
        ++start;
        continue;
      }
      const Rational c = lt.coeff / hit->front().coeff;
      const Monomial m = lt.monomial / hit->front().monomial;
      p = sub_scaled(p, start + 1, c, m, *hit, 1);
      start = 0;
      check(p);
    }
    return rem;
  }
};

Terms s_poly_internal(const Terms& f, const Terms& g) {
  const Monomial l = lcm(f.front().monomial, g.front().monomial);
  const Monomial mf = l / f.front().monomial;
  const Monomial mg = l / g.front().monomial;
  // (l/LT f) f / lc f - (l/LT g) g / lc g; the leading terms cancel.
  Terms scaled_f;
  scaled_f.reserve(f.size());
  const Rational cf = 1 / f.front().coeff;
  for (std::size_t i = 1; i < f.size(); ++i) scaled_f.push_back({mf * f[i].monomial, f[i].coeff * cf});
  return sub_scaled(scaled_f, 0, 1 / g.front().coeff, mg, g, 1);
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint64_t sugar;
};

class Engine {
 public:
  Engine(const GroebnerBudget& budget) : budget_(budget) { reducer_.max_terms = budget.max_terms; }

  // Returns false when the unit ideal was detected.
  bool run(std::vector<Terms> inputs) {
    std::sort(inputs.begin(), inputs.end(), [](const Terms& a, const Terms& b) {
      return a.front().monomial < b.front().monomial;
    });
    for (auto& f : inputs) {
      const std::uint64_t sugar = total_degree(f);
      Terms r = reducer_.normal_form(std::move(f), active_divisors());
      if (r.empty()) continue;
      make_monic(r);
      if (r.front().monomial.is_one()) return false;
      insert(std::move(r), sugar);
    }
    while (!pairs_.empty()) {
      const auto best = std::min_element(pairs_.begin(), pairs_.end(), [](const Pair& a, const Pair& b) {
        if (a.lcm != b.lcm) return a.lcm < b.lcm;
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
      });
      const Pair pair = *best;
      pairs_.erase(best);
      if (++stats_.pairs_reduced > budget_.max_pairs)
        throw BudgetError("Gröbner pair budget exceeded after " + std::to_string(budget_.max_pairs) +
                          " pairs (basis size " + std::to_string(active_count()) + ", pending pairs " +
                          std::to_string(pairs_.size()) + ")");
      Terms h = reducer_.normal_form(s_poly_internal(polys_[pair.i], polys_[pair.j]), active_divisors());
      if (h.empty()) {
        ++stats_.zero_reductions;
        continue;
      }
      make_monic(h);
      if (h.front().monomial.is_one()) return false;
      insert(std::move(h), pair.sugar);
    }
    return true;
  }

  // Minimal basis interreduced to the reduced basis.
  std::vector<Terms> reduced() const {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) idx.push_back(k);
    std::vector<Terms> out;
    for (std::size_t k : idx) {
      std::vector<const Terms*> others;
      for (std::size_t o : idx)
        if (o != k) others.push_back(&polys_[o]);
      Terms tail(polys_[k].begin() + 1, polys_[k].end());
      Terms r{polys_[k].front()};
      Terms nf = reducer_.normal_form(std::move(tail), others);
      r.insert(r.end(), nf.begin(), nf.end());
      out.push_back(std::move(r));
    }
    return out;
  }

  const GroebnerStats& stats() const { return stats_; }

 private:
  static std::uint64_t total_degree(const Terms& f) {
    std::uint64_t d = 0;
    for (const auto& t : f) d = std::max(d, t.monomial.total_degree());
    return d;
  }

  std::size_t active_count() const { return static_cast<std::size_t>(std::count(active_.begin(), active_.end(), true)); }

  std::vector<const Terms*> active_divisors() const {
    std::vector<const Terms*> out;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) out.push_back(&polys_[k]);
    return out;
  }

  // Gebauer-Möller update: product criterion plus chain criterion for new and
  // old pairs.
  void insert(Terms h, std::uint64_t sugar) {
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    sugars_.push_back(sugar);
    active_.push_back(true);
    const Monomial lt_h = polys_[hi].front().monomial;

    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!active_[g]) continue;
      const Monomial& lt_g = polys_[g].front().monomial;
      const Monomial l = lcm(lt_h, lt_g);
      const std::uint64_t s = std::max(sugars_[hi] + (l.total_degree() - lt_h.total_degree()),
                                       sugars_[g] + (l.total_degree() - lt_g.total_degree()));
      candidates.push_back({g, hi, l, s});
      ++stats_.pairs_created;
    }

    // Drop new pairs whose lcm is a proper multiple of another new pair's lcm,
    // and among equal lcms keep one (preferring a coprime pair, which is then dropped).
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const auto& p = candidates[a];
      const bool coprime = lt_h.coprime(polys_[p.i].front().monomial);
      bool redundant = false;
      if (!coprime) {
        for (std::size_t b = 0; b < candidates.size() && !redundant; ++b) {
          if (b == a) continue;
          const auto& q = candidates[b];
          if (!q.lcm.divides(p.lcm)) continue;
          if (q.lcm != p.lcm) {
            redundant = true;
          } else {
            const bool q_coprime = lt_h.coprime(polys_[q.i].front().monomial);
            // Equal lcm: keep the first, unless another one is coprime.
            if (q_coprime || b < a) redundant = true;
          }
        }
      }
      if (redundant || coprime) {
        ++stats_.pruned_pairs;
        continue;
      }
      kept.push_back(p);
    }

    // Old pairs made redundant by the new leading term.
    std::vector<Pair> old;
    for (auto& p : pairs_) {
      const Monomial& li = polys_[p.i].front().monomial;
      const Monomial& lj = polys_[p.j].front().monomial;
      if (lt_h.divides(p.lcm) && lcm(li, lt_h) != p.lcm && lcm(lj, lt_h) != p.lcm) {
        ++stats_.pruned_pairs;
        continue;
      }
      old.push_back(std::move(p));
    }
    pairs_ = std::move(old);
    pairs_.insert(pairs_.end(), kept.begin(), kept.end());

    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g] && lt_h.divides(polys_[g].front().monomial)) active_[g] = false;
    // Keep tails reduced against the new element; leading terms are unchanged,
    // so the pair bookkeeping stays valid.
    const std::vector<const Terms*> by_h{&polys_[hi]};
    for (std::size_t g = 0; g < hi; ++g) {
      if (!active_[g]) continue;
      Terms& f = polys_[g];
      bool hit = false;
      for (std::size_t k = 1; k < f.size() && !hit; ++k) hit = lt_h.divides(f[k].monomial);
      if (!hit) continue;
      Terms tail = reducer_.normal_form(Terms(f.begin() + 1, f.end()), by_h);
      f.resize(1);
      f.insert(f.end(), tail.begin(), tail.end());
    }
    stats_.peak_basis = std::max(stats_.peak_basis, active_count());
  }

  GroebnerBudget budget_;
  Reducer reducer_;
  std::vector<Terms> polys_;
  std::vector<std::uint64_t> sugars_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  GroebnerStats stats_;
};

}  // namespace

MonomialOrder::MonomialOrder(RegistryPtr registry, std::vector<std::size_t> priority)
    : registry_(std::move(registry)), priority_(std::move(priority)) {
  if (priority_.size() != registry_->size()) throw PreconditionError("priority must list every registry variable");
  std::vector<bool> seen(priority_.size(), false);
  for (std::size_t k = 0; k < priority_.size(); ++k) {
    const auto v = priority_[k];
    if (v >= seen.size() || seen[v]) throw PreconditionError("priority is not a permutation");
    seen[v] = true;
    if (v != k) identity_ = false;
    if (k > 0 && (*registry_)[priority_[k - 1]].block > (*registry_)[v].block)
      throw PreconditionError("priority must honor the blocks ansatz > eigenvalue > parameter");
  }
}

MonomialOrder MonomialOrder::block_lex(RegistryPtr registry) {
  std::vector<std::size_t> identity(registry->size());
  std::iota(identity.begin(), identity.end(), 0);
  return MonomialOrder(std::move(registry), std::move(identity));
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  for (const auto v : priority_)
    if (a[v] != b[v]) return a[v] <=> b[v];
  return std::strong_ordering::equal;
}

std::string MonomialOrder::describe() const {
  std::string out = "lex:";
  for (std::size_t k = 0; k < priority_.size(); ++k) {
    out += k == 0 ? " " : " > ";
    out += (*registry_)[priority_[k]].name;
  }
  return out;
}

std::strong_ordering monomial_compare(const Monomial& a, const Monomial& b, const MonomialOrder& order) {
  return order.compare(a, b);
}

GroebnerBudget GroebnerBudget::from_environment() {
  GroebnerBudget b;
  if (const char* env = std::getenv("QES_BUDGET_PAIRS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) throw UsageError("QES_BUDGET_PAIRS must be a positive integer");
    b.max_pairs = v;
  }
  return b;
}

GroebnerBasis::GroebnerBasis(MonomialOrder order, std::vector<MultiPoly> elements, GroebnerStats stats)
    : order_(std::move(order)), elements_(std::move(elements)), stats_(stats) {}

bool GroebnerBasis::is_unit() const {
  return elements_.size() == 1 && elements_.front().is_constant() && !elements_.front().is_zero();
}

std::string GroebnerBasis::dump() const {
  std::string out = order_.describe() + "\n";
  for (const auto& g : elements_) out += g.to_string() + "\n";
  return out;
}

const Term& leading_term(const MultiPoly& f, const MonomialOrder& order) {
  if (f.is_zero()) throw PreconditionError("leading term of the zero polynomial");
  if (order.is_identity()) return f.leading_term();
  const Term* best = &f.terms().front();
  for (const auto& t : f.terms())
    if (order.compare(t.monomial, best->monomial) > 0) best = &t;
  return *best;
}

MultiPoly normal_form(const MultiPoly& f, std::span<const MultiPoly> divisors, const MonomialOrder& order) {
  std::vector<Terms> internal;
  for (const auto& g : divisors) {
    if (g.is_zero()) throw PreconditionError("normal_form: zero divisor");
    if (!same_registry(g.registry(), order.registry())) throw UsageError("normal_form: registry mismatch");
    internal.push_back(to_internal(g, order));
  }
  std::vector<const Terms*> ptrs;
  for (const auto& g : internal) ptrs.push_back(&g);
  return to_external(Reducer{}.normal_form(to_internal(f, order), ptrs), order);
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const MonomialOrder& order) {
  if (f.is_zero() || g.is_zero()) throw PreconditionError("s_polynomial of the zero polynomial");
  const Terms fi = to_internal(f, order);
  const Terms gi = to_internal(g, order);
  // lcm/LT(f) f - lcm/LT(g) g, with LT including the coefficient.
  const Monomial l = lcm(fi.front().monomial, gi.front().monomial);
  Terms left;
  const Rational cf = 1 / fi.front().coeff;
  for (const auto& t : fi) left.push_back({(l / fi.front().monomial) * t.monomial, t.coeff * cf});
  Terms result = sub_scaled(left, 0, 1 / gi.front().coeff, l / gi.front().monomial, gi, 0);
  return to_external(std::move(result), order);
}

GroebnerBasis buchberger_reduced(std::span<const MultiPoly> generators, const MonomialOrder& order,
                                 const GroebnerBudget& budget) {
  std::vector<Terms> inputs;
  for (const auto& f : generators) {
    if (!same_registry(f.registry(), order.registry())) throw UsageError("buchberger: registry mismatch");
    if (!f.is_zero()) inputs.push_back(to_internal(f, order));
  }
  if (inputs.empty()) return GroebnerBasis(order, {});

  Engine engine(budget);
  if (!engine.run(inputs)) {
    return GroebnerBasis(order, {MultiPoly::constant(order.registry(), 1)}, engine.stats());
  }
  std::vector<Terms> reduced = engine.reduced();
  std::sort(reduced.begin(), reduced.end(),
            [](const Terms& a, const Terms& b) { return a.front().monomial < b.front().monomial; });

  std::vector<MultiPoly> elements;
  for (auto& r : reduced) elements.push_back(content_normalize(to_external(std::move(r), order)));

  if (!satisfies_buchberger_criterion(elements, order))
    throw InternalError("computed basis violates Buchberger's criterion");
  for (const auto& f : generators)
    if (!f.is_zero() && !normal_form(f, elements, order).is_zero())
      throw InternalError("input generator does not reduce to zero modulo the computed basis");
  return GroebnerBasis(order, std::move(elements), engine.stats());
}

bool satisfies_buchberger_criterion(std::span<const MultiPoly> basis, const MonomialOrder& order) {
  std::vector<Terms> internal;
  for (const auto& g : basis) internal.push_back(to_internal(g, order));
  std::vector<const Terms*> ptrs;
  for (const auto& g : internal) ptrs.push_back(&g);
  for (std::size_t i = 0; i < internal.size(); ++i)
    for (std::size_t j = i + 1; j < internal.size(); ++j)
      if (!Reducer{}.normal_form(s_poly_internal(internal[i], internal[j]), ptrs).empty()) return false;
  return true;
}

std::vector<MultiPoly> eliminate(const GroebnerBasis& basis, std::span<const Block> keep) {
  const auto& order = basis.order();
  const auto& reg = *order.registry();
  auto kept = [&](std::size_t v) { return std::find(keep.begin(), keep.end(), reg[v].block) != keep.end(); };
  // Kept variables must form the tail of the priority list.
  bool in_tail = false;
  for (const auto v : order.priority()) {
    if (kept(v)) {
      in_tail = true;
    } else if (in_tail) {
      throw UsageError("order " + order.describe() + " is not an elimination order for the requested blocks");
    }
  }
  std::vector<MultiPoly> out;
  for (const auto& g : basis.elements()) {
    bool inside = true;
    for (std::size_t v = 0; v < reg.size() && inside; ++v)
      if (!kept(v) && g.depends_on(v)) inside = false;
    if (inside) out.push_back(g);
  }
  return out;
}

}  // namespace qes
