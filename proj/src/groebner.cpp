#include "pfw/groebner.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace pfw {

Ideal Ideal::make(RingPtr ring, std::vector<Polynomial> gens) {
  std::vector<Polynomial> kept;
  kept.reserve(gens.size());
  for (auto& g : gens) {
    if (g.ring()) require_same_ring(ring, g.ring());
    if (!g.is_zero()) kept.push_back(std::move(g));
  }
  return Ideal{std::move(ring), std::move(kept)};
}

namespace {

// Internal working form: terms ascending under the active order, so the
// leading term is back() and removing it is O(1).
struct GPoly {
  std::vector<Term> terms;

  bool empty() const { return terms.empty(); }
  const Term& lt() const { return terms.back(); }
};

struct Ctx {
  const RingSpec& ring;
  const MonomialOrder& order;
  Deadline deadline;

  int cmp(const Monomial& a, const Monomial& b) const { return order.compare(ring, a, b); }
};

GPoly to_gpoly(const Ctx& ctx, const Polynomial& p) {
  GPoly g;
  g.terms.assign(p.terms().begin(), p.terms().end());
  std::sort(g.terms.begin(), g.terms.end(),
            [&](const Term& x, const Term& y) { return ctx.cmp(x.mono, y.mono) < 0; });
  return g;
}

Polynomial from_gpoly(const RingPtr& ring, GPoly g) {
  return Polynomial::from_terms(ring, std::move(g.terms));
}

void make_monic(GPoly& g) {
  if (g.empty()) return;
  Rational lc = g.lt().coeff;
  if (lc == 1) return;
  for (auto& t : g.terms) t.coeff /= lc;
}

// a - c * x^shift * b, all term lists ascending under the order.
GPoly sub_mul(const Ctx& ctx, const GPoly& a, const Monomial& shift, const Rational& c,
              const GPoly& b) {
  GPoly out;
  out.terms.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() && j < b.terms.size()) {
    Monomial bm = b.terms[j].mono * shift;
    int cv = ctx.cmp(a.terms[i].mono, bm);
    if (cv < 0) {
      out.terms.push_back(a.terms[i++]);
    } else if (cv > 0) {
      out.terms.push_back({std::move(bm), -c * b.terms[j].coeff});
      ++j;
    } else {
      Rational s = a.terms[i].coeff - c * b.terms[j].coeff;
      if (s != 0) out.terms.push_back({a.terms[i].mono, std::move(s)});
      ++i, ++j;
    }
  }
  for (; i < a.terms.size(); ++i) out.terms.push_back(a.terms[i]);
  for (; j < b.terms.size(); ++j)
    out.terms.push_back({b.terms[j].mono * shift, -c * b.terms[j].coeff});
  return out;
}

// Full remainder of division by the list; no term of the result is
// divisible by any leading monomial in basis.
GPoly reduce_full(const Ctx& ctx, GPoly h, const std::vector<GPoly>& basis) {
  std::vector<Term> remainder;
  while (!h.empty()) {
    ctx.deadline.check();
    const Term& lead = h.lt();
    const GPoly* reducer = nullptr;
    for (const auto& g : basis) {
      if (!g.empty() && g.lt().mono.divides(lead.mono)) {
        reducer = &g;
        break;
      }
    }
    if (reducer) {
      Monomial shift = lead.mono / reducer->lt().mono;
      Rational factor = lead.coeff / reducer->lt().coeff;
      h = sub_mul(ctx, h, shift, factor, *reducer);
    } else {
      remainder.push_back(lead);
      h.terms.pop_back();
    }
  }
  std::reverse(remainder.begin(), remainder.end());
  return GPoly{std::move(remainder)};
}

GPoly s_polynomial(const Ctx& ctx, const GPoly& f, const GPoly& g) {
  Monomial l = lcm(f.lt().mono, g.lt().mono);
  Monomial sf = l / f.lt().mono;
  Monomial sg = l / g.lt().mono;
  // (l / lt f) * f - (lc f / lc g) * (l / lt g) * g, then scale to match:
  GPoly shifted_f;
  shifted_f.terms.reserve(f.terms.size());
  for (const auto& t : f.terms) shifted_f.terms.push_back({t.mono * sf, t.coeff / f.lt().coeff});
  return sub_mul(ctx, shifted_f, sg, Rational(1) / g.lt().coeff, g);
}

struct PairEntry {
  std::size_t i, j;
  Monomial lcm_mono;
  std::size_t serial;
};

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, PairStrategy strategy,
                         Deadline deadline) {
  const RingPtr& ring = ideal.ring;
  Ctx ctx{*ring, order, deadline};

  std::vector<GPoly> G;
  for (const auto& p : ideal.generators) {
    if (p.is_zero()) continue;
    GPoly g = to_gpoly(ctx, p);
    make_monic(g);
    G.push_back(std::move(g));
  }

  // done[i][j]: the pair is no longer pending (processed or pruned).
  std::vector<std::vector<bool>> done;
  auto is_done = [&](std::size_t i, std::size_t j) {
    return done[std::max(i, j)][std::min(i, j)];
  };
  auto mark_done = [&](std::size_t i, std::size_t j) {
    done[std::max(i, j)][std::min(i, j)] = true;
  };

  std::deque<PairEntry> pending;
  std::size_t serial = 0;
  auto push_pairs_for = [&](std::size_t t) {
    done.emplace_back(t, false);
    for (std::size_t i = 0; i < t; ++i) {
      if (G[i].lt().mono.coprime(G[t].lt().mono)) {
        mark_done(i, t);  // Buchberger's first criterion
        continue;
      }
      pending.push_back({i, t, lcm(G[i].lt().mono, G[t].lt().mono), serial++});
    }
  };
  for (std::size_t t = 0; t < G.size(); ++t) push_pairs_for(t);

  auto pop_next = [&]() -> PairEntry {
    std::size_t best = 0;
    if (strategy == PairStrategy::Normal) {
      for (std::size_t k = 1; k < pending.size(); ++k) {
        int c = ctx.cmp(pending[k].lcm_mono, pending[best].lcm_mono);
        if (c < 0 || (c == 0 && pending[k].serial < pending[best].serial)) best = k;
      }
    }
    PairEntry e = pending[best];
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
    return e;
  };

  while (!pending.empty()) {
    ctx.deadline.check();
    PairEntry pr = pop_next();
    mark_done(pr.i, pr.j);
    // Chain criterion: skip when some k divides the lcm and both companion
    // pairs have already been treated.
    bool skip = false;
    for (std::size_t k = 0; k < G.size() && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (G[k].lt().mono.divides(pr.lcm_mono) && is_done(pr.i, k) && is_done(pr.j, k)) skip = true;
    }
    if (skip) continue;
    GPoly r = reduce_full(ctx, s_polynomial(ctx, G[pr.i], G[pr.j]), G);
    if (!r.empty()) {
      make_monic(r);
      G.push_back(std::move(r));
      push_pairs_for(G.size() - 1);
    }
  }

  // Minimalize: drop elements whose leading monomial is divisible by
  // another's.
  std::vector<bool> keep(G.size(), true);
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (!keep[i]) continue;
    for (std::size_t j = 0; j < G.size(); ++j) {
      if (i == j || !keep[j]) continue;
      if (G[j].lt().mono.divides(G[i].lt().mono) &&
          !(G[i].lt().mono == G[j].lt().mono && j > i)) {
        keep[i] = false;
        break;
      }
    }
  }
  std::vector<GPoly> minimal;
  for (std::size_t i = 0; i < G.size(); ++i)
    if (keep[i]) minimal.push_back(std::move(G[i]));

  // Inter-reduce tails; leading monomials are pairwise non-divisible.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    ctx.deadline.check();
    std::vector<GPoly> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    minimal[i] = reduce_full(ctx, std::move(minimal[i]), others);
    make_monic(minimal[i]);
  }

  std::sort(minimal.begin(), minimal.end(), [&](const GPoly& x, const GPoly& y) {
    return ctx.cmp(x.lt().mono, y.lt().mono) < 0;
  });

  std::vector<Polynomial> out;
  out.reserve(minimal.size());
  for (auto& g : minimal) out.push_back(from_gpoly(ring, std::move(g)));
  return GroebnerBasis(ring, order, std::move(out));
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis, Deadline deadline) {
  require_same_ring(p.ring(), basis.ring());
  Ctx ctx{*basis.ring(), basis.order(), deadline};
  std::vector<GPoly> B;
  B.reserve(basis.basis().size());
  for (const auto& g : basis.basis()) B.push_back(to_gpoly(ctx, g));
  GPoly r = reduce_full(ctx, to_gpoly(ctx, p), B);
  return from_gpoly(p.ring(), std::move(r));
}

bool is_member(const Polynomial& p, const Ideal& ideal, Deadline deadline) {
  if (p.is_zero()) return true;
  GroebnerBasis gb = buchberger(ideal, MonomialOrder::weighted_degrevlex(),
                                PairStrategy::Normal, deadline);
  return normal_form(p, gb, deadline).is_zero();
}

bool ideals_equal(const Ideal& left, const Ideal& right, Deadline deadline) {
  require_same_ring(left.ring, right.ring);
  MonomialOrder order = MonomialOrder::weighted_degrevlex();
  GroebnerBasis gl = buchberger(left, order, PairStrategy::Normal, deadline);
  GroebnerBasis gr = buchberger(right, order, PairStrategy::Normal, deadline);
  return gl.basis() == gr.basis();
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& drop, Deadline deadline) {
  for (auto v : drop)
    if (v >= ideal.ring->size()) throw Error("eliminate: variable index out of range");
  if (drop.empty()) {
    GroebnerBasis gb =
        buchberger(ideal, MonomialOrder::weighted_degrevlex(), PairStrategy::Normal, deadline);
    return Ideal{ideal.ring, gb.basis()};
  }
  std::vector<std::size_t> elim = drop;
  std::sort(elim.begin(), elim.end());
  elim.erase(std::unique(elim.begin(), elim.end()), elim.end());
  GroebnerBasis gb = buchberger(ideal, MonomialOrder::block(elim), PairStrategy::Normal, deadline);
  std::vector<Polynomial> kept;
  for (const auto& g : gb.basis()) {
    bool free = true;
    for (auto v : elim)
      if (g.contains_variable(v)) {
        free = false;
        break;
      }
    if (free) kept.push_back(g);
  }
  return Ideal{ideal.ring, std::move(kept)};
}

Ideal saturate(const Ideal& ideal, std::size_t var, Deadline deadline) {
  const RingSpec& R = *ideal.ring;
  if (var >= R.size()) throw Error("saturate: variable index out of range");
  std::vector<std::string> names;
  std::vector<long> weights;
  for (std::size_t i = 0; i < R.size(); ++i) {
    names.push_back(R.name(i));
    weights.push_back(R.weight(i));
  }
  std::string aux = "_inv";
  while (R.index(aux)) aux += "_";
  names.push_back(aux);
  weights.push_back(1);
  RingPtr ext = make_ring(std::move(names), std::move(weights));
  std::size_t aux_index = ext->size() - 1;

  auto lift = [&](const Polynomial& p) {
    std::vector<Term> terms;
    for (const auto& t : p.terms()) {
      Monomial m = t.mono;
      m.exp.push_back(0);
      terms.push_back({std::move(m), t.coeff});
    }
    return Polynomial::from_terms(ext, std::move(terms));
  };

  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators) gens.push_back(lift(g));
  Monomial vm = Monomial::one(ext->size());
  vm.exp[var] = 1;
  vm.exp[aux_index] = 1;
  gens.push_back(Polynomial::monomial(ext, std::move(vm), 1) - Polynomial::constant(ext, 1));

  Ideal lifted = Ideal::make(ext, std::move(gens));
  Ideal elim = eliminate(lifted, {aux_index}, deadline);

  std::vector<Polynomial> out;
  for (const auto& g : elim.generators) {
    std::vector<Term> terms;
    for (const auto& t : g.terms()) {
      Monomial m = t.mono;
      m.exp.pop_back();
      terms.push_back({std::move(m), t.coeff});
    }
    out.push_back(Polynomial::from_terms(ideal.ring, std::move(terms)));
  }
  return Ideal{ideal.ring, std::move(out)};
}

}  // namespace pfw
