#include "pfw/unprojection.hpp"

#include <algorithm>
#include <map>

namespace pfw {

BilinearPair make_bilinear_pair(Polynomial m1, Polynomial m2,
                                const std::array<std::string, 3>& xvars) {
  require_same_ring(m1.ring(), m2.ring());
  const RingPtr& ring = m1.ring();
  std::array<std::size_t, 3> idx{};
  for (std::size_t i = 0; i < 3; ++i) idx[i] = ring->index_or_throw(xvars[i]);
  if (idx[0] == idx[1] || idx[0] == idx[2] || idx[1] == idx[2])
    throw Error("bilinear pair: xvars must be distinct");
  return BilinearPair{std::move(m1), std::move(m2), idx};
}

PolyMatrix bilinear_coefficient_matrix(const BilinearPair& pair) {
  const RingPtr& ring = pair.m1.ring();
  PolyMatrix c(ring, 3, 2);
  const Polynomial* forms[2] = {&pair.m1, &pair.m2};
  for (std::size_t col = 0; col < 2; ++col) {
    for (const auto& t : forms[col]->terms()) {
      std::size_t xdeg = 0;
      std::size_t which = 0;
      for (std::size_t i = 0; i < 3; ++i) {
        xdeg += t.mono.exp[pair.xvars[i]];
        if (t.mono.exp[pair.xvars[i]] > 0) which = i;
      }
      if (xdeg == 0) throw Error("bilinear pair: term without any xvar: " +
                                 Polynomial::monomial(ring, t.mono, t.coeff).to_string());
      if (xdeg > 1) throw Error("bilinear pair: term nonlinear in the xvars: " +
                                Polynomial::monomial(ring, t.mono, t.coeff).to_string());
      Monomial rest = t.mono;
      rest.exp[pair.xvars[which]] -= 1;
      c.at(which, col) += Polynomial::monomial(ring, std::move(rest), t.coeff);
    }
  }
  return c;
}

UnprojectionResult cramer_unproject(const BilinearPair& pair, std::string_view new_variable) {
  const RingPtr& ring = pair.m1.ring();
  std::size_t s = ring->index_or_throw(new_variable);
  PolyMatrix c = bilinear_coefficient_matrix(pair);
  Polynomial sv = Polynomial::variable(ring, new_variable);
  std::vector<Polynomial> equations;
  for (std::size_t i = 0; i < 3; ++i) {
    std::size_t r1 = (i == 0) ? 1 : 0;
    std::size_t r2 = (i == 2) ? 1 : 2;
    Polynomial minor = c.minor2(r1, r2, 0, 1);
    Polynomial cofactor = (i == 1) ? -minor : minor;
    Polynomial xi = Polynomial::monomial(
        ring, [&] { Monomial m = Monomial::one(ring->size()); m.exp[pair.xvars[i]] = 1; return m; }(), 1);
    equations.push_back(sv * xi - cofactor);
  }
  return UnprojectionResult{s, std::move(equations), std::move(c)};
}

LongEquation long_equation(const std::vector<Polynomial>& equations, std::string_view s,
                           std::string_view t, Deadline deadline) {
  if (equations.empty()) throw NoLongEquation();
  const RingPtr& ring = equations.front().ring();
  std::size_t si = ring->index_or_throw(s);
  std::size_t ti = ring->index_or_throw(t);
  if (si == ti) throw Error("long_equation: s and t must differ");
  for (const auto& e : equations) {
    if (e.degree_in(si) > 1 || e.degree_in(ti) > 1)
      throw Error("long_equation: equations must be linear in s and t");
    for (const auto& term : e.terms())
      if (term.mono.exp[si] > 0 && term.mono.exp[ti] > 0)
        throw Error("long_equation: no equation may contain s*t");
  }

  Monomial stm = Monomial::one(ring->size());
  stm.exp[si] = 1;
  stm.exp[ti] = 1;
  Polynomial st = Polynomial::monomial(ring, std::move(stm), 1);

  std::vector<std::size_t> elim{std::min(si, ti), std::max(si, ti)};
  auto attempt = [&](const Ideal& ideal) -> std::optional<Polynomial> {
    GroebnerBasis gb = buchberger(ideal, MonomialOrder::block(elim), PairStrategy::Normal, deadline);
    Polynomial nf = normal_form(st, gb, deadline);
    if (nf.contains_variable(si) || nf.contains_variable(ti)) return std::nullopt;
    return nf;
  };

  Ideal ideal = Ideal::make(ring, equations);
  if (auto p = attempt(ideal)) return LongEquation{std::move(*p), std::nullopt};

  // The combined unprojection ideal often needs its implicit colon: the
  // derivation cancels one of the remaining variables, so retry on the
  // saturation by each of them in ring order.
  for (std::size_t v = 0; v < ring->size(); ++v) {
    if (v == si || v == ti) continue;
    bool used = false;
    for (const auto& e : equations)
      if (e.contains_variable(v)) {
        used = true;
        break;
      }
    if (!used) continue;
    Ideal sat = saturate(ideal, v, deadline);
    if (auto p = attempt(sat)) return LongEquation{std::move(*p), v};
  }
  throw NoLongEquation();
}

bool equation_set_symmetry(const std::vector<Polynomial>& equations, const VarMap& map) {
  std::vector<Polynomial> before, after;
  before.reserve(equations.size());
  after.reserve(equations.size());
  for (const auto& e : equations) {
    before.push_back(e.canonical_sign());
    after.push_back(e.substitute(map).canonical_sign());
  }
  auto key = [](const Polynomial& p) { return p.to_string(); };
  auto sorter = [&](const Polynomial& x, const Polynomial& y) { return key(x) < key(y); };
  std::sort(before.begin(), before.end(), sorter);
  std::sort(after.begin(), after.end(), sorter);
  return before == after;
}

}  // namespace pfw
