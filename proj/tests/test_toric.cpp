#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pfw/dsl.hpp"
#include "pfw/toric.hpp"

using namespace pfw;

namespace {

Polynomial v(const RingPtr& r, const char* name) { return Polynomial::variable(r, name); }

Workspace embedding_workspace() {
  return parse_workspace(R"(
ring u v w a b c x d e f : weights 1 2 3 6 6 6 6 6 6 6;
varmap embedding {
  a = u^6; b = u^4*v; c = u^2*v^2; x = v^3; d = u^3*w; e = u*v*w; f = w^2;
}
ideal binomials =
  a*c - b^2, x*b - c^2, c*f - e^2, a*f - d^2, b*d - a*e,
  x*d - c*e, b*f - d*e, d*c - b*e, x*a - b*c;
)");
}

}  // namespace

TEST_CASE("pullback") {
  Workspace ws = embedding_workspace();
  MonomialMap map = monomial_map_from_varmap(ws.varmap("embedding"), {"u", "v", "w"});
  CHECK(map.pullback(v(ws.ring, "a")) == v(ws.ring, "u").pow(6));
  for (const auto& g : ws.ideal("binomials")) CHECK(map.pullback(g).is_zero());
  CHECK_THROWS_AS(map.pullback(v(ws.ring, "u")), Error);
}

TEST_CASE("image validation") {
  RingPtr r = make_ring({"u", "a", "b"}, {1, 2, 2});
  MonomialMap map(r, {"u"});
  CHECK_THROWS_AS(map.set_image("a", v(r, "u")), Error);             // weight mismatch
  CHECK_THROWS_AS(map.set_image("a", Rational(2) * v(r, "u").pow(2)), Error);
  CHECK_THROWS_AS(map.set_image("a", v(r, "u") + v(r, "b")), Error);
  map.set_image("a", v(r, "u").pow(2));
  CHECK_THROWS_AS(map.set_image("a", v(r, "u").pow(2)), Error);      // duplicate
}

TEST_CASE("kernel of small maps") {
  RingPtr r = make_ring({"u", "a", "b"}, {1, 1, 1});
  MonomialMap map(r, {"u"});
  map.set_image("a", v(r, "u"));
  map.set_image("b", v(r, "u"));
  Ideal kernel = map.kernel_ideal();
  REQUIRE(kernel.generators.size() == 1);
  CHECK(kernel.generators[0] == v(r, "a") - v(r, "b"));

  RingPtr r2 = make_ring({"u", "a"}, {1, 1});
  MonomialMap single(r2, {"u"});
  single.set_image("a", v(r2, "u"));
  CHECK(single.kernel_ideal().generators.empty());
}

TEST_CASE("kernel generators are binomial and pull back to zero") {
  Workspace ws = embedding_workspace();
  MonomialMap map = monomial_map_from_varmap(ws.varmap("embedding"), {"u", "v", "w"});
  Ideal kernel = map.kernel_ideal();
  CHECK(!kernel.generators.empty());
  for (const auto& g : kernel.generators) {
    CHECK(g.term_count() == 2);
    CHECK(map.pullback(g).is_zero());
  }
}

TEST_CASE("rebasing monomials") {
  RingPtr r = make_ring({"u", "v", "w", "U", "V", "W"}, {1, 2, 3, 3, 3, 3});
  MonomialMap basis(r, {"u", "v", "w"});
  basis.set_image("U", v(r, "u").pow(3));
  basis.set_image("V", v(r, "u") * v(r, "v"));
  basis.set_image("W", v(r, "w"));

  auto mono = [&](const Polynomial& p) { return p.leading_term().mono; };
  std::vector<Monomial> in{mono(v(r, "u").pow(3))};
  auto out = rebase_monomials(in, Monomial::one(r->size()), basis);
  REQUIRE(out.size() == 1);
  CHECK(Polynomial::monomial(r, out[0], 1) == v(r, "U"));

  CHECK_THROWS_AS(rebase_monomials({mono(v(r, "u"))}, Monomial::one(r->size()), basis),
                  NotExpressible);

  // u^6 * u^3 = U^3; u*v*w * u^3 = U*V*W
  auto dp = rebase_monomials({mono(v(r, "u").pow(6)), mono(v(r, "u") * v(r, "v") * v(r, "w"))},
                             mono(v(r, "u").pow(3)), basis);
  CHECK(Polynomial::monomial(r, dp[0], 1) == v(r, "U").pow(3));
  CHECK(Polynomial::monomial(r, dp[1], 1) == v(r, "U") * v(r, "V") * v(r, "W"));
}
