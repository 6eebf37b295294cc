#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pfw/dsl.hpp"
#include "pfw/groebner.hpp"
#include "test_support.hpp"

using namespace pfw;

namespace {

Polynomial v(const RingPtr& r, const char* name) { return Polynomial::variable(r, name); }

std::vector<Polynomial> eq2_generators(const RingPtr& r) {
  Polynomial a = v(r, "a"), b = v(r, "b"), c = v(r, "c"), d = v(r, "d"), e = v(r, "e"),
             f = v(r, "f"), x = v(r, "x");
  return {a * c - b * b, x * b - c * c, c * f - e * e, a * f - d * d, b * d - a * e,
          x * d - c * e, b * f - d * e, d * c - b * e, x * a - b * c};
}

RingPtr v6_ring() {
  return make_ring({"a", "b", "c", "d", "e", "f", "x"}, {6, 6, 6, 6, 6, 6, 6});
}

// S-polynomial reduction check used as a post-hoc property oracle.
bool all_s_polynomials_reduce(const GroebnerBasis& gb) {
  const auto& basis = gb.basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const Term& ti = basis[i].leading_term();
      const Term& tj = basis[j].leading_term();
      Monomial l = lcm(ti.mono, tj.mono);
      Polynomial si = Polynomial::monomial(gb.ring(), l / ti.mono, Rational(1) / ti.coeff);
      Polynomial sj = Polynomial::monomial(gb.ring(), l / tj.mono, Rational(1) / tj.coeff);
      Polynomial spoly = si * basis[i] - sj * basis[j];
      if (!normal_form(spoly, gb).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("monomial orders are well behaved with weight-zero variables") {
  RingPtr r = make_ring({"a", "mu"}, {1, 0});
  Monomial one = Monomial::one(2);
  Monomial mu{{0, 1}};
  Monomial mu2{{0, 2}};
  Monomial a{{1, 0}};
  CHECK(default_order_compare(*r, mu, one) > 0);
  CHECK(default_order_compare(*r, mu2, mu) > 0);
  CHECK(default_order_compare(*r, a, mu2) > 0);
}

TEST_CASE("block orders eliminate") {
  RingPtr r = make_ring({"u", "a", "b"}, {1, 1, 1});
  MonomialOrder ord = MonomialOrder::block({0});
  Monomial u{{1, 0, 0}};
  Monomial ab3{{0, 3, 3}};
  CHECK(ord.compare(*r, u, ab3) > 0);
}

TEST_CASE("buchberger on a single generator") {
  RingPtr r = v6_ring();
  Ideal i = Ideal::make(r, {v(r, "x")});
  GroebnerBasis gb = buchberger(i, MonomialOrder::weighted_degrevlex());
  REQUIRE(gb.basis().size() == 1);
  CHECK(gb.basis()[0] == v(r, "x"));
}

TEST_CASE("generators reduce to zero and the ideal is proper") {
  RingPtr r = v6_ring();
  Ideal i = Ideal::make(r, eq2_generators(r));
  GroebnerBasis gb = buchberger(i, MonomialOrder::weighted_degrevlex());
  for (const auto& g : i.generators) CHECK(normal_form(g, gb).is_zero());
  Polynomial one = Polynomial::constant(r, 1);
  CHECK(normal_form(one, gb) == one);
  CHECK(all_s_polynomials_reduce(gb));
}

TEST_CASE("two-generator basis satisfies the S-polynomial property") {
  RingPtr r = make_ring({"a", "b", "c", "x"}, {1, 1, 1, 1});
  Polynomial a = v(r, "a"), b = v(r, "b"), c = v(r, "c"), x = v(r, "x");
  GroebnerBasis gb = buchberger(Ideal::make(r, {a * c - b * b, x * b - c * c}),
                                MonomialOrder::weighted_degrevlex());
  CHECK(all_s_polynomials_reduce(gb));
}

TEST_CASE("normal form is idempotent and order-checked") {
  RingPtr r = v6_ring();
  GroebnerBasis gb =
      buchberger(Ideal::make(r, eq2_generators(r)), MonomialOrder::weighted_degrevlex());
  testing::RandomPolys gen(r, 3);
  for (int i = 0; i < 30; ++i) {
    Polynomial p = gen.next(5, 2, 7);
    Polynomial nf = normal_form(p, gb);
    CHECK(normal_form(nf, gb) == nf);
    CHECK(is_member(p - nf, Ideal::make(r, eq2_generators(r))));
  }
}

TEST_CASE("colon identity via normal form") {
  RingPtr r = v6_ring();
  Polynomial c = v(r, "c"), d = v(r, "d"), e = v(r, "e"), f = v(r, "f"), x = v(r, "x");
  Polynomial combination = c * (x * d * f - e.pow(3)) - x * d * (c * f - e * e);
  GroebnerBasis gb = buchberger(Ideal::make(r, {e * e * (x * d - c * e)}),
                                MonomialOrder::weighted_degrevlex());
  CHECK(normal_form(combination, gb).is_zero());
}

TEST_CASE("membership basics") {
  RingPtr r = make_ring({"a", "b"}, {1, 1});
  CHECK_FALSE(is_member(v(r, "b"), Ideal::make(r, {v(r, "a")})));
  CHECK(is_member(v(r, "a") * v(r, "b"), Ideal::make(r, {v(r, "a")})));
  CHECK(is_member(Polynomial::zero(r), Ideal::make(r, {})));
  CHECK_FALSE(is_member(Polynomial::constant(r, 1), Ideal::make(r, {})));
}

TEST_CASE("ideal equality under permutation and rescaling") {
  RingPtr r = v6_ring();
  auto gens = eq2_generators(r);
  std::vector<Polynomial> shuffled;
  for (std::size_t i = gens.size(); i-- > 0;)
    shuffled.push_back(gens[i].scaled(Rational(i % 2 ? 3 : -2, 5)));
  CHECK(ideals_equal(Ideal::make(r, gens), Ideal::make(r, shuffled)));

  std::vector<Polynomial> short_list(gens.begin(), gens.end() - 1);
  CHECK_FALSE(ideals_equal(Ideal::make(r, gens), Ideal::make(r, short_list)));
}

TEST_CASE("elimination") {
  RingPtr r = make_ring({"x", "y"}, {1, 1});
  Ideal i = Ideal::make(r, {v(r, "x") - v(r, "y")});
  Ideal none = eliminate(i, {0});
  CHECK(none.generators.empty());

  Ideal same = eliminate(i, {});
  REQUIRE(same.generators.size() == 1);
  CHECK(is_member(v(r, "x") - v(r, "y"), same));
}

TEST_CASE("saturation strips a variable factor") {
  RingPtr r = make_ring({"x", "y"}, {1, 1});
  Ideal i = Ideal::make(r, {v(r, "x") * v(r, "y")});
  Ideal sat = saturate(i, 0);
  REQUIRE(sat.generators.size() == 1);
  CHECK(sat.generators[0] == v(r, "y"));
}

TEST_CASE("reduced basis does not depend on the pair strategy") {
  RingPtr r = v6_ring();
  Ideal i = Ideal::make(r, eq2_generators(r));
  GroebnerBasis normal = buchberger(i, MonomialOrder::weighted_degrevlex(), PairStrategy::Normal);
  GroebnerBasis fifo = buchberger(i, MonomialOrder::weighted_degrevlex(), PairStrategy::Fifo);
  CHECK(normal.basis() == fifo.basis());

  GroebnerBasis lex_n = buchberger(i, MonomialOrder::lex(), PairStrategy::Normal);
  GroebnerBasis lex_f = buchberger(i, MonomialOrder::lex(), PairStrategy::Fifo);
  CHECK(lex_n.basis() == lex_f.basis());
}

TEST_CASE("deadline aborts long computations") {
  RingPtr r = make_ring({"a", "b", "c", "d", "e", "f", "x"}, {6, 6, 6, 6, 6, 6, 6});
  Ideal i = Ideal::make(r, eq2_generators(r));
  Deadline expired{std::chrono::steady_clock::now() - std::chrono::seconds(1)};
  CHECK_THROWS_AS(buchberger(i, MonomialOrder::weighted_degrevlex(), PairStrategy::Normal, expired),
                  BudgetExceeded);
}

TEST_CASE("order mismatch between polynomial ring and basis ring is rejected") {
  RingPtr r1 = make_ring({"a", "b"}, {1, 1});
  RingPtr r2 = make_ring({"a", "c"}, {1, 1});
  GroebnerBasis gb = buchberger(Ideal::make(r1, {v(r1, "a")}), MonomialOrder::weighted_degrevlex());
  CHECK_THROWS_AS(normal_form(v(r2, "c"), gb), Error);
}
