// Shared test helpers: deterministic polynomial generators and the exact
// cofactor determinant used as the independent oracle for Pfaffians.
#pragma once

#include <random>

#include "pfw/pfaffian.hpp"
#include "pfw/ring.hpp"

namespace pfw::testing {

inline Polynomial determinant(const std::vector<std::vector<Polynomial>>& m, const RingPtr& ring) {
  std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(ring, 1);
  if (n == 1) return m[0][0];
  Polynomial acc = Polynomial::zero(ring);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Polynomial>> sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      sub.push_back(std::move(row));
    }
    Polynomial term = m[0][j] * determinant(sub, ring);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

inline Polynomial det_oracle(const SkewMatrix& m) {
  std::vector<std::vector<Polynomial>> full(m.size());
  for (std::size_t i = 1; i <= m.size(); ++i)
    for (std::size_t j = 1; j <= m.size(); ++j) full[i - 1].push_back(m.at(i, j));
  return determinant(full, m.ring());
}

inline SkewMatrix random_integer_skew(const RingPtr& r, std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  SkewMatrix m(r, n);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) m.set(i, j, Polynomial::constant(r, coeff(rng)));
  return m;
}

struct RandomPolys {
  RingPtr ring;
  std::mt19937 rng;

  explicit RandomPolys(RingPtr r, unsigned seed = 20240817) : ring(std::move(r)), rng(seed) {}

  Polynomial next(int max_terms = 6, int max_exp = 3, int max_coeff = 9) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> dexp(0, max_exp);
    std::uniform_int_distribution<int> dcoeff(-max_coeff, max_coeff);
    std::vector<Term> terms;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
      Monomial m = Monomial::one(ring->size());
      for (std::size_t v = 0; v < ring->size(); ++v)
        m.exp[v] = static_cast<std::uint32_t>(dexp(rng));
      terms.push_back({std::move(m), Rational(dcoeff(rng))});
    }
    return Polynomial::from_terms(ring, std::move(terms));
  }
};

}  // namespace pfw::testing
