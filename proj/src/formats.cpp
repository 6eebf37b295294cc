#include "pfw/formats.hpp"

#include <algorithm>

namespace pfw {

SkewMatrix build_extrasymmetric(const ExtrasymmetricSpec& spec) {
  const RingPtr& ring = spec.a_symmetric.ring();
  if (spec.a_symmetric.rows() != 3 || spec.a_symmetric.cols() != 3)
    throw Error("extrasymmetric: A must be 3x3");
  SkewMatrix m(ring, 6);
  m.set(1, 2, spec.b12);
  m.set(1, 3, spec.b13);
  m.set(2, 3, spec.b23);
  // top right block: A, row-wise
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) {
      const Polynomial& entry =
          r <= c ? spec.a_symmetric.at(r, c) : spec.a_symmetric.at(c, r);
      m.set(r + 1, c + 4, entry);
    }
  // bottom right block: lambda * B
  m.set(4, 5, spec.lambda * spec.b12);
  m.set(4, 6, spec.lambda * spec.b13);
  m.set(5, 6, spec.lambda * spec.b23);
  return m;
}

ExtrasymmetricSpec extract_extrasymmetric(const SkewMatrix& m, Polynomial lambda) {
  if (m.size() != 6) throw Error("extrasymmetric: size must be 6");
  PolyMatrix a(m.ring(), 3, 3);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) a.at(r, c) = m.at(r + 1, c + 4);
  return ExtrasymmetricSpec{std::move(a), m.at(1, 2), m.at(1, 3), m.at(2, 3), std::move(lambda)};
}

ExtrasymmetricReport analyze_extrasymmetric(const SkewMatrix& m, const Polynomial& lambda) {
  if (m.size() != 6) throw Error("analyze_extrasymmetric: size must be 6");
  ExtrasymmetricReport report;
  for (const auto& [quadruple, pf] : sub_pfaffians_4of6(m)) {
    if (pf.is_zero()) {
      report.zeros.push_back(quadruple);
      continue;
    }
    Polynomial canon = pf.canonical_sign();
    bool matched = false;
    for (std::size_t k = 0; k < report.distinct.size() && !matched; ++k) {
      if (canon == report.distinct[k]) {
        report.repeats.push_back({quadruple, report.distinct_quadruples[k], RepeatKind::Sign});
        matched = true;
      } else if (canon == (lambda * report.distinct[k]).canonical_sign()) {
        report.repeats.push_back(
            {quadruple, report.distinct_quadruples[k], RepeatKind::LambdaMultiple});
        matched = true;
      }
    }
    if (!matched) {
      report.distinct.push_back(std::move(canon));
      report.distinct_quadruples.push_back(quadruple);
    }
  }
  return report;
}

CIIdeal::CIIdeal(RingPtr ring, std::vector<std::string> variables) : ring_(std::move(ring)) {
  for (const auto& name : variables) {
    std::size_t idx = ring_->index_or_throw(name);
    if (std::find(vars_.begin(), vars_.end(), idx) != vars_.end())
      throw Error("c.i. ideal: duplicate variable '" + name + "'");
    vars_.push_back(idx);
  }
}

bool CIIdeal::contains(const Polynomial& p) const {
  for (const auto& t : p.terms()) {
    bool divisible = false;
    for (auto v : vars_)
      if (t.mono.exp[v] > 0) {
        divisible = true;
        break;
      }
    if (!divisible) return false;
  }
  return true;
}

std::vector<Polynomial> CIIdeal::offending_terms(const Polynomial& p) const {
  std::vector<Polynomial> out;
  for (const auto& t : p.terms()) {
    bool divisible = false;
    for (auto v : vars_)
      if (t.mono.exp[v] > 0) {
        divisible = true;
        break;
      }
    if (!divisible) out.push_back(Polynomial::monomial(ring_, t.mono, t.coeff));
  }
  return out;
}

bool CIIdeal::is_generator_variable(const Polynomial& p) const {
  if (p.term_count() != 1) return false;
  const Term& t = p.leading_term();
  if (t.coeff != 1 || t.mono.total_degree() != 1) return false;
  for (auto v : vars_)
    if (t.mono.exp[v] == 1) return true;
  return false;
}

namespace {

void check_entry(const SkewMatrix& m, std::size_t i, std::size_t j, const CIIdeal& ci,
                 std::vector<EntryWitness>& witnesses) {
  Polynomial entry = m.at(i, j);
  if (entry.is_zero() || ci.contains(entry)) return;
  witnesses.push_back({i, j, entry, ci.offending_terms(entry)});
}

}  // namespace

TomCheck tom_check(const SkewMatrix& m, std::size_t i, const CIIdeal& ci) {
  if (i < 1 || i > m.size()) throw Error("tom_check: index out of range");
  TomCheck result{true, {}};
  for (std::size_t r = 1; r <= m.size(); ++r)
    for (std::size_t c = r + 1; c <= m.size(); ++c) {
      if (r == i || c == i) continue;
      check_entry(m, r, c, ci, result.witnesses);
    }
  result.pass = result.witnesses.empty();
  return result;
}

JerryCheck jerry_check(const SkewMatrix& m, std::size_t j, std::size_t k, const CIIdeal& ci) {
  if (j < 1 || j > m.size() || k < 1 || k > m.size()) throw Error("jerry_check: index out of range");
  if (j == k) throw Error("jerry_check: row indices must differ");
  JerryCheck result{true, false, {}};
  for (std::size_t r = 1; r <= m.size(); ++r)
    for (std::size_t c = r + 1; c <= m.size(); ++c) {
      if (r != j && r != k && c != j && c != k) continue;
      check_entry(m, r, c, ci, result.witnesses);
    }
  result.pass = result.witnesses.empty();
  result.pivot_is_variable = ci.is_generator_variable(m.at(std::min(j, k), std::max(j, k)));
  return result;
}

}  // namespace pfw
