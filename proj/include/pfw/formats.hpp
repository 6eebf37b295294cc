// The 6x6 extrasymmetric format and the Tom_i / Jerry_jk membership
// conditions, with witness-producing checkers.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pfw/matrix.hpp"
#include "pfw/pfaffian.hpp"
#include "pfw/ring.hpp"

namespace pfw {

/// Data of an extrasymmetric matrix [[B, A], [-A, lambda*B]]: A symmetric,
/// B skew, lambda a scalar entry.
struct ExtrasymmetricSpec {
  PolyMatrix a_symmetric;                 // 3x3, only the upper triangle is read
  Polynomial b12, b13, b23;               // upper entries of the skew block
  Polynomial lambda;
};

SkewMatrix build_extrasymmetric(const ExtrasymmetricSpec& spec);

/// Recovers (A, B, lambda-scaled B) blocks from a 6x6 matrix.
ExtrasymmetricSpec extract_extrasymmetric(const SkewMatrix& m, Polynomial lambda);

enum class RepeatKind { Sign, LambdaMultiple };

struct ExtrasymmetricReport {
  struct Repeat {
    std::vector<std::size_t> quadruple;
    std::vector<std::size_t> matches;  // quadruple of the earlier representative
    RepeatKind kind;
  };
  std::vector<Polynomial> distinct;  // canonical-sign representatives, first-seen order
  std::vector<std::vector<std::size_t>> distinct_quadruples;
  std::vector<Repeat> repeats;
  std::vector<std::vector<std::size_t>> zeros;
};

/// Partitions the 15 principal 4x4 Pfaffians into distinct classes,
/// repeats (equal up to sign, or a lambda multiple of an earlier class)
/// and identically-zero entries.
ExtrasymmetricReport analyze_extrasymmetric(const SkewMatrix& m, const Polynomial& lambda);

/// Complete intersection ideal generated by distinct coordinate variables;
/// membership is per-term divisibility.
class CIIdeal {
 public:
  CIIdeal(RingPtr ring, std::vector<std::string> variables);

  const RingPtr& ring() const { return ring_; }
  const std::vector<std::size_t>& variables() const { return vars_; }
  bool contains(const Polynomial& p) const;
  /// Terms of p divisible by none of the generators.
  std::vector<Polynomial> offending_terms(const Polynomial& p) const;
  /// True when p is exactly one generator variable with coefficient 1.
  bool is_generator_variable(const Polynomial& p) const;

 private:
  RingPtr ring_;
  std::vector<std::size_t> vars_;
};

struct EntryWitness {
  std::size_t i, j;
  Polynomial entry;
  std::vector<Polynomial> offending;
};

struct TomCheck {
  bool pass;
  std::vector<EntryWitness> witnesses;
};

struct JerryCheck {
  bool pass;
  bool pivot_is_variable;
  std::vector<EntryWitness> witnesses;
};

/// Tom_i: the 6 entries outside row/column i lie in the c.i. ideal.
TomCheck tom_check(const SkewMatrix& m, std::size_t i, const CIIdeal& ci);

/// Jerry_jk: the 7 entries in rows/columns j and k lie in the c.i. ideal;
/// also reports whether the pivot m_jk is a single ideal variable.
JerryCheck jerry_check(const SkewMatrix& m, std::size_t j, std::size_t k, const CIIdeal& ci);

}  // namespace pfw
