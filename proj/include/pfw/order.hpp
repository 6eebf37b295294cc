// Monomial orders: degrevlex, lex, weighted degrevlex, and block elimination.
#pragma once

#include <vector>

#include "pfw/ring.hpp"

namespace pfw {

class MonomialOrder {
 public:
  enum class Kind { Degrevlex, Lex, WeightedDegrevlex, Block };

  static MonomialOrder degrevlex() { return MonomialOrder(Kind::Degrevlex, {}); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}); }
  static MonomialOrder weighted_degrevlex() { return MonomialOrder(Kind::WeightedDegrevlex, {}); }
  /// Block order: the listed variables are eliminated first; each block is
  /// compared by total degree, then reverse lexicographically.
  static MonomialOrder block(std::vector<std::size_t> eliminate_first) {
    return MonomialOrder(Kind::Block, std::move(eliminate_first));
  }

  Kind kind() const { return kind_; }
  const std::vector<std::size_t>& eliminated() const { return elim_; }

  /// <0, 0, >0 as a < b, a == b, a > b.
  int compare(const RingSpec& ring, const Monomial& a, const Monomial& b) const;

  bool operator==(const MonomialOrder& other) const {
    return kind_ == other.kind_ && elim_ == other.elim_;
  }

  std::string to_string(const RingSpec& ring) const;

 private:
  MonomialOrder(Kind kind, std::vector<std::size_t> elim) : kind_(kind), elim_(std::move(elim)) {}

  Kind kind_;
  std::vector<std::size_t> elim_;
};

}  // namespace pfw
