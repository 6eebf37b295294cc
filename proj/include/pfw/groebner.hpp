// Buchberger's algorithm, normal forms, and the ideal membership /
// equality / elimination oracle.
#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "pfw/order.hpp"
#include "pfw/ring.hpp"

namespace pfw {

struct BudgetExceeded : Error {
  BudgetExceeded() : Error("computation budget exceeded") {}
};

/// Optional wall-clock deadline threaded through the long-running loops.
struct Deadline {
  std::optional<std::chrono::steady_clock::time_point> at;
  void check() const {
    if (at && std::chrono::steady_clock::now() > *at) throw BudgetExceeded();
  }
};

struct Ideal {
  RingPtr ring;
  std::vector<Polynomial> generators;

  static Ideal make(RingPtr ring, std::vector<Polynomial> gens);
};

/// How ties between pending S-pairs are broken. Both strategies must produce
/// the same reduced basis; 'Fifo' exists to test exactly that.
enum class PairStrategy { Normal, Fifo };

class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, MonomialOrder order, std::vector<Polynomial> basis)
      : ring_(std::move(ring)), order_(std::move(order)), basis_(std::move(basis)) {}

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& basis() const { return basis_; }

 private:
  RingPtr ring_;
  MonomialOrder order_;
  std::vector<Polynomial> basis_;
};

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order,
                         PairStrategy strategy = PairStrategy::Normal, Deadline deadline = {});

/// Remainder of multivariate division of p by the basis; no term of the
/// result is divisible by any basis leading monomial.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis, Deadline deadline = {});

bool is_member(const Polynomial& p, const Ideal& ideal, Deadline deadline = {});

bool ideals_equal(const Ideal& left, const Ideal& right, Deadline deadline = {});

/// Generators of the elimination ideal (intersection with the subring
/// avoiding the dropped variables). The result is itself a Groebner basis
/// of that intersection.
Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& drop, Deadline deadline = {});

/// Saturation (I : v^inf) computed with one auxiliary inverse variable.
Ideal saturate(const Ideal& ideal, std::size_t var, Deadline deadline = {});

}  // namespace pfw
