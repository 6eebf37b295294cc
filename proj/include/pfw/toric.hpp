// Monomial maps, pullback, implicitization by elimination, and monomial
// re-basing.
#pragma once

#include <string>
#include <vector>

#include "pfw/groebner.hpp"
#include "pfw/ring.hpp"

namespace pfw {

/// Assignment of target variables to monomials in the source variables,
/// inside one joint ring. Every image is a single monomial with
/// coefficient 1 whose weighted degree equals the target variable weight.
class MonomialMap {
 public:
  MonomialMap(RingPtr ring, std::vector<std::string> source_variables);

  void set_image(std::string_view target_variable, const Polynomial& image_monomial);

  const RingPtr& ring() const { return ring_; }
  const std::vector<std::size_t>& sources() const { return sources_; }
  const std::vector<std::pair<std::size_t, Monomial>>& images() const { return images_; }

  /// Ring homomorphism sending each target variable to its image.
  Polynomial pullback(const Polynomial& p) const;

  /// The ideal of all relations of the map: eliminate the source variables
  /// from (t_i - image_i). Every generator pulls back to zero.
  Ideal kernel_ideal(Deadline deadline = {}) const;

 private:
  RingPtr ring_;
  std::vector<std::size_t> sources_;
  std::vector<std::pair<std::size_t, Monomial>> images_;  // target var -> monomial
};

/// Builds a MonomialMap from a workspace varmap whose images must be
/// monomials over the source variables.
MonomialMap monomial_map_from_varmap(const VarMap& map, std::vector<std::string> source_variables);

struct NotExpressible : Error {
  explicit NotExpressible(const std::string& monomial)
      : Error("monomial not expressible in the basis: " + monomial) {}
};

/// Rewrites multiplier*mon for each given monomial as a monomial in the
/// basis images; throws NotExpressible naming the offending monomial.
std::vector<Monomial> rebase_monomials(const std::vector<Monomial>& monomials,
                                       const Monomial& multiplier, const MonomialMap& basis);

}  // namespace pfw
