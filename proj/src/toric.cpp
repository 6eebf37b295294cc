#include "pfw/toric.hpp"

#include <algorithm>

namespace pfw {

MonomialMap::MonomialMap(RingPtr ring, std::vector<std::string> source_variables)
    : ring_(std::move(ring)) {
  for (const auto& name : source_variables) {
    std::size_t idx = ring_->index_or_throw(name);
    if (std::find(sources_.begin(), sources_.end(), idx) != sources_.end())
      throw Error("monomial map: duplicate source variable '" + name + "'");
    sources_.push_back(idx);
  }
}

void MonomialMap::set_image(std::string_view target_variable, const Polynomial& image_monomial) {
  std::size_t target = ring_->index_or_throw(target_variable);
  if (std::find(sources_.begin(), sources_.end(), target) != sources_.end())
    throw Error("monomial map: source variable cannot have an image");
  if (image_monomial.term_count() != 1 || image_monomial.leading_term().coeff != 1)
    throw Error("monomial map: image must be a single monomial with coefficient 1");
  const Monomial& mono = image_monomial.leading_term().mono;
  for (std::size_t v = 0; v < ring_->size(); ++v) {
    if (mono.exp[v] == 0) continue;
    if (std::find(sources_.begin(), sources_.end(), v) == sources_.end())
      throw Error("monomial map: image must involve only source variables");
  }
  if (mono.weighted_degree(*ring_) != ring_->weight(target))
    throw Error("monomial map: image weight must match the weight of '" +
                ring_->name(target) + "'");
  for (const auto& [t, m] : images_)
    if (t == target) throw Error("monomial map: duplicate image for '" + ring_->name(target) + "'");
  images_.emplace_back(target, mono);
}

Polynomial MonomialMap::pullback(const Polynomial& p) const {
  require_same_ring(ring_, p.ring());
  VarMap vm(ring_);
  for (const auto& [target, mono] : images_) vm.set(target, Polynomial::monomial(ring_, mono, 1));
  for (std::size_t v = 0; v < ring_->size(); ++v) {
    if (!p.contains_variable(v)) continue;
    if (!vm.has(v)) throw Error("pullback: variable '" + ring_->name(v) + "' has no image");
  }
  return p.substitute(vm);
}

Ideal MonomialMap::kernel_ideal(Deadline deadline) const {
  std::vector<Polynomial> gens;
  for (const auto& [target, mono] : images_) {
    Monomial tm = Monomial::one(ring_->size());
    tm.exp[target] = 1;
    gens.push_back(Polynomial::monomial(ring_, std::move(tm), 1) -
                   Polynomial::monomial(ring_, mono, 1));
  }
  return eliminate(Ideal::make(ring_, std::move(gens)), sources_, deadline);
}

MonomialMap monomial_map_from_varmap(const VarMap& map, std::vector<std::string> source_variables) {
  MonomialMap mm(map.ring(), std::move(source_variables));
  for (const auto& [target, image] : map.images())
    mm.set_image(map.ring()->name(target), image);
  return mm;
}

namespace {

bool rebase_one(const MonomialMap& basis, const Monomial& goal, std::size_t next,
                Monomial& accumulated, Monomial& result) {
  const auto& images = basis.images();
  if (next == images.size()) {
    return accumulated == goal;
  }
  const auto& [target, image] = images[next];
  // Bound the exponent of this basis element by the remaining budget.
  std::size_t bound = 0;
  bool bounded = false;
  for (std::size_t v = 0; v < image.exp.size(); ++v) {
    if (image.exp[v] == 0) continue;
    std::size_t avail = goal.exp[v] - accumulated.exp[v];
    std::size_t b = avail / image.exp[v];
    bound = bounded ? std::min(bound, b) : b;
    bounded = true;
  }
  if (!bounded) bound = 0;
  for (std::size_t e = 0; e <= bound; ++e) {
    bool feasible = true;
    Monomial trial = accumulated;
    for (std::size_t v = 0; v < image.exp.size(); ++v) {
      trial.exp[v] += static_cast<std::uint32_t>(e) * image.exp[v];
      if (trial.exp[v] > goal.exp[v]) feasible = false;
    }
    if (!feasible) continue;
    if (rebase_one(basis, goal, next + 1, trial, result)) {
      result.exp[target] += static_cast<std::uint32_t>(e);
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<Monomial> rebase_monomials(const std::vector<Monomial>& monomials,
                                       const Monomial& multiplier, const MonomialMap& basis) {
  const RingPtr& ring = basis.ring();
  std::vector<Monomial> out;
  for (const auto& mono : monomials) {
    Monomial goal = mono * multiplier;
    Monomial accumulated = Monomial::one(ring->size());
    Monomial result = Monomial::one(ring->size());
    if (!rebase_one(basis, goal, 0, accumulated, result))
      throw NotExpressible(Polynomial::monomial(ring, goal, 1).to_string());
    out.push_back(std::move(result));
  }
  return out;
}

}  // namespace pfw
