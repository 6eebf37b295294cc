#include "pfw/order.hpp"

#include <algorithm>
#include <sstream>

namespace pfw {

namespace {

int revlex_on(const std::vector<std::size_t>& vars, const Monomial& a, const Monomial& b) {
  long long da = 0, db = 0;
  for (auto v : vars) {
    da += a.exp[v];
    db += b.exp[v];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = vars.size(); i-- > 0;) {
    std::size_t v = vars[i];
    if (a.exp[v] != b.exp[v]) return a.exp[v] > b.exp[v] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const RingSpec& ring, const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::WeightedDegrevlex:
      return default_order_compare(ring, a, b);
    case Kind::Degrevlex: {
      long long ta = a.total_degree(), tb = b.total_degree();
      if (ta != tb) return ta < tb ? -1 : 1;
      for (std::size_t i = a.exp.size(); i-- > 0;)
        if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? -1 : 1;
      return 0;
    }
    case Kind::Lex: {
      for (std::size_t i = 0; i < a.exp.size(); ++i)
        if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? -1 : 1;
      return 0;
    }
    case Kind::Block: {
      int c = revlex_on(elim_, a, b);
      if (c != 0) return c;
      auto eliminated = [&](std::size_t v) {
        return std::find(elim_.begin(), elim_.end(), v) != elim_.end();
      };
      long long da = 0, db = 0;
      for (std::size_t v = 0; v < ring.size(); ++v) {
        if (eliminated(v)) continue;
        da += a.exp[v];
        db += b.exp[v];
      }
      if (da != db) return da < db ? -1 : 1;
      for (std::size_t v = ring.size(); v-- > 0;) {
        if (eliminated(v)) continue;
        if (a.exp[v] != b.exp[v]) return a.exp[v] > b.exp[v] ? -1 : 1;
      }
      return 0;
    }
  }
  return 0;
}

std::string MonomialOrder::to_string(const RingSpec& ring) const {
  switch (kind_) {
    case Kind::Degrevlex:
      return "degrevlex";
    case Kind::Lex:
      return "lex";
    case Kind::WeightedDegrevlex:
      return "weighted-degrevlex";
    case Kind::Block: {
      std::ostringstream os;
      os << "elim:";
      for (std::size_t i = 0; i < elim_.size(); ++i) {
        if (i) os << ",";
        os << ring.name(elim_[i]);
      }
      return os.str();
    }
  }
  return "";
}

}  // namespace pfw
