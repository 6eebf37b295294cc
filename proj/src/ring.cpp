#include "pfw/ring.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace pfw {

RingSpec::RingSpec(std::vector<std::string> names, std::vector<long> weights)
    : names_(std::move(names)), weights_(std::move(weights)) {
  if (names_.size() != weights_.size())
    throw Error("ring: one weight per variable required");
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw Error("ring: empty variable name");
    if (!seen.insert(n).second) throw Error("ring: duplicate variable '" + n + "'");
  }
}

std::optional<std::size_t> RingSpec::index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t RingSpec::index_or_throw(std::string_view name) const {
  auto i = index(name);
  if (!i) throw Error("unknown variable '" + std::string(name) + "'");
  return *i;
}

RingPtr make_ring(std::vector<std::string> names, std::vector<long> weights) {
  return std::make_shared<const RingSpec>(std::move(names), std::move(weights));
}

RingPtr make_ring(std::vector<std::string> names) {
  std::vector<long> weights(names.size(), 1);
  return make_ring(std::move(names), std::move(weights));
}

bool Monomial::is_one() const {
  return std::all_of(exp.begin(), exp.end(), [](std::uint32_t e) { return e == 0; });
}

long long Monomial::total_degree() const {
  long long d = 0;
  for (auto e : exp) d += e;
  return d;
}

long long Monomial::weighted_degree(const RingSpec& ring) const {
  long long d = 0;
  for (std::size_t i = 0; i < exp.size(); ++i) d += static_cast<long long>(exp[i]) * ring.weight(i);
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exp.size(); ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] += other.exp[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] -= other.exp[i];
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exp.size(); ++i) r.exp[i] = std::max(a.exp[i], b.exp[i]);
  return r;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exp.size(); ++i)
    if (exp[i] > 0 && other.exp[i] > 0) return false;
  return true;
}

int default_order_compare(const RingSpec& ring, const Monomial& a, const Monomial& b) {
  long long wa = a.weighted_degree(ring), wb = b.weighted_degree(ring);
  if (wa != wb) return wa < wb ? -1 : 1;
  long long ta = a.total_degree(), tb = b.total_degree();
  if (ta != tb) return ta < tb ? -1 : 1;
  for (std::size_t i = a.exp.size(); i-- > 0;) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? -1 : 1;
  }
  return 0;
}

namespace {

void canonicalize(const RingSpec& ring, std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), [&](const Term& x, const Term& y) {
    return default_order_compare(ring, x.mono, y.mono) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
      if (out.back().coeff == 0) out.pop_back();
    } else if (t.coeff != 0) {
      out.push_back(std::move(t));
    }
  }
  terms = std::move(out);
}

}  // namespace

Polynomial Polynomial::zero(RingPtr ring) {
  Polynomial p;
  p.ring_ = std::move(ring);
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, Rational value) {
  Polynomial p;
  p.ring_ = std::move(ring);
  if (value != 0) p.terms_.push_back({Monomial::one(p.ring_->size()), std::move(value)});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
  std::size_t i = ring->index_or_throw(name);
  Monomial m = Monomial::one(ring->size());
  m.exp[i] = 1;
  return monomial(std::move(ring), std::move(m), 1);
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, Rational coeff) {
  Polynomial p;
  p.ring_ = std::move(ring);
  if (m.exp.size() != p.ring_->size()) throw Error("monomial arity mismatch");
  if (coeff != 0) p.terms_.push_back({std::move(m), std::move(coeff)});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p;
  p.ring_ = std::move(ring);
  canonicalize(*p.ring_, terms);
  p.terms_ = std::move(terms);
  return p;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw Error("leading term of zero polynomial");
  return terms_.front();
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  require_same_ring(ring_, other.ring_);
  const RingSpec& R = *ring_;
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < other.terms_.size()) {
    int c = default_order_compare(R, terms_[i].mono, other.terms_[j].mono);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(other.terms_[j++]);
    } else {
      Rational s = terms_[i].coeff + other.terms_[j].coeff;
      if (s != 0) out.push_back({terms_[i].mono, std::move(s)});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < other.terms_.size(); ++j) out.push_back(other.terms_[j]);
  Polynomial r;
  r.ring_ = ring_;
  r.terms_ = std::move(out);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same_ring(ring_, other.ring_);
  std::vector<Term> prods;
  prods.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : other.terms_) prods.push_back({a.mono * b.mono, a.coeff * b.coeff});
  return from_terms(ring_, std::move(prods));
}

Polynomial Polynomial::pow(unsigned long exponent) const {
  Polynomial result = Polynomial::constant(ring_, 1);
  Polynomial base = *this;
  while (exponent) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

Polynomial Polynomial::scaled(const Rational& factor) const {
  if (factor == 0) return zero(ring_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff *= factor;
  return r;
}

Polynomial Polynomial::fma_sub(const Monomial& shift, const Rational& factor,
                               const Polynomial& other) const {
  const RingSpec& R = *ring_;
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  auto shifted = [&](std::size_t k) { return other.terms_[k].mono * shift; };
  while (i < terms_.size() && j < other.terms_.size()) {
    Monomial sm = shifted(j);
    int c = default_order_compare(R, terms_[i].mono, sm);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back({std::move(sm), -factor * other.terms_[j].coeff});
      ++j;
    } else {
      Rational s = terms_[i].coeff - factor * other.terms_[j].coeff;
      if (s != 0) out.push_back({terms_[i].mono, std::move(s)});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < other.terms_.size(); ++j) out.push_back({shifted(j), -factor * other.terms_[j].coeff});
  Polynomial r;
  r.ring_ = ring_;
  r.terms_ = std::move(out);
  return r;
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == other.terms_[i].mono) || terms_[i].coeff != other.terms_[i].coeff)
      return false;
  return true;
}

Polynomial Polynomial::canonical_sign() const {
  if (terms_.empty()) return *this;
  return terms_.front().coeff > 0 ? *this : -*this;
}

std::optional<long long> Polynomial::weighted_degree() const {
  if (terms_.empty()) throw Error("weighted degree of zero polynomial");
  long long d = terms_.front().mono.weighted_degree(*ring_);
  for (const auto& t : terms_)
    if (t.mono.weighted_degree(*ring_) != d) return std::nullopt;
  return d;
}

long long Polynomial::total_degree_max() const {
  long long d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

bool Polynomial::contains_variable(std::size_t var) const {
  for (const auto& t : terms_)
    if (t.mono.exp[var] > 0) return true;
  return false;
}

long Polynomial::degree_in(std::size_t var) const {
  long d = 0;
  for (const auto& t : terms_) d = std::max<long>(d, t.mono.exp[var]);
  return d;
}

Polynomial Polynomial::substitute(const VarMap& map) const {
  require_same_ring(ring_, map.ring());
  Polynomial result = zero(ring_);
  for (const auto& t : terms_) {
    Polynomial factor = constant(ring_, t.coeff);
    for (std::size_t v = 0; v < t.mono.exp.size(); ++v) {
      if (t.mono.exp[v] == 0) continue;
      if (map.has(v)) {
        factor *= map.image(v).pow(t.mono.exp[v]);
      } else {
        Monomial m = Monomial::one(ring_->size());
        m.exp[v] = t.mono.exp[v];
        factor *= monomial(ring_, std::move(m), 1);
      }
    }
    result += factor;
  }
  return result;
}

Polynomial operator*(const Rational& c, const Polynomial& p) { return p.scaled(c); }

void VarMap::set(std::string_view name, Polynomial image) {
  set(ring_->index_or_throw(name), std::move(image));
}

void VarMap::set(std::size_t var, Polynomial image) {
  if (var >= ring_->size()) throw Error("varmap: variable index out of range");
  require_same_ring(ring_, image.ring());
  images_[var] = std::move(image);
}

Polynomial VarMap::image(std::size_t var) const {
  auto it = images_.find(var);
  if (it != images_.end()) return it->second;
  Monomial m = Monomial::one(ring_->size());
  m.exp[var] = 1;
  return Polynomial::monomial(ring_, std::move(m), 1);
}

VarMap VarMap::then(const VarMap& next) const {
  require_same_ring(ring_, next.ring());
  VarMap out(ring_);
  for (const auto& [v, img] : images_) out.set(v, img.substitute(next));
  for (const auto& [v, img] : next.images_) {
    if (!out.has(v) && images_.find(v) == images_.end()) out.set(v, img);
  }
  return out;
}

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool negative = c < 0;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    if (negative) c = -c;
    bool unit = (c == 1);
    bool any_var = !t.mono.is_one();
    if (!unit || !any_var) os << pfw::to_string(c);
    bool star = !unit && any_var;
    for (std::size_t v = 0; v < t.mono.exp.size(); ++v) {
      if (t.mono.exp[v] == 0) continue;
      if (star) os << "*";
      os << ring_->name(v);
      if (t.mono.exp[v] > 1) os << "^" << t.mono.exp[v];
      star = true;
    }
    first = false;
  }
  return os.str();
}

}  // namespace pfw
