// Exact arithmetic foundation: weighted polynomial rings over the rationals.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace pfw {

using Rational = mpq_class;

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A named, ordered set of variables with integer weights. The declaration
/// order is the canonical variable index used by every monomial order.
class RingSpec {
 public:
  RingSpec(std::vector<std::string> names, std::vector<long> weights);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  long weight(std::size_t i) const { return weights_[i]; }
  std::optional<std::size_t> index(std::string_view name) const;
  std::size_t index_or_throw(std::string_view name) const;

  bool operator==(const RingSpec& other) const {
    return names_ == other.names_ && weights_ == other.weights_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<long> weights_;
};

using RingPtr = std::shared_ptr<const RingSpec>;

RingPtr make_ring(std::vector<std::string> names, std::vector<long> weights);
RingPtr make_ring(std::vector<std::string> names);  // all weights 1

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a.get() == b.get()) return;
  if (!a || !b || !(*a == *b)) throw Error("ring mismatch");
}

/// Exponent vector, one entry per ring variable.
struct Monomial {
  std::vector<std::uint32_t> exp;

  static Monomial one(std::size_t nvars) { return Monomial{std::vector<std::uint32_t>(nvars, 0)}; }

  bool is_one() const;
  long long total_degree() const;
  long long weighted_degree(const RingSpec& ring) const;
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; caller guarantees divisibility.
  Monomial operator/(const Monomial& other) const;
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& other) const;
  bool operator==(const Monomial& other) const { return exp == other.exp; }
};

/// The module-wide default order: weighted degree, then total degree, then
/// reverse-lexicographic with the last ring variable least significant.
/// The total-degree middle step keeps the order a well order when some
/// variables have weight zero.
int default_order_compare(const RingSpec& ring, const Monomial& a, const Monomial& b);

struct Term {
  Monomial mono;
  Rational coeff;
};

class VarMap;

/// Sparse multivariate polynomial in canonical form: terms strictly
/// descending under the ring's default order, no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;  // zero over a null ring; usable only as placeholder

  static Polynomial zero(RingPtr ring);
  static Polynomial constant(RingPtr ring, Rational value);
  static Polynomial variable(RingPtr ring, std::string_view name);
  static Polynomial monomial(RingPtr ring, Monomial m, Rational coeff);
  /// Builds canonical form from arbitrary term soup (sorts, merges, prunes).
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  std::span<const Term> terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const Term& leading_term() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
  Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }
  Polynomial pow(unsigned long exponent) const;
  Polynomial scaled(const Rational& factor) const;
  /// this - t * other, with t given as (monomial, coefficient).
  Polynomial fma_sub(const Monomial& shift, const Rational& factor, const Polynomial& other) const;

  bool operator==(const Polynomial& other) const;
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

  /// Returns p or -p, whichever has a positive leading coefficient.
  Polynomial canonical_sign() const;
  /// Weighted degree if homogeneous, nullopt otherwise; throws on zero.
  std::optional<long long> weighted_degree() const;
  long long total_degree_max() const;
  bool contains_variable(std::size_t var) const;
  /// Degree in a single variable.
  long degree_in(std::size_t var) const;

  Polynomial substitute(const VarMap& map) const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial operator*(const Rational& c, const Polynomial& p);

/// Variable substitution a -> image polynomial; identity where unspecified.
class VarMap {
 public:
  explicit VarMap(RingPtr ring) : ring_(std::move(ring)) {}
  static VarMap identity(RingPtr ring) { return VarMap(std::move(ring)); }

  const RingPtr& ring() const { return ring_; }
  void set(std::string_view name, Polynomial image);
  void set(std::size_t var, Polynomial image);
  bool has(std::size_t var) const { return images_.count(var) != 0; }
  /// Image of a variable (identity when unset).
  Polynomial image(std::size_t var) const;
  const std::map<std::size_t, Polynomial>& images() const { return images_; }

  /// Composition: substitute(p, a.then(b)) == substitute(substitute(p, a), b).
  VarMap then(const VarMap& next) const;

 private:
  RingPtr ring_;
  std::map<std::size_t, Polynomial> images_;
};

std::string to_string(const Rational& q);

}  // namespace pfw
