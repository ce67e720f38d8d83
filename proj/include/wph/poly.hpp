#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "wph/rational.hpp"
#include "wph/weights.hpp"

namespace wph {

// Exact-rational sparse polynomial with weighted grading.  Terms live in a
// sorted map (exponent vector -> nonzero coefficient) so that iteration,
// serialization and comparison are deterministic.
class SparsePoly {
 public:
  explicit SparsePoly(WeightSystem w);

  static SparsePoly monomial(const WeightSystem& w, Exponents e, Rational c);

  const WeightSystem& weight_system() const { return weights_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Rational coeff(const Exponents& e) const;

  // The common weighted degree of all terms, or nullopt when the polynomial
  // is zero or inhomogeneous.
  std::optional<long> degree() const;

  long weighted_degree(const Exponents& e) const;

  // Accumulates c * x^e, dropping the term if the sum cancels.
  SparsePoly& add_term(const Exponents& e, const Rational& c);

  friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  SparsePoly operator-() const;
  SparsePoly scaled(const Rational& c) const;
  friend bool operator==(const SparsePoly& a, const SparsePoly& b);

  SparsePoly partial_derivative(std::size_t var) const;

  // Replaces x_var by q everywhere.  Grading is preserved when q is
  // homogeneous of degree w[var]; otherwise the result is generally
  // inhomogeneous (the degree() accessor reports accordingly).
  SparsePoly substitute(std::size_t var, const SparsePoly& q) const;

  Rational evaluate(const std::vector<Rational>& point) const;

 private:
  WeightSystem weights_;
  std::map<Exponents, Rational> terms_;
};

// Dense generic member: every monomial of degree fam.degree appears, with a
// coefficient drawn uniformly from the nonzero integers in [-bound, bound].
// Deterministic in the seed across platforms.
SparsePoly random_member(const HypersurfaceFamily& fam, std::uint64_t seed,
                         long bound = 9);

}  // namespace wph
