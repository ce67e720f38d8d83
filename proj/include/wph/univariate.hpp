#pragma once

#include <utility>
#include <vector>

#include "wph/rational.hpp"

namespace wph {

// Dense univariate polynomial over Q; coeffs()[k] multiplies t^k.  The zero
// polynomial has an empty coefficient vector and degree -1.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  static RatPoly constant(const Rational& c);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t k) const;
  Rational leading() const;
  Rational evaluate(const Rational& t) const;

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  RatPoly scaled(const Rational& c) const;
  RatPoly monic() const;
  friend bool operator==(const RatPoly& a, const RatPoly& b) = default;

  // Euclidean division by a nonzero divisor: returns (quotient, remainder).
  std::pair<RatPoly, RatPoly> divmod(const RatPoly& divisor) const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Monic gcd; gcd(0, 0) = 0.
RatPoly poly_gcd(const RatPoly& a, const RatPoly& b);

// Unique interpolant of degree < points.size() through (points[i], values[i]);
// the points must be pairwise distinct.
RatPoly interpolate(const std::vector<Rational>& points,
                    const std::vector<Rational>& values);

}  // namespace wph
