#include "wph/univariate.hpp"

#include <stdexcept>

namespace wph {

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

RatPoly RatPoly::constant(const Rational& c) {
  return RatPoly(std::vector<Rational>{c});
}

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RatPoly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational RatPoly::leading() const {
  if (is_zero()) throw std::invalid_argument("leading of zero polynomial");
  return coeffs_.back();
}

Rational RatPoly::evaluate(const Rational& t) const {
  Rational acc(0);
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * t + coeffs_[k];
  return acc;
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()),
                            Rational(0));
  for (std::size_t k = 0; k < out.size(); ++k)
    out[k] = a.coeff(k) + b.coeff(k);
  return RatPoly(std::move(out));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()),
                            Rational(0));
  for (std::size_t k = 0; k < out.size(); ++k)
    out[k] = a.coeff(k) - b.coeff(k);
  return RatPoly(std::move(out));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return RatPoly();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1,
                            Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RatPoly(std::move(out));
}

RatPoly RatPoly::scaled(const Rational& c) const {
  if (c == 0) return RatPoly();
  std::vector<Rational> out = coeffs_;
  for (Rational& x : out) x *= c;
  return RatPoly(std::move(out));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(1 / leading());
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("division by zero");
  RatPoly rem = *this;
  const int dd = divisor.degree();
  if (rem.degree() < dd) return {RatPoly(), rem};
  std::vector<Rational> q(static_cast<std::size_t>(rem.degree() - dd) + 1,
                          Rational(0));
  const Rational lead = divisor.leading();
  while (!rem.is_zero() && rem.degree() >= dd) {
    const int shift = rem.degree() - dd;
    const Rational factor = rem.leading() / lead;
    q[static_cast<std::size_t>(shift)] = factor;
    std::vector<Rational> sub(static_cast<std::size_t>(shift), Rational(0));
    sub.resize(static_cast<std::size_t>(shift) + divisor.coeffs_.size());
    for (std::size_t k = 0; k < divisor.coeffs_.size(); ++k)
      sub[static_cast<std::size_t>(shift) + k] = divisor.coeffs_[k] * factor;
    rem = rem - RatPoly(std::move(sub));
  }
  return {RatPoly(std::move(q)), rem};
}

RatPoly poly_gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a.monic(), y = b.monic();
  while (!y.is_zero()) {
    RatPoly r = x.divmod(y).second;
    x = std::move(y);
    y = r.monic();  // monic remainders keep coefficient growth in check
  }
  return x;
}

RatPoly interpolate(const std::vector<Rational>& points,
                    const std::vector<Rational>& values) {
  if (points.size() != values.size())
    throw std::invalid_argument("interpolation size mismatch");
  // Newton's divided differences.
  const std::size_t n = points.size();
  std::vector<Rational> coef = values;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n; i-- > level;)
      coef[i] = (coef[i] - coef[i - 1]) / (points[i] - points[i - level]);
  RatPoly result;
  for (std::size_t i = n; i-- > 0;) {
    RatPoly factor(std::vector<Rational>{-points[i], Rational(1)});
    result = result * factor + RatPoly::constant(coef[i]);
  }
  return result;
}

}  // namespace wph
