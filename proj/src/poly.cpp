#include "wph/poly.hpp"

#include <random>
#include <stdexcept>

#include "wph/errors.hpp"

namespace wph {

SparsePoly::SparsePoly(WeightSystem w) : weights_(std::move(w)) {}

SparsePoly SparsePoly::monomial(const WeightSystem& w, Exponents e,
                                Rational c) {
  SparsePoly p(w);
  p.add_term(e, c);
  return p;
}

Rational SparsePoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<long> SparsePoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  long d = weighted_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (weighted_degree(e) != d) return std::nullopt;
  return d;
}

long SparsePoly::weighted_degree(const Exponents& e) const {
  if (e.size() != weights_.size())
    throw std::invalid_argument("exponent vector length mismatch");
  long d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0) throw std::invalid_argument("negative exponent");
    d += static_cast<long>(e[i]) * weights_[i];
  }
  return d;
}

SparsePoly& SparsePoly::add_term(const Exponents& e, const Rational& c) {
  weighted_degree(e);  // validates shape
  if (c == 0) return *this;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

namespace {

void require_same_weights(const SparsePoly& a, const SparsePoly& b) {
  if (!(a.weight_system() == b.weight_system()))
    throw WeightMismatchError("operands live over different weight systems");
}

}  // namespace

SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
  require_same_weights(a, b);
  SparsePoly out = a;
  for (const auto& [e, c] : b.terms()) out.add_term(e, c);
  return out;
}

SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) {
  require_same_weights(a, b);
  SparsePoly out = a;
  for (const auto& [e, c] : b.terms()) out.add_term(e, -c);
  return out;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  require_same_weights(a, b);
  SparsePoly out(a.weight_system());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

SparsePoly SparsePoly::operator-() const { return scaled(Rational(-1)); }

SparsePoly SparsePoly::scaled(const Rational& c) const {
  SparsePoly out(weights_);
  if (c == 0) return out;
  for (const auto& [e, coeff] : terms_) out.terms_.emplace(e, coeff * c);
  return out;
}

bool operator==(const SparsePoly& a, const SparsePoly& b) {
  return a.weights_ == b.weights_ && a.terms_ == b.terms_;
}

SparsePoly SparsePoly::partial_derivative(std::size_t var) const {
  if (var >= weights_.size()) throw std::invalid_argument("variable index");
  SparsePoly out(weights_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    d[var] -= 1;
    out.add_term(d, c * e[var]);
  }
  return out;
}

SparsePoly SparsePoly::substitute(std::size_t var, const SparsePoly& q) const {
  if (var >= weights_.size()) throw std::invalid_argument("variable index");
  require_same_weights(*this, q);
  SparsePoly out(weights_);
  for (const auto& [e, c] : terms_) {
    Exponents base = e;
    int k = base[var];
    base[var] = 0;
    SparsePoly term = SparsePoly::monomial(weights_, base, c);
    for (int j = 0; j < k; ++j) term = term * q;
    out = out + term;
  }
  return out;
}

Rational SparsePoly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != weights_.size())
    throw std::invalid_argument("point dimension mismatch");
  Rational total(0);
  for (const auto& [e, c] : terms_) {
    Rational v = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int j = 0; j < e[i]; ++j) v *= point[i];
    total += v;
  }
  return total;
}

namespace {

// Platform-stable uniform draw from the nonzero integers in [-bound, bound]:
// rejection sampling on the standardized mt19937_64 stream.
long draw_nonzero(std::mt19937_64& gen, long bound) {
  const std::uint64_t span = 2 * static_cast<std::uint64_t>(bound) + 1;
  const std::uint64_t limit = (~std::uint64_t{0} / span) * span;
  for (;;) {
    std::uint64_t r = gen();
    if (r >= limit) continue;
    long v = static_cast<long>(r % span) - bound;
    if (v != 0) return v;
  }
}

}  // namespace

SparsePoly random_member(const HypersurfaceFamily& fam, std::uint64_t seed,
                         long bound) {
  if (bound < 1) throw std::invalid_argument("bound must be positive");
  auto monomials = enumerate_monomials(fam.weights, fam.degree);
  if (monomials.empty())
    throw std::invalid_argument("family has no monomials of its degree");
  std::mt19937_64 gen(seed);
  SparsePoly member(fam.weights);
  for (const auto& e : monomials)
    member.add_term(e, Rational(draw_nonzero(gen, bound)));
  return member;
}

}  // namespace wph
