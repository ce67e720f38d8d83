#include "wph/weights.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "wph/errors.hpp"
#include "wph/rational.hpp"

namespace wph {

WeightSystem::WeightSystem(std::vector<long> weights)
    : weights_(std::move(weights)) {
  if (weights_.empty())
    throw std::invalid_argument("a weight system needs at least one weight");
  for (long w : weights_)
    if (w < 1) throw std::invalid_argument("weights must be positive");
}

long WeightSystem::total() const {
  return std::accumulate(weights_.begin(), weights_.end(), 0L);
}

bool WeightSystem::well_formed() const {
  for (std::size_t skip = 0; skip < weights_.size(); ++skip) {
    long g = 0;
    for (std::size_t i = 0; i < weights_.size(); ++i)
      if (i != skip) g = std::gcd(g, weights_[i]);
    if (g != 1) return false;
  }
  return true;
}

WeightSystem normalize_weights(const WeightSystem& w) {
  std::vector<long> v = w.weights();
  // The weight product strictly decreases on every move, so this terminates.
  for (;;) {
    long g = 0;
    for (long x : v) g = std::gcd(g, x);
    if (g > 1)
      for (long& x : v) x /= g;

    bool changed = false;
    for (std::size_t skip = 0; skip < v.size() && !changed; ++skip) {
      long q = 0;
      for (std::size_t i = 0; i < v.size(); ++i)
        if (i != skip) q = std::gcd(q, v[i]);
      if (q > 1) {
        for (std::size_t i = 0; i < v.size(); ++i)
          if (i != skip) v[i] /= q;
        changed = true;
      }
    }
    if (!changed) return WeightSystem(v);
  }
}

long long graded_dim(const WeightSystem& w, long d) {
  if (d < 0) return 0;
  // Unbounded-knapsack table over the variables; exact via big integers.
  std::vector<Integer> table(static_cast<std::size_t>(d) + 1, 0);
  table[0] = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    long wi = w[i];
    for (long j = wi; j <= d; ++j)
      table[static_cast<std::size_t>(j)] +=
          table[static_cast<std::size_t>(j - wi)];
  }
  const Integer& count = table[static_cast<std::size_t>(d)];
  if (!count.fits_slong_p())
    throw std::overflow_error("graded dimension exceeds long range");
  return count.get_si();
}

namespace {

void enumerate_rec(const WeightSystem& w, std::size_t var, long remaining,
                   Exponents& current, std::vector<Exponents>& out,
                   std::size_t cap) {
  if (var + 1 == w.size()) {
    if (remaining % w[var] == 0) {
      if (out.size() >= cap)
        throw ResourceLimitError("monomial enumeration exceeds cap");
      current[var] = static_cast<int>(remaining / w[var]);
      out.push_back(current);
    }
    return;
  }
  // Descending exponent at each level gives descending lex order overall.
  for (long e = remaining / w[var]; e >= 0; --e) {
    current[var] = static_cast<int>(e);
    enumerate_rec(w, var + 1, remaining - e * w[var], current, out, cap);
  }
}

}  // namespace

std::vector<Exponents> enumerate_monomials(const WeightSystem& w, long d,
                                           std::size_t cap) {
  std::vector<Exponents> out;
  if (d < 0) return out;
  Exponents current(w.size(), 0);
  enumerate_rec(w, 0, d, current, out, cap);
  return out;
}

}  // namespace wph
