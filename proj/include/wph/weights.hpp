#pragma once

#include <cstddef>
#include <vector>

namespace wph {

// Weights (w0,...,wn) of a weighted projective space P[w0,...,wn].  Ambient
// spaces have n >= 1; length-one systems appear as residuals of point strata.
class WeightSystem {
 public:
  explicit WeightSystem(std::vector<long> weights);

  std::size_t size() const { return weights_.size(); }
  long operator[](std::size_t i) const { return weights_[i]; }
  const std::vector<long>& weights() const { return weights_; }
  long total() const;

  // True iff the weights omitting any one index have gcd 1.
  bool well_formed() const;

  friend bool operator==(const WeightSystem&, const WeightSystem&) = default;

 private:
  std::vector<long> weights_;
};

// Iterates the well-forming moves to a fixpoint: (a) divide all weights by
// their common gcd; (b) if the weights omitting index i share a factor q > 1,
// divide every weight except w_i by q.  The result defines an isomorphic
// weighted projective space.
WeightSystem normalize_weights(const WeightSystem& w);

// Number of exponent vectors e >= 0 with sum_i e_i w_i = d, by dynamic
// programming over the variables.  d < 0 gives 0.  Throws std::overflow_error
// when the count exceeds the long long range.
long long graded_dim(const WeightSystem& w, long d);

using Exponents = std::vector<int>;

// All exponent vectors of weighted degree d, duplicate-free, in descending
// lexicographic order.  Throws ResourceLimitError when the count exceeds cap.
std::vector<Exponents> enumerate_monomials(const WeightSystem& w, long d,
                                           std::size_t cap = 1000000);

struct HypersurfaceFamily {
  WeightSystem weights;
  long degree;

  // Adjunction: the generic member has trivial canonical sheaf iff the degree
  // equals the weight sum.
  bool calabi_yau() const { return degree == weights.total(); }

  friend bool operator==(const HypersurfaceFamily&,
                         const HypersurfaceFamily&) = default;
};

}  // namespace wph
