#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wph/poly.hpp"

namespace wph {

// Infinitesimal graded substitution x_i -> x_i + eps p_i with p_i homogeneous
// of degree w_i; acts on polynomials as f -> sum_i p_i df/dx_i.
struct GradedDerivation {
  std::vector<SparsePoly> images;  // p_i, one per variable

  SparsePoly apply(const SparsePoly& f) const;
};

// Basis {monomial of degree w_i placed in slot i}; its length equals
// sum_i dim S_{w_i}.
std::vector<GradedDerivation> derivation_basis(const WeightSystem& w);

// p_i = w_i x_i; multiplies a homogeneous degree-d form by d.
GradedDerivation euler_derivation(const WeightSystem& w);

// Dimension of {D : D(f) = lambda f for some lambda}, by exact kernel
// computation of the linear system in the derivation coefficients and lambda.
// At least 1 for nonzero homogeneous f (the Euler derivation).
long long stabilizer_dim(const SparsePoly& f);

// The variable z with 2 w_z = degree when exactly one exists; nullopt when
// none does.  Throws std::invalid_argument when several qualify.
std::optional<std::size_t> forced_involution(const HypersurfaceFamily& fam);

struct SquareCompletion {
  SparsePoly result;     // no z-linear term remains
  std::size_t variable;  // z
  SparsePoly shift;      // z was replaced by z + shift
};

// Removes the z-linear part of f = c z^2 + z h + r via z -> z - h / (2c).
// Throws ModelError when the z^2 coefficient vanishes (member not general).
SquareCompletion complete_square(const SparsePoly& f, std::size_t z);

// True iff the family forces an involution and f, after completing the
// square, is invariant under z -> -z; certifies Aut contains Z/2.
bool involution_check(const SparsePoly& f, const HypersurfaceFamily& fam);

}  // namespace wph
