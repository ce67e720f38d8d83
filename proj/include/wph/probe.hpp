#pragma once

#include "wph/poly.hpp"
#include "wph/strata.hpp"

namespace wph {

// Decides quasi-smoothness of a curve {form = 0} in a three-variable weighted
// projective plane with weights (1,1,c) up to order: true iff the three
// partial derivatives have no common projective zero.  Exact and complete;
// works chart by chart with resultant pencils.
bool is_quasi_smooth_curve(const SparsePoly& form);

// Restricts the member to a plane stratum, rescales the residual weights by
// their common gcd, and runs the smoothness decision.  Throws ModelError when
// the residual does not rescale to weights (1,1,c), and std::invalid_argument
// when the member restricts to zero on the stratum.
bool quasi_smooth_probe(const SparsePoly& member, const Stratum& s);

}  // namespace wph
