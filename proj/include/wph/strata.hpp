#pragma once

#include <string>
#include <vector>

#include "wph/weights.hpp"

namespace wph {

// Coordinate stratum Pi_I = {x_i = 0 : i in vanishing} of a weighted
// projective space, together with the cyclic stabilizer of its generic point.
struct Stratum {
  std::vector<int> vanishing;         // I, ascending
  std::vector<int> residual_indices;  // complement of I, ascending
  WeightSystem residual;              // weights at the residual indices
  long stabilizer_order;              // m = gcd of the residual weights
  std::vector<long> transverse_weights;  // weights at I, reduced mod m

  int dimension() const { return static_cast<int>(residual.size()) - 1; }
};

// Maximal singular strata of a well-formed weight system: subsets I whose
// residual gcd exceeds 1 and strictly exceeds the residual gcd of every
// proper subset (deeper strata with the same stabilizer belong to the closure
// of a larger one).  Sorted by |I|, then lexicographically.
std::vector<Stratum> strata(const WeightSystem& w);

// True iff no monomial of degree fam.degree survives on the stratum, so every
// member of the family contains Pi_I.
bool contains_stratum(const HypersurfaceFamily& fam, const Stratum& s);

// "A1" when m = 2 and all transverse weights are odd, else "Z/m(a1,...)".
std::string transverse_type(const Stratum& s);

// Genus of the curve cut by the generic member on a plane stratum:
//   g = dim S_k(residual) - dim S_{k-d}(residual),  k = d - sum(residual).
long long curve_genus(const HypersurfaceFamily& fam, const Stratum& s);

struct SingularCurve {
  Stratum stratum;
  long long genus;
  std::string transverse_type;
};

// One singular curve for every plane stratum with m > 1 that the generic
// member does not contain.
std::vector<SingularCurve> singular_curves(const HypersurfaceFamily& fam);

struct FlopCount {
  long long count;
  bool genus_one_warning;  // g = 1 gives the degenerate count 0
};

// Virtual count 2g - 2 of the rational curves flopped on a generic
// deformation.  Throws std::invalid_argument for g < 1.
FlopCount flop_count(long long genus);

// 1 + (number of singular curves); requires every curve stratum to be
// transverse A1 and every other stratum to be avoided by the generic member.
// Throws UnsupportedSingularityError otherwise.
long long resolution_picard_rank(const HypersurfaceFamily& fam);

}  // namespace wph
