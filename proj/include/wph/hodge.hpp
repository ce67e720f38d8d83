#pragma once

#include <cstdint>

#include "wph/weights.hpp"

namespace wph {

// Dimension of the group of graded coordinate changes acting effectively on
// the weighted projective space: sum_i dim S_{w_i} - 1.
long long aut_group_dim(const WeightSystem& w);

struct ModuliCount {
  long long dim_degree_piece;  // dim S_d
  long long aut_dim;
  long long moduli;            // dim S_d - sum_i dim S_{w_i}
  bool stabilizer_warning;     // the sampled member had stabilizer dim > 1
};

// Parameters of the family modulo graded coordinate changes; the
// projectivization and the trivially-acting torus cancel, so
// moduli = dim S_d - sum_i dim S_{w_i}.  The generic finiteness of the
// stabilizer is spot-checked on one sampled member (check_seed).
ModuliCount moduli_count(const HypersurfaceFamily& fam,
                         std::uint64_t check_seed = 0);

// h^{2,1} of the resolution: moduli + sum of the singular-curve genera.
long long h21_resolution(const HypersurfaceFamily& fam);

struct HodgeSplit {
  long long h21_Y;
  long long h11_Y;
  long long genus_total;
  long long b3_X;      // 2 + 2 * moduli
  long long b3_moved;  // 2 * genus_total, the reflected part
  long long b3_Y;      // b3_X + b3_moved
};

// Rank bookkeeping of H3(Y) = H3(X) + H1(C)[-1]: the monodromy involution
// fixes the first summand and negates the second.
HodgeSplit hodge_split(const HypersurfaceFamily& fam);

// Codimension of the locus where the exceptional surface deforms along:
// h21_resolution - moduli, which the consistency suite pins to the genus sum.
long long s_e_codim(const HypersurfaceFamily& fam);

// 2 * (h^{1,1} - h^{2,1}) with h^{1,1} from the resolution Picard rank; the
// contract partner of the Chern-integration Euler number.
long long euler_expected(const HypersurfaceFamily& fam);

}  // namespace wph
