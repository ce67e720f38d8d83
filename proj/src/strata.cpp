#include "wph/strata.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "wph/errors.hpp"

namespace wph {

namespace {

long residual_gcd(const std::vector<long>& weights, unsigned mask) {
  long g = 0;
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (!(mask & (1u << i))) g = std::gcd(g, weights[i]);
  return g;
}

Stratum make_stratum(const WeightSystem& w, unsigned mask, long m) {
  Stratum s{.vanishing = {},
            .residual_indices = {},
            .residual = WeightSystem({1}),
            .stabilizer_order = m,
            .transverse_weights = {}};
  std::vector<long> residual;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (mask & (1u << i)) {
      s.vanishing.push_back(static_cast<int>(i));
      s.transverse_weights.push_back(w[i] % m);
    } else {
      s.residual_indices.push_back(static_cast<int>(i));
      residual.push_back(w[i]);
    }
  }
  s.residual = WeightSystem(residual);
  return s;
}

}  // namespace

std::vector<Stratum> strata(const WeightSystem& w) {
  if (!w.well_formed())
    throw std::invalid_argument("strata require a well-formed weight system");
  const std::size_t n = w.size();
  if (n > 20) throw ResourceLimitError("too many variables for subset scan");
  const unsigned full = (1u << n) - 1;

  std::vector<unsigned> picked;
  for (unsigned mask = 1; mask < full; ++mask) {
    long m = residual_gcd(w.weights(), mask);
    if (m <= 1) continue;
    // Maximality: a proper subset of I with the same residual gcd means this
    // stratum sits inside the closure of a larger one with equal stabilizer.
    bool maximal = true;
    for (unsigned sub = (mask - 1) & mask; sub && maximal;
         sub = (sub - 1) & mask)
      if (residual_gcd(w.weights(), sub) == m) maximal = false;
    if (maximal) picked.push_back(mask);
  }

  std::vector<Stratum> out;
  out.reserve(picked.size());
  for (unsigned mask : picked) {
    long m = residual_gcd(w.weights(), mask);
    out.push_back(make_stratum(w, mask, m));
  }
  std::sort(out.begin(), out.end(), [](const Stratum& a, const Stratum& b) {
    if (a.vanishing.size() != b.vanishing.size())
      return a.vanishing.size() < b.vanishing.size();
    return a.vanishing < b.vanishing;
  });
  return out;
}

bool contains_stratum(const HypersurfaceFamily& fam, const Stratum& s) {
  return graded_dim(s.residual, fam.degree) == 0;
}

std::string transverse_type(const Stratum& s) {
  const long m = s.stabilizer_order;
  if (m <= 1)
    throw std::invalid_argument("transverse type needs a nontrivial stabilizer");
  bool a1 = (m == 2);
  for (long r : s.transverse_weights)
    if (r % 2 == 0) a1 = false;
  if (a1) return "A1";
  std::string label = "Z/" + std::to_string(m) + "(";
  for (std::size_t i = 0; i < s.transverse_weights.size(); ++i) {
    if (i) label += ",";
    label += std::to_string(s.transverse_weights[i]);
  }
  return label + ")";
}

long long curve_genus(const HypersurfaceFamily& fam, const Stratum& s) {
  if (s.dimension() != 2)
    throw std::invalid_argument("curve genus needs a plane stratum");
  const long k = fam.degree - s.residual.total();
  return graded_dim(s.residual, k) - graded_dim(s.residual, k - fam.degree);
}

std::vector<SingularCurve> singular_curves(const HypersurfaceFamily& fam) {
  std::vector<SingularCurve> out;
  for (const Stratum& s : strata(fam.weights)) {
    if (s.dimension() != 2 || contains_stratum(fam, s)) continue;
    out.push_back(SingularCurve{.stratum = s,
                                .genus = curve_genus(fam, s),
                                .transverse_type = transverse_type(s)});
  }
  return out;
}

FlopCount flop_count(long long genus) {
  if (genus < 1)
    throw std::invalid_argument("flop count needs genus at least 1");
  return FlopCount{.count = 2 * genus - 2, .genus_one_warning = genus == 1};
}

long long resolution_picard_rank(const HypersurfaceFamily& fam) {
  long long curves = 0;
  for (const Stratum& s : strata(fam.weights)) {
    const bool contained = contains_stratum(fam, s);
    if (s.dimension() == 2 && !contained) {
      if (transverse_type(s) != "A1")
        throw UnsupportedSingularityError(
            "singular curve of type " + transverse_type(s) +
            " is not a transverse A1 curve");
      ++curves;
      continue;
    }
    if (s.dimension() == 0 && !contained) continue;  // avoided point
    throw UnsupportedSingularityError(
        "generic member meets a singular stratum of dimension " +
        std::to_string(s.dimension()) +
        (contained ? " (contained in every member)" : ""));
  }
  return 1 + curves;
}

}  // namespace wph
