#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "wph/rational.hpp"
#include "wph/weights.hpp"

namespace wph {

// Rational scroll P(O(a1) + ... + O(ar)) over P1; total space dimension r.
struct ScrollSpec {
  std::vector<long> twists;

  std::size_t rank() const { return twists.size(); }
  long degree_sum() const;  // c1 of the defining bundle

  friend bool operator==(const ScrollSpec&, const ScrollSpec&) = default;
};

// Chow class on a scroll in the basis {h^k, h^k f : 0 <= k <= r-1}, h the
// bundle hyperplane class, f the fiber class.  Reduction relations:
//   f^2 = 0,   h^r = (sum a_i) h^{r-1} f,
// so h^k f = 0 for k >= r and h^k = 0 for k > r.  Normalization:
//   integral of h^{r-1} f = 1.
class ChowClass {
 public:
  explicit ChowClass(ScrollSpec ambient);

  // c * h^hpow * f^fpow reduced to normal form.
  static ChowClass monomial(const ScrollSpec& ambient, unsigned h_pow,
                            unsigned f_pow, const Rational& c);

  const ScrollSpec& ambient() const { return ambient_; }
  const Rational& coeff_h(std::size_t k) const { return h_[k]; }
  const Rational& coeff_hf(std::size_t k) const { return hf_[k]; }
  bool is_zero() const;

  // The common total degree of the nonzero basis monomials (h^k has degree k,
  // h^k f has degree k+1), or nullopt when zero or inhomogeneous.
  std::optional<int> degree() const;

  ChowClass& add_monomial(unsigned h_pow, unsigned f_pow, const Rational& c);

  friend ChowClass operator+(const ChowClass& a, const ChowClass& b);
  friend ChowClass operator-(const ChowClass& a, const ChowClass& b);
  friend ChowClass operator*(const ChowClass& a, const ChowClass& b);
  ChowClass scaled(const Rational& c) const;
  friend bool operator==(const ChowClass& a, const ChowClass& b);

 private:
  ScrollSpec ambient_;
  std::vector<Rational> h_;   // coefficients of h^k
  std::vector<Rational> hf_;  // coefficients of h^k f
};

// Degree map: the coefficient of h^{r-1} f of a homogeneous top-degree class.
// Throws ModelError on a degree mismatch.
Rational integrate(const ChowClass& c);

// Total Chern class of the tangent bundle, component per degree 0..r:
//   c(T) = (1 + 2f) * prod_i (1 + h - a_i f),
// fixed against the relation h^r = (sum a_i) h^{r-1} f; in particular
// c1 = r h + (2 - sum a_i) f.
std::vector<ChowClass> tangent_chern(const ScrollSpec& s);

// Threefold inside or over a scroll with Picard lattice spanned by the
// (restricted or pulled back) classes of h and f.
struct ThreefoldModel {
  enum class Kind { CompleteIntersection, DoubleCover };
  Kind kind;
  ScrollSpec ambient;
  // Class of Y inside the scroll (complete intersection), or the half-branch
  // class L with branch divisor 2L (double cover).
  ChowClass divisor;
};

ThreefoldModel complete_intersection_model(const ScrollSpec& ambient,
                                           const ChowClass& hypersurface);
ThreefoldModel double_cover_model(const ScrollSpec& ambient,
                                  const ChowClass& half_branch);

struct ModelChern {
  long long c2_dot_h;  // c2(Y) . H, H the hyperplane-type basis class
  long long c2_dot_f;  // c2(Y) . F, F the fiber-type basis class
  long long euler;     // integral of c3(Y)
};

// Adjunction on a rank-4 scroll: c(T_Y) = c(T_F) / (1 + [Y]) restricted.
ModelChern ci_chern(const ThreefoldModel& model);

// Double cover of a rank-3 scroll branched over 2L, via
// c(T_Y) = pullback of c(T_W) (1 + L) / (1 + 2L), with integrals doubling
// under pullback.  Throws ModelError unless c1(W) = L (Calabi-Yau cover).
ModelChern double_cover_chern(const ThreefoldModel& model);

ModelChern model_chern(const ThreefoldModel& model);

struct CubicForm {
  long long d111, d112, d122, d222;  // H^3, H^2 F, H F^2, F^3
};

// Top intersections of the Picard basis (H, F) on the threefold.
CubicForm cubic_form(const ThreefoldModel& model);

struct NefWitness {
  bool invariant;                             // no class with D^3 = c2.D = 0
  std::array<long long, 2> kernel_direction;  // primitive kernel of the c2 form
  long long cubic_value;                      // cubic form at that direction
};

// The nef cone is deformation-invariant when no class D has D^3 = c2.D = 0;
// on a rank-two lattice this reduces to evaluating the cubic form on the
// kernel line of the c2 form.  Throws ModelError when the c2 form vanishes.
NefWitness nef_invariance_check(const ThreefoldModel& model);
NefWitness nef_invariance_check(const CubicForm& cubic,
                                const std::array<long long, 2>& c2_form);

long long euler_number(const ThreefoldModel& model);

// The scroll models of the two resolved families that admit one: the quadric
// resolution F(2,0,0,0) carrying a complete intersection in |4h|, and the
// double cover of F(2,0,0) branched over a sextic (L = 3h).
std::optional<ThreefoldModel> known_threefold_model(
    const HypersurfaceFamily& fam);

}  // namespace wph
