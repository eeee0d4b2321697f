#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diracgap/model.hpp"
#include "diracgap/radial.hpp"

namespace diracgap {

// Two-component radial basis vector (u upper, v lower), unit L2 norm:
// <u,u> + <v,v> = 1.
struct BasisVector {
  RadialFunction upper;
  RadialFunction lower;
  std::string label;

  bool coulomb_compatible() const {
    return upper.coulomb_compatible() && lower.coulomb_compatible();
  }
};

// Normalize in place; throws ConstructionError when both components vanish.
BasisVector normalized(RadialFunction upper, RadialFunction lower, std::string label);

struct BasisSet {
  std::vector<BasisVector> vectors;
  BalanceScheme scheme = BalanceScheme::upper_lower;
  PhysicalParams params;
  double eps = 1.0;  // dual kinetic balance parameter, when applicable

  int size() const { return static_cast<int>(vectors.size()); }
};

// Reduced Gaussian exponents (dimensionless, scaled by alpha^2 at build time),
// stored ascending and distinct.
struct ExponentSet {
  std::string name;
  std::vector<double> values;
};

ExponentSet make_exponent_set(std::string name, std::vector<double> values);

// The 22 uncontracted 6-31G s exponents for Z=30, in units of alpha^-2.
ExponentSet builtin_exponents(const std::string& name);

// 2n vectors: per exponent one pure upper (r e^{-ar^2}, 0) and one pure lower
// (0, r e^{-ar^2}), interleaved.
BasisSet upper_lower_basis(const ExponentSet& exps, const PhysicalParams& params);

// Mixture of the upper and lower Gaussian spinor families sharing the profile
// r e^{-b r^2}.  The two 3D angular factors carry unequal norms (4*pi for the
// constant upper spinor, 1/3 for the retained lower component) and the radial
// reduction flips the lower channel's sign, so the amplitude pair on the unit
// profiles is (cos theta, -sin theta / sqrt(12*pi)).
BasisVector mixed_trap_vector(double theta, double b, const PhysicalParams& params);

// Per generating upper u: the pure-upper vector and its balanced partner
// (0, (d/dr - 1/r) u).
BasisSet kinetic_balance_basis(const ExponentSet& exps, const PhysicalParams& params,
                               const std::vector<RadialFunction>& extra_uppers = {});

// u(r) = r (e^{-b r^2} + delta^{1/4} e^{-b delta r^2}), delta > 1: a contraction
// of two Gaussians concentrated at the origin, injected as an extra upper.
RadialFunction contracted_trap(double b, double delta, const PhysicalParams& params);

// Uppers as kinetic balance; lowers (2 - V)^{-1} (d/dr - 1/r) u.  Coulomb
// realizes the factor as r/(2r + alphaZ) on each term; wells carry the
// denominator as a term weight evaluated by quadrature; V = 0 reduces to
// kinetic balance scaled by 1/2.
BasisSet atomic_balance_basis(const ExponentSet& exps, const PhysicalParams& params,
                              const PotentialSpec& potential);

// Per exponent two electron/positron-symmetric vectors:
// type 1 (u, eps (d/dr - 1/r) u) with u = r e^{-ar^2}, and
// type 2 (eps (-d/dr - 1/r) w, -w) with w = r^2 e^{-ar^2}.
BasisSet dual_kinetic_balance_basis(const ExponentSet& exps, const PhysicalParams& params,
                                    double eps);

// Pure-upper bump r e^{-a (r-r0)^2} realized as a least-squares fit with powers
// r^1..r^12 on a single Gaussian envelope (off-center Gaussians live outside
// the term grammar).  Requires 3/sqrt(2a) < r0; throws ConstructionError when
// the relative fit residual exceeds fit_tol.
BasisVector concentrated_trap(double r0, double width_exponent, const PhysicalParams& params,
                              double fit_tol = 0.1);

struct FreeBasisInfo {
  int n_positive = 0;
  int n_negative = 0;
  double aux_residual_max = 0.0;
  double aux_s_condition = 0.0;
};

// Solve the free pencil (V = 0) over aux and return the n_keep eigenvectors on
// each side of the gap, nearest the gap edges, re-expressed as basis vectors.
BasisSet free_basis(const PhysicalParams& params, int n_keep, const BasisSet& aux,
                    FreeBasisInfo* info = nullptr);

// Approximate projection of vec onto the positive/negative spectral branches
// of the free operator, computed in aux's free eigenbasis.  Returns the pair
// (positive part, negative part); a part with negligible norm is nullopt.
std::pair<std::optional<BasisVector>, std::optional<BasisVector>>
split_on_free_branches(const BasisVector& vec, const BasisSet& aux);

}  // namespace diracgap
