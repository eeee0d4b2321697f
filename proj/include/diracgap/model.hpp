#pragma once

#include <limits>
#include <optional>
#include <string>

namespace diracgap {

// Units m = c = hbar = 1 throughout; energies in units of mc^2, the spectral
// gap of the free operator is (-1, 1).
struct PhysicalParams {
  double alpha = 1.0 / 137.0;  // fine-structure coupling
  double Z = 0.0;              // nuclear charge number
  int kappa = -1;              // spin-orbit channel; only -1 is supported

  PhysicalParams() = default;
  PhysicalParams(double alpha, double Z, int kappa = -1);

  double coupling() const { return alpha * Z; }
};

enum class PotentialKind { zero, point_coulomb, gaussian_well };

// Radial potential with exact inf/sup and singularity metadata.
class PotentialSpec {
public:
  static PotentialSpec zero();
  // V(r) = -alpha*Z/r; requires alpha*Z <= sqrt(3)/2.
  static PotentialSpec point_coulomb(const PhysicalParams& params);
  // V(r) = v0 * exp(-r^2/width^2), width > 0.
  static PotentialSpec gaussian_well(double v0, double width);

  PotentialKind kind() const { return kind_; }
  double coulomb_strength() const { return strength_; }  // alpha*Z
  double well_depth() const { return v0_; }
  double well_width() const { return width_; }

  double inf_v() const;  // -inf for point_coulomb
  double sup_v() const;
  bool singular_at_origin() const { return kind_ == PotentialKind::point_coulomb; }
  bool bounded() const { return kind_ != PotentialKind::point_coulomb; }

  double value(double r) const;  // r > 0 required
  std::string describe() const;

private:
  PotentialKind kind_ = PotentialKind::zero;
  double strength_ = 0.0;
  double v0_ = 0.0;
  double width_ = 0.0;
};

// V(r); throws std::domain_error for r <= 0 (the Coulomb form is singular at 0).
double evaluate_potential(const PotentialSpec& spec, double r);

// Closed subinterval of the gap [-1, 1]; lo > hi encodes the empty interval.
struct GapInterval {
  double lo = 1.0;
  double hi = -1.0;

  static GapInterval make(double lo, double hi) { return {lo, hi}; }
  static GapInterval empty() { return {1.0, -1.0}; }
  bool is_empty() const { return lo > hi; }
  bool contains(double x) const { return !is_empty() && lo <= x && x <= hi; }
  double length() const { return is_empty() ? 0.0 : hi - lo; }
};

enum class BalanceScheme {
  upper_lower,
  kinetic_balance,
  atomic_balance,
  dual_kinetic_balance,
  free_basis,
};

std::string to_string(BalanceScheme s);

// The pair of closed intervals where spurious modes may occur for the scheme:
// first the electron-side interval [max(-1, 1+inf V + shift), 1], then the
// positron-side [-1, min(1, sup V - 1 - shift)], specialized per scheme.  For
// the dual kinetic balance the shift is 2(1/eps - 1); eps must lie in (0, 1].
// V == 0 never pollutes, so both intervals are empty for the zero potential.
std::pair<GapInterval, GapInterval> theorem_intervals(
    BalanceScheme scheme, const PotentialSpec& spec,
    std::optional<double> eps = std::nullopt);

}  // namespace diracgap
