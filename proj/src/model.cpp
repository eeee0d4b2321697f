#include "diracgap/model.hpp"

#include <cmath>
#include <stdexcept>

#include "diracgap/errors.hpp"

namespace diracgap {

PhysicalParams::PhysicalParams(double alpha, double Z, int kappa)
    : alpha(alpha), Z(Z), kappa(kappa) {
  if (!(alpha > 0.0)) throw std::domain_error("PhysicalParams: alpha must be positive");
  if (!(Z >= 0.0)) throw std::domain_error("PhysicalParams: Z must be non-negative");
  if (kappa != -1) throw std::domain_error("PhysicalParams: only the kappa = -1 channel is supported");
}

PotentialSpec PotentialSpec::zero() { return PotentialSpec{}; }

PotentialSpec PotentialSpec::point_coulomb(const PhysicalParams& params) {
  const double g = params.coupling();
  if (g > std::sqrt(3.0) / 2.0) {
    throw std::domain_error(
        "point_coulomb: alpha*Z exceeds sqrt(3)/2; the operator domain is ambiguous there");
  }
  if (!(g > 0.0)) throw std::domain_error("point_coulomb: alpha*Z must be positive");
  PotentialSpec p;
  p.kind_ = PotentialKind::point_coulomb;
  p.strength_ = g;
  return p;
}

PotentialSpec PotentialSpec::gaussian_well(double v0, double width) {
  if (!(width > 0.0)) throw std::domain_error("gaussian_well: width must be positive");
  if (!std::isfinite(v0)) throw std::domain_error("gaussian_well: depth must be finite");
  PotentialSpec p;
  p.kind_ = PotentialKind::gaussian_well;
  p.v0_ = v0;
  p.width_ = width;
  return p;
}

double PotentialSpec::inf_v() const {
  switch (kind_) {
    case PotentialKind::zero: return 0.0;
    case PotentialKind::point_coulomb: return -std::numeric_limits<double>::infinity();
    case PotentialKind::gaussian_well: return std::min(v0_, 0.0);
  }
  return 0.0;
}

double PotentialSpec::sup_v() const {
  switch (kind_) {
    case PotentialKind::zero: return 0.0;
    case PotentialKind::point_coulomb: return 0.0;
    case PotentialKind::gaussian_well: return std::max(v0_, 0.0);
  }
  return 0.0;
}

double PotentialSpec::value(double r) const {
  if (!(r > 0.0)) throw std::domain_error("potential evaluated at r <= 0");
  switch (kind_) {
    case PotentialKind::zero: return 0.0;
    case PotentialKind::point_coulomb: return -strength_ / r;
    case PotentialKind::gaussian_well: return v0_ * std::exp(-r * r / (width_ * width_));
  }
  return 0.0;
}

std::string PotentialSpec::describe() const {
  switch (kind_) {
    case PotentialKind::zero: return "zero";
    case PotentialKind::point_coulomb:
      return "point-coulomb(alphaZ=" + std::to_string(strength_) + ")";
    case PotentialKind::gaussian_well:
      return "gaussian-well(V0=" + std::to_string(v0_) + ",w=" + std::to_string(width_) + ")";
  }
  return "?";
}

double evaluate_potential(const PotentialSpec& spec, double r) { return spec.value(r); }

std::string to_string(BalanceScheme s) {
  switch (s) {
    case BalanceScheme::upper_lower: return "upper-lower";
    case BalanceScheme::kinetic_balance: return "kinetic-balance";
    case BalanceScheme::atomic_balance: return "atomic-balance";
    case BalanceScheme::dual_kinetic_balance: return "dual-kinetic-balance";
    case BalanceScheme::free_basis: return "free-basis";
  }
  return "?";
}

namespace {

GapInterval clip(double lo, double hi) {
  lo = std::max(lo, -1.0);
  hi = std::min(hi, 1.0);
  if (lo > hi) return GapInterval::empty();
  return GapInterval::make(lo, hi);
}

}  // namespace

std::pair<GapInterval, GapInterval> theorem_intervals(BalanceScheme scheme,
                                                      const PotentialSpec& spec,
                                                      std::optional<double> eps) {
  double shift = 0.0;
  if (scheme == BalanceScheme::dual_kinetic_balance) {
    if (!eps || !(*eps > 0.0) || *eps > 1.0)
      throw std::invalid_argument("theorem_intervals: dual kinetic balance needs eps in (0, 1]");
    shift = 2.0 * (1.0 / *eps - 1.0);
  }

  // The free operator never pollutes in any of these bases.
  if (spec.kind() == PotentialKind::zero)
    return {GapInterval::empty(), GapInterval::empty()};

  const double infv = spec.inf_v();
  const double supv = spec.sup_v();
  const GapInterval electron_side = clip(1.0 + infv + shift, 1.0);
  const GapInterval positron_side = clip(-1.0, supv - 1.0 - shift);

  switch (scheme) {
    case BalanceScheme::upper_lower:
      return {electron_side, positron_side};
    case BalanceScheme::kinetic_balance:
      // Clean above for bounded V <= 2; the Coulomb singularity re-opens it.
      if (spec.bounded() && supv <= 2.0)
        return {GapInterval::empty(), positron_side};
      return {electron_side, positron_side};
    case BalanceScheme::atomic_balance:
      if (supv <= 0.0) return {GapInterval::empty(), GapInterval::empty()};
      return {GapInterval::empty(), clip(-1.0, supv - 1.0)};
    case BalanceScheme::dual_kinetic_balance:
      return {electron_side, positron_side};
    case BalanceScheme::free_basis:
      return {GapInterval::empty(), GapInterval::empty()};
  }
  return {GapInterval::empty(), GapInterval::empty()};
}

}  // namespace diracgap
