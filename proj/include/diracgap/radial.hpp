#pragma once

#include <string>
#include <vector>

#include "diracgap/model.hpp"

namespace diracgap {

// Balance weights a term may carry.  coulomb_balance divides by (2r + alphaZ),
// well_balance divides by (2 - V0 exp(-r^2/w^2)); both arise only from the
// atomic-balance construction.
enum class TermWeight { plain, coulomb_balance, well_balance };

// One term c * r^k * exp(-a r^2), optionally divided by a balance denominator.
struct RadialTerm {
  double coeff = 0.0;
  int power = 0;          // k >= 0
  double exponent = 0.0;  // a, kept inside [1e-8, 1e12]
  TermWeight weight = TermWeight::plain;
  double wpar0 = 0.0;  // coulomb_balance: alphaZ (> 0); well_balance: V0
  double wpar1 = 0.0;  // well_balance: width

  RadialTerm() = default;
  RadialTerm(double coeff, int power, double exponent);
  RadialTerm(double coeff, int power, double exponent, TermWeight weight,
             double wpar0, double wpar1 = 0.0);

  double value(double r) const;
  bool same_shape(const RadialTerm& o) const;
};

// Finite sum of RadialTerms; u(r) or v(r) of the two-component radial problem.
class RadialFunction {
public:
  RadialFunction() = default;
  explicit RadialFunction(std::vector<RadialTerm> terms) : terms_(std::move(terms)) {}
  static RadialFunction gaussian(double coeff, int power, double exponent) {
    return RadialFunction({RadialTerm(coeff, power, exponent)});
  }

  const std::vector<RadialTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool has_weighted_terms() const;
  int min_power() const;  // min over terms; throws on empty
  double value(double r) const;

  RadialFunction scaled(double s) const;
  RadialFunction plus(const RadialFunction& g) const;
  // Merge terms with identical shape, drop exact zeros.
  RadialFunction simplified() const;

  // Every nonzero component needs min power >= 1 next to a Coulomb singularity,
  // else the |f|^2/r matrix elements diverge.
  bool coulomb_compatible() const;

private:
  std::vector<RadialTerm> terms_;
};

// Integral of r^n exp(-c r^2) over (0, inf) in closed form.
double moment(int n, double c);

// (d/dr - 1/r) f for plain polynomial-Gaussian terms.
// r^k e^{-ar^2}  ->  (k-1) r^{k-1} e^{-ar^2} - 2a r^{k+1} e^{-ar^2}
RadialFunction apply_d_minus(const RadialFunction& f);

// (-d/dr - 1/r) f.
// r^k e^{-ar^2}  ->  -(k+1) r^{k-1} e^{-ar^2} + 2a r^{k+1} e^{-ar^2}
RadialFunction apply_d_plus(const RadialFunction& f);

// Weight applied inside inner(): 1, 1/r, or V(r).
struct InnerWeight {
  enum class Kind { one, inv_r, potential };
  Kind kind = Kind::one;
  PotentialSpec pot;

  static InnerWeight one() { return {}; }
  static InnerWeight inv_r() { return {Kind::inv_r, {}}; }
  static InnerWeight potential(const PotentialSpec& p) { return {Kind::potential, p}; }
};

struct QuadratureOptions {
  double rel_tol = 1e-12;
  int max_intervals = 4000;
};

// Integral of f(r) g(r) w(r) dr over (0, inf).  Closed form via moment() when
// both functions are plain polynomial-Gaussian and the weight is 1, 1/r, zero
// or point-Coulomb; adaptive Gauss-Kronrod quadrature otherwise (balance
// weights, Gaussian wells).
double inner(const RadialFunction& f, const RadialFunction& g,
             const InnerWeight& w = InnerWeight::one(),
             const QuadratureOptions& opts = {});

}  // namespace diracgap
