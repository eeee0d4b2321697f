#include "diracgap/basis.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <set>

#include "diracgap/errors.hpp"
#include "diracgap/pencil.hpp"
#include "diracgap/solve.hpp"

namespace diracgap {

BasisVector normalized(RadialFunction upper, RadialFunction lower, std::string label) {
  const double n2 = inner(upper, upper) + inner(lower, lower);
  if (!(n2 > 0.0) || !std::isfinite(n2))
    throw ConstructionError("basis vector has no norm: " + label);
  const double s = 1.0 / std::sqrt(n2);
  return BasisVector{upper.scaled(s), lower.scaled(s), std::move(label)};
}

ExponentSet make_exponent_set(std::string name, std::vector<double> values) {
  if (values.empty()) throw ConstructionError("exponent set is empty: " + name);
  std::sort(values.begin(), values.end());
  for (size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] > 0.0))
      throw ConstructionError("exponent set has a non-positive entry: " + name);
    if (i > 0 && values[i] == values[i - 1])
      throw ConstructionError("exponent set has duplicate entries: " + name);
  }
  return ExponentSet{std::move(name), std::move(values)};
}

ExponentSet builtin_exponents(const std::string& name) {
  if (name == "zn-6-31g") {
    return make_exponent_set(name, {82400.940, 12372.550, 2818.3510, 1732.5690,
                                    794.57170, 412.71490, 254.72320, 133.67800,
                                    87.138800, 69.364920, 50.385850, 23.620820,
                                    20.583580, 10.184710, 8.5059400, 4.3340820,
                                    2.8238420, 1.8109180, 1.0395430, 0.7148410,
                                    0.1432640, 0.0492960});
  }
  throw ConstructionError("unknown exponent set: " + name);
}

namespace {

std::vector<double> scale_exponents(const ExponentSet& exps, const PhysicalParams& params) {
  std::vector<double> out;
  out.reserve(exps.values.size());
  const double a2 = params.alpha * params.alpha;
  for (double v : exps.values) out.push_back(v * a2);
  return out;
}

RadialFunction s_upper(double a) { return RadialFunction::gaussian(1.0, 1, a); }

}  // namespace

BasisSet upper_lower_basis(const ExponentSet& exps, const PhysicalParams& params) {
  BasisSet set;
  set.scheme = BalanceScheme::upper_lower;
  set.params = params;
  int i = 0;
  for (double a : scale_exponents(exps, params)) {
    set.vectors.push_back(normalized(s_upper(a), {}, "ul-u" + std::to_string(i)));
    set.vectors.push_back(normalized({}, s_upper(a), "ul-v" + std::to_string(i)));
    ++i;
  }
  return set;
}

BasisVector mixed_trap_vector(double theta, double b, const PhysicalParams& params) {
  (void)params;
  // unit profile r e^{-b r^2}
  const double profile_norm = std::sqrt(moment(2, 2.0 * b));
  const double cu = std::cos(theta);
  const double cv = -std::sin(theta) / std::sqrt(12.0 * M_PI);
  const double scale = std::max(std::abs(cu), std::abs(cv));
  RadialFunction u, v;
  if (std::abs(cu) > 1e-14 * scale) u = RadialFunction::gaussian(cu / profile_norm, 1, b);
  if (std::abs(cv) > 1e-14 * scale) v = RadialFunction::gaussian(cv / profile_norm, 1, b);
  return normalized(u, v, "mixed-trap(theta=" + std::to_string(theta) + ")");
}

BasisSet kinetic_balance_basis(const ExponentSet& exps, const PhysicalParams& params,
                               const std::vector<RadialFunction>& extra_uppers) {
  BasisSet set;
  set.scheme = BalanceScheme::kinetic_balance;
  set.params = params;
  std::vector<RadialFunction> uppers;
  for (double a : scale_exponents(exps, params)) uppers.push_back(s_upper(a));
  uppers.insert(uppers.end(), extra_uppers.begin(), extra_uppers.end());
  int i = 0;
  for (const auto& u : uppers) {
    set.vectors.push_back(normalized(u, {}, "kb-u" + std::to_string(i)));
    set.vectors.push_back(normalized({}, apply_d_minus(u), "kb-v" + std::to_string(i)));
    ++i;
  }
  return set;
}

RadialFunction contracted_trap(double b, double delta, const PhysicalParams& params) {
  (void)params;
  if (!(delta > 1.0)) throw std::domain_error("contracted_trap: delta must exceed 1");
  return RadialFunction({RadialTerm(1.0, 1, b),
                         RadialTerm(std::pow(delta, 0.25), 1, b * delta)});
}

BasisSet atomic_balance_basis(const ExponentSet& exps, const PhysicalParams& params,
                              const PotentialSpec& potential) {
  if (potential.kind() == PotentialKind::gaussian_well && potential.well_depth() >= 2.0)
    throw ConstructionError("atomic balance: V attains 2, the balance factor is singular");

  BasisSet set;
  set.scheme = BalanceScheme::atomic_balance;
  set.params = params;
  int i = 0;
  for (double a : scale_exponents(exps, params)) {
    const RadialFunction u = s_upper(a);
    const RadialFunction du = apply_d_minus(u);
    RadialFunction low;
    switch (potential.kind()) {
      case PotentialKind::zero:
        low = du.scaled(0.5);
        break;
      case PotentialKind::point_coulomb: {
        std::vector<RadialTerm> terms;
        for (const auto& t : du.terms())
          terms.emplace_back(t.coeff, t.power + 1, t.exponent, TermWeight::coulomb_balance,
                             potential.coulomb_strength());
        low = RadialFunction(std::move(terms));
        break;
      }
      case PotentialKind::gaussian_well: {
        std::vector<RadialTerm> terms;
        for (const auto& t : du.terms())
          terms.emplace_back(t.coeff, t.power, t.exponent, TermWeight::well_balance,
                             potential.well_depth(), potential.well_width());
        low = RadialFunction(std::move(terms));
        break;
      }
    }
    set.vectors.push_back(normalized(u, {}, "ab-u" + std::to_string(i)));
    set.vectors.push_back(normalized({}, low, "ab-v" + std::to_string(i)));
    ++i;
  }
  return set;
}

BasisSet dual_kinetic_balance_basis(const ExponentSet& exps, const PhysicalParams& params,
                                    double eps) {
  if (!(eps > 0.0) || eps > 1.0)
    throw std::invalid_argument("dual_kinetic_balance_basis: eps must lie in (0, 1]");
  BasisSet set;
  set.scheme = BalanceScheme::dual_kinetic_balance;
  set.params = params;
  set.eps = eps;
  int i = 0;
  for (double a : scale_exponents(exps, params)) {
    const RadialFunction u = s_upper(a);
    const RadialFunction w = RadialFunction::gaussian(1.0, 2, a);
    BasisVector t1 = normalized(u, apply_d_minus(u).scaled(eps), "dkb1-" + std::to_string(i));
    BasisVector t2 = normalized(apply_d_plus(w).scaled(eps), w.scaled(-1.0),
                                "dkb2-" + std::to_string(i));
    if (!t1.coulomb_compatible() || !t2.coulomb_compatible())
      throw ConstructionError("dual kinetic balance produced a Coulomb-incompatible vector");
    set.vectors.push_back(std::move(t1));
    set.vectors.push_back(std::move(t2));
    ++i;
  }
  return set;
}

BasisVector concentrated_trap(double r0, double width_exponent, const PhysicalParams& params,
                              double fit_tol) {
  (void)params;
  const double a = width_exponent;
  if (!(r0 > 0.0)) throw std::domain_error("concentrated_trap: r0 must be positive");
  if (!(3.0 / std::sqrt(2.0 * a) < r0))
    throw std::domain_error("concentrated_trap: bump too wide, needs 3/sqrt(2a) < r0");

  constexpr int kPowers = 12;
  constexpr int kPoints = 200;
  const double lo = std::max(1e-6, r0 - 4.0 / std::sqrt(a));
  const double hi = r0 + 4.0 / std::sqrt(a);

  Eigen::MatrixXd cols(kPoints, kPowers);
  Eigen::VectorXd target(kPoints);
  for (int i = 0; i < kPoints; ++i) {
    const double r = lo + (hi - lo) * i / (kPoints - 1);
    target(i) = r * std::exp(-a * (r - r0) * (r - r0));
    double rk = 1.0;
    const double env = std::exp(-a * r * r);
    for (int k = 1; k <= kPowers; ++k) {
      rk *= r;
      cols(i, k - 1) = rk * env;
    }
  }
  Eigen::VectorXd scale = cols.cwiseAbs().colwise().maxCoeff();
  for (int k = 0; k < kPowers; ++k) cols.col(k) /= scale(k);
  Eigen::VectorXd c = cols.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(target);
  const double resid = (cols * c - target).norm() / target.norm();
  if (!(resid <= fit_tol))
    throw ConstructionError("concentrated_trap: fit residual " + std::to_string(resid) +
                            " above tolerance");

  std::vector<RadialTerm> terms;
  for (int k = 1; k <= kPowers; ++k) {
    const double coeff = c(k - 1) / scale(k - 1);
    if (coeff != 0.0) terms.emplace_back(coeff, k, a);
  }
  return normalized(RadialFunction(std::move(terms)), {},
                    "bump(r0=" + std::to_string(r0) + ")");
}

namespace {

BasisVector combine(const std::vector<BasisVector>& vecs, const Eigen::VectorXd& coef,
                    const std::string& label) {
  RadialFunction u, v;
  for (int j = 0; j < coef.size(); ++j) {
    if (coef(j) == 0.0) continue;
    u = u.plus(vecs[j].upper.scaled(coef(j)));
    v = v.plus(vecs[j].lower.scaled(coef(j)));
  }
  return normalized(u.simplified(), v.simplified(), label);
}

}  // namespace

BasisSet free_basis(const PhysicalParams& params, int n_keep, const BasisSet& aux,
                    FreeBasisInfo* info) {
  if (n_keep <= 0) throw std::invalid_argument("free_basis: n_keep must be positive");
  if (2 * n_keep > aux.size())
    throw std::invalid_argument("free_basis: 2*n_keep exceeds the auxiliary dimension");

  const Pencil free_pencil = assemble(aux, PotentialSpec::zero());
  const SpectrumResult r = solve_pencil(free_pencil);

  std::vector<int> pos, neg;
  for (int i = 0; i < r.eigenvalues.size(); ++i) {
    if (r.eigenvalues(i) >= 1.0 - 1e-9) pos.push_back(i);
    else if (r.eigenvalues(i) <= -1.0 + 1e-9) neg.push_back(i);
  }
  if (static_cast<int>(pos.size()) < n_keep || static_cast<int>(neg.size()) < n_keep)
    throw ConstructionError("free_basis: fewer than n_keep states on one side of the gap");

  if (info) {
    info->n_positive = static_cast<int>(pos.size());
    info->n_negative = static_cast<int>(neg.size());
    info->aux_residual_max = r.residual_max;
    info->aux_s_condition = r.s_condition;
  }

  BasisSet out;
  out.scheme = BalanceScheme::free_basis;
  out.params = params;
  for (int k = 0; k < n_keep; ++k) {
    const int i = neg[neg.size() - 1 - k];  // nearest the gap first
    out.vectors.push_back(combine(aux.vectors, r.eigenvectors.col(i),
                                  "free-neg" + std::to_string(k)));
  }
  for (int k = 0; k < n_keep; ++k) {
    out.vectors.push_back(combine(aux.vectors, r.eigenvectors.col(pos[k]),
                                  "free-pos" + std::to_string(k)));
  }
  return out;
}

std::pair<std::optional<BasisVector>, std::optional<BasisVector>>
split_on_free_branches(const BasisVector& vec, const BasisSet& aux) {
  const Pencil free_pencil = assemble(aux, PotentialSpec::zero());
  const SpectrumResult r = solve_pencil(free_pencil);

  Eigen::VectorXd m(aux.size());
  for (int j = 0; j < aux.size(); ++j)
    m(j) = inner(vec.upper, aux.vectors[j].upper) + inner(vec.lower, aux.vectors[j].lower);
  const Eigen::VectorXd amp = r.eigenvectors.transpose() * m;

  auto build = [&](bool positive, const char* label) -> std::optional<BasisVector> {
    Eigen::VectorXd coef = Eigen::VectorXd::Zero(aux.size());
    double norm2 = 0.0;
    for (int k = 0; k < r.eigenvalues.size(); ++k) {
      const bool on_branch = positive ? r.eigenvalues(k) >= 1.0 - 1e-9
                                      : r.eigenvalues(k) <= -1.0 + 1e-9;
      if (!on_branch) continue;
      coef += amp(k) * r.eigenvectors.col(k);
      norm2 += amp(k) * amp(k);
    }
    if (norm2 < 1e-12) return std::nullopt;
    return combine(aux.vectors, coef, label);
  };
  return {build(true, "proj-pos"), build(false, "proj-neg")};
}

}  // namespace diracgap
