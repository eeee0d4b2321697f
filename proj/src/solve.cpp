#include "diracgap/solve.hpp"

#include <cmath>

#include "diracgap/errors.hpp"

namespace diracgap {

SpectrumResult solve_pencil(const Pencil& p, const SolveOptions& opts) {
  const int d = p.dim();
  if (d == 0) throw DegenerateBasisError("solve_pencil: empty pencil");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> sdec(p.s);
  if (sdec.info() != Eigen::Success)
    throw SolverError("solve_pencil: overlap eigendecomposition failed");
  const Eigen::VectorXd sev = sdec.eigenvalues();
  const double smax = sev.maxCoeff();
  if (!(smax > 0.0)) throw DegenerateBasisError("solve_pencil: overlap matrix is not positive");

  const double cut = opts.overlap_threshold * smax;
  std::vector<int> keep;
  for (int i = 0; i < d; ++i)
    if (sev(i) >= cut) keep.push_back(i);
  if (keep.empty())
    throw DegenerateBasisError("solve_pencil: every overlap direction fell below threshold");

  const int m = static_cast<int>(keep.size());
  Eigen::MatrixXd x(d, m);
  double smin_kept = smax;
  for (int k = 0; k < m; ++k) {
    x.col(k) = sdec.eigenvectors().col(keep[k]) / std::sqrt(sev(keep[k]));
    smin_kept = std::min(smin_kept, sev(keep[k]));
  }

  Eigen::MatrixXd ht = x.transpose() * p.h * x;
  ht = 0.5 * (ht + ht.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> hdec(ht);
  if (hdec.info() != Eigen::Success)
    throw SolverError("solve_pencil: transformed eigendecomposition failed");

  SpectrumResult r;
  r.eigenvalues = hdec.eigenvalues();
  r.eigenvectors = x * hdec.eigenvectors();
  r.n_discarded = d - m;
  r.s_condition = smax / smin_kept;

  // Sign convention for bit-stable regressions.
  for (int k = 0; k < m; ++k) {
    const double amax = r.eigenvectors.col(k).cwiseAbs().maxCoeff();
    for (int i = 0; i < d; ++i) {
      const double c = r.eigenvectors(i, k);
      if (std::abs(c) > 1e-12 * amax) {
        if (c < 0.0) r.eigenvectors.col(k) *= -1.0;
        break;
      }
    }
  }

  r.residuals.resize(m);
  const double hmax = p.h.cwiseAbs().maxCoeff();
  for (int k = 0; k < m; ++k) {
    r.residuals(k) =
        (p.h * r.eigenvectors.col(k) - r.eigenvalues(k) * (p.s * r.eigenvectors.col(k))).norm();
  }
  r.residual_max = (m > 0) ? r.residuals.maxCoeff() : 0.0;
  if (r.residual_max > opts.residual_rel_tol * std::max(hmax, 1.0))
    throw SolverError("solve_pencil: residual " + std::to_string(r.residual_max) +
                      " exceeds tolerance");
  return r;
}

std::vector<std::pair<int, double>> gap_eigenvalues(const SpectrumResult& r, double margin) {
  std::vector<std::pair<int, double>> out;
  for (int i = 0; i < r.eigenvalues.size(); ++i) {
    const double v = r.eigenvalues(i);
    if (v > -1.0 + margin && v < 1.0 - margin) out.emplace_back(i, v);
  }
  return out;
}

nlohmann::json spectrum_to_json(const SpectrumResult& r) {
  std::vector<double> ev(r.eigenvalues.data(), r.eigenvalues.data() + r.eigenvalues.size());
  return nlohmann::json{{"eigenvalues", ev},
                        {"n_discarded", r.n_discarded},
                        {"s_condition", r.s_condition},
                        {"residual_max", r.residual_max}};
}

}  // namespace diracgap
