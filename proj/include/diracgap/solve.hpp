#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "diracgap/pencil.hpp"

#include "json.hpp"

namespace diracgap {

struct SolveOptions {
  double overlap_threshold = 1e-10;  // relative to the largest S eigenvalue
  double residual_rel_tol = 1e-8;    // residual bound, relative to max|H|
};

struct SpectrumResult {
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXd eigenvectors;  // columns, basis coordinates, x^T S x = 1
  int n_discarded = 0;
  double s_condition = 1.0;  // ratio of extreme retained overlap eigenvalues
  Eigen::VectorXd residuals;  // per pair ||Hx - lambda Sx||_2
  double residual_max = 0.0;
};

// Canonical orthogonalization: eigendecompose S, drop directions below
// overlap_threshold * max, solve the transformed symmetric problem, map back.
// Deterministic for identical input; eigenvectors carry the sign convention
// "first nonzero coefficient positive".
SpectrumResult solve_pencil(const Pencil& p, const SolveOptions& opts = {});

// Eigenvalues strictly inside (-1 + margin, 1 - margin) with their indices.
std::vector<std::pair<int, double>> gap_eigenvalues(const SpectrumResult& r,
                                                    double margin = 0.0);

nlohmann::json spectrum_to_json(const SpectrumResult& r);

}  // namespace diracgap
