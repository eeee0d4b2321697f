#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "diracgap/basis.hpp"
#include "diracgap/model.hpp"

#include "json.hpp"

namespace diracgap {

struct PencilMeta {
  std::vector<std::string> labels;
  std::string potential;
  double hermiticity_defect = 0.0;  // max |H - H^T| before symmetrization
  double defect_tolerance = 0.0;
};

// Real symmetric pair (H, S) of the discretized eigenvalue problem Hx = lambda Sx.
struct Pencil {
  Eigen::MatrixXd h;
  Eigen::MatrixXd s;
  PencilMeta meta;

  int dim() const { return static_cast<int>(h.rows()); }
};

// S_ij = <u_i,u_j> + <v_i,v_j>;
// H_ij = <u_i,u_j> - <v_i,v_j> + <u_i,V u_j> + <v_i,V v_j>
//        + <u_i, D+ v_j> + <v_i, D- u_j>,  then symmetrized with the defect
// recorded.  Balance-weighted lowers evaluate the D+ cross term through
// integration by parts (<u, D+ v> = <D- u, v>; boundary terms vanish for
// admissible components).
Pencil assemble(const BasisSet& basis, const PotentialSpec& potential);

// (d+1)-dimensional pencil; existing entries are copied bit-identically.
Pencil append_vector(const Pencil& p, const BasisSet& basis, const PotentialSpec& potential,
                     const BasisVector& extra);

nlohmann::json pencil_to_json(const Pencil& p);

}  // namespace diracgap
