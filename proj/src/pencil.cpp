#include "diracgap/pencil.hpp"

#include <cmath>

#include "diracgap/errors.hpp"

namespace diracgap {

namespace {

void check_admissible(const BasisSet& basis, const PotentialSpec& potential) {
  if (!potential.singular_at_origin()) return;
  for (const auto& v : basis.vectors)
    if (!v.coulomb_compatible())
      throw IntegrabilityError("assemble: basis vector '" + v.label +
                               "' is not Coulomb-compatible (min power < 1)");
}

double overlap_entry(const BasisVector& a, const BasisVector& b) {
  return inner(a.upper, b.upper) + inner(a.lower, b.lower);
}

// <u_i, D+ v_j>, routed through integration by parts when v_j carries a
// balance weight (D+/D- are undefined on weighted terms).
double cross_dplus(const RadialFunction& ui, const RadialFunction& vj) {
  if (ui.is_zero() || vj.is_zero()) return 0.0;
  if (!vj.has_weighted_terms()) return inner(ui, apply_d_plus(vj));
  if (ui.has_weighted_terms())
    throw UnsupportedOperationError("assemble: cross term with two weighted components");
  return inner(apply_d_minus(ui), vj);
}

double cross_dminus(const RadialFunction& vi, const RadialFunction& uj) {
  if (vi.is_zero() || uj.is_zero()) return 0.0;
  if (!uj.has_weighted_terms()) return inner(vi, apply_d_minus(uj));
  if (vi.has_weighted_terms())
    throw UnsupportedOperationError("assemble: cross term with two weighted components");
  return inner(apply_d_plus(vi), uj);
}

double action_entry(const BasisVector& a, const BasisVector& b, const PotentialSpec& pot) {
  double h = inner(a.upper, b.upper) - inner(a.lower, b.lower);
  if (pot.kind() != PotentialKind::zero) {
    const InnerWeight w = InnerWeight::potential(pot);
    h += inner(a.upper, b.upper, w) + inner(a.lower, b.lower, w);
  }
  h += cross_dplus(a.upper, b.lower);
  h += cross_dminus(a.lower, b.upper);
  return h;
}

void finalize(Pencil& p) {
  const int d = p.dim();
  double defect = 0.0;
  double hmax = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      defect = std::max(defect, std::abs(p.h(i, j) - p.h(j, i)));
      hmax = std::max(hmax, std::abs(p.h(i, j)));
    }
  p.meta.hermiticity_defect = defect;
  p.meta.defect_tolerance = 1e-9 * hmax;
  if (defect > p.meta.defect_tolerance)
    throw AssemblyError("assemble: hermiticity defect " + std::to_string(defect) +
                        " exceeds 1e-9 * max|H|; basis/potential pairing is inadmissible");
  p.h = 0.5 * (p.h + p.h.transpose()).eval();
}

}  // namespace

Pencil assemble(const BasisSet& basis, const PotentialSpec& potential) {
  check_admissible(basis, potential);
  const int d = basis.size();
  Pencil p;
  p.h.resize(d, d);
  p.s.resize(d, d);
  p.meta.potential = potential.describe();
  for (const auto& v : basis.vectors) p.meta.labels.push_back(v.label);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      p.h(i, j) = action_entry(basis.vectors[i], basis.vectors[j], potential);
      if (j >= i) {
        p.s(i, j) = overlap_entry(basis.vectors[i], basis.vectors[j]);
        p.s(j, i) = p.s(i, j);
      }
    }
  }
  finalize(p);
  return p;
}

Pencil append_vector(const Pencil& p, const BasisSet& basis, const PotentialSpec& potential,
                     const BasisVector& extra) {
  if (p.dim() != basis.size())
    throw AssemblyError("append_vector: pencil and basis dimensions disagree");
  if (potential.singular_at_origin() && !extra.coulomb_compatible())
    throw IntegrabilityError("append_vector: extra vector is not Coulomb-compatible");

  const int d = p.dim();
  Pencil q;
  q.h.resize(d + 1, d + 1);
  q.s.resize(d + 1, d + 1);
  q.h.topLeftCorner(d, d) = p.h;
  q.s.topLeftCorner(d, d) = p.s;
  q.meta = p.meta;
  q.meta.labels.push_back(extra.label);

  double defect = q.meta.hermiticity_defect;
  double hmax = q.h.cwiseAbs().maxCoeff();
  for (int i = 0; i < d; ++i) {
    const double hid = action_entry(basis.vectors[i], extra, potential);
    const double hdi = action_entry(extra, basis.vectors[i], potential);
    defect = std::max(defect, std::abs(hid - hdi));
    const double sym = 0.5 * (hid + hdi);
    hmax = std::max(hmax, std::abs(sym));
    q.h(i, d) = sym;
    q.h(d, i) = sym;
    const double sid = overlap_entry(basis.vectors[i], extra);
    q.s(i, d) = sid;
    q.s(d, i) = sid;
  }
  q.h(d, d) = action_entry(extra, extra, potential);
  q.s(d, d) = overlap_entry(extra, extra);
  hmax = std::max(hmax, std::abs(q.h(d, d)));
  q.meta.hermiticity_defect = defect;
  q.meta.defect_tolerance = 1e-9 * hmax;
  if (defect > q.meta.defect_tolerance)
    throw AssemblyError("append_vector: hermiticity defect above tolerance");
  return q;
}

nlohmann::json pencil_to_json(const Pencil& p) {
  nlohmann::json j;
  j["dim"] = p.dim();
  std::vector<double> h, s;
  h.reserve(p.dim() * p.dim());
  s.reserve(p.dim() * p.dim());
  for (int i = 0; i < p.dim(); ++i)
    for (int k = 0; k < p.dim(); ++k) {
      h.push_back(p.h(i, k));
      s.push_back(p.s(i, k));
    }
  j["h"] = h;
  j["s"] = s;
  j["meta"] = {{"labels", p.meta.labels},
               {"potential", p.meta.potential},
               {"hermiticity_defect", p.meta.hermiticity_defect},
               {"defect_tolerance", p.meta.defect_tolerance}};
  return j;
}

}  // namespace diracgap
