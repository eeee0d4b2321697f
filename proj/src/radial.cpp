#include "diracgap/radial.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "diracgap/errors.hpp"

namespace diracgap {

namespace {

constexpr double kExponentMin = 1e-8;
constexpr double kExponentMax = 1e12;

void check_exponent(double a) {
  if (!(a >= kExponentMin && a <= kExponentMax))
    throw std::domain_error("RadialTerm: exponent outside [1e-8, 1e12]");
}

}  // namespace

RadialTerm::RadialTerm(double coeff, int power, double exponent)
    : coeff(coeff), power(power), exponent(exponent) {
  if (power < 0) throw std::domain_error("RadialTerm: power must be >= 0");
  check_exponent(exponent);
}

RadialTerm::RadialTerm(double coeff, int power, double exponent, TermWeight weight,
                       double wpar0, double wpar1)
    : coeff(coeff), power(power), exponent(exponent), weight(weight), wpar0(wpar0), wpar1(wpar1) {
  if (power < 0) throw std::domain_error("RadialTerm: power must be >= 0");
  check_exponent(exponent);
  if (weight == TermWeight::coulomb_balance && !(wpar0 > 0.0))
    throw std::domain_error("RadialTerm: coulomb balance weight needs alphaZ > 0");
  if (weight == TermWeight::well_balance) {
    if (!(wpar1 > 0.0)) throw std::domain_error("RadialTerm: well balance weight needs width > 0");
    if (wpar0 >= 2.0) throw std::domain_error("RadialTerm: well balance denominator vanishes (V0 >= 2)");
  }
}

double RadialTerm::value(double r) const {
  double v = coeff * std::pow(r, power) * std::exp(-exponent * r * r);
  switch (weight) {
    case TermWeight::plain: break;
    case TermWeight::coulomb_balance: v /= 2.0 * r + wpar0; break;
    case TermWeight::well_balance:
      v /= 2.0 - wpar0 * std::exp(-r * r / (wpar1 * wpar1));
      break;
  }
  return v;
}

bool RadialTerm::same_shape(const RadialTerm& o) const {
  return power == o.power && exponent == o.exponent && weight == o.weight &&
         wpar0 == o.wpar0 && wpar1 == o.wpar1;
}

bool RadialFunction::has_weighted_terms() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const RadialTerm& t) { return t.weight != TermWeight::plain; });
}

int RadialFunction::min_power() const {
  if (terms_.empty()) throw std::logic_error("min_power of the zero function");
  int m = terms_.front().power;
  for (const auto& t : terms_) m = std::min(m, t.power);
  return m;
}

double RadialFunction::value(double r) const {
  double s = 0.0;
  for (const auto& t : terms_) s += t.value(r);
  return s;
}

RadialFunction RadialFunction::scaled(double s) const {
  std::vector<RadialTerm> out = terms_;
  for (auto& t : out) t.coeff *= s;
  return RadialFunction(std::move(out));
}

RadialFunction RadialFunction::plus(const RadialFunction& g) const {
  std::vector<RadialTerm> out = terms_;
  out.insert(out.end(), g.terms_.begin(), g.terms_.end());
  return RadialFunction(std::move(out));
}

RadialFunction RadialFunction::simplified() const {
  std::vector<RadialTerm> out;
  for (const auto& t : terms_) {
    bool merged = false;
    for (auto& o : out) {
      if (o.same_shape(t)) {
        o.coeff += t.coeff;
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back(t);
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const RadialTerm& t) { return t.coeff == 0.0; }),
            out.end());
  return RadialFunction(std::move(out));
}

bool RadialFunction::coulomb_compatible() const {
  return terms_.empty() || min_power() >= 1;
}

double moment(int n, double c) {
  if (n < 0) throw std::domain_error("moment: n must be >= 0");
  if (!(c > 0.0)) throw std::domain_error("moment: c must be positive");
  return 0.5 * std::exp(std::lgamma(0.5 * (n + 1)) - 0.5 * (n + 1) * std::log(c));
}

namespace {

void require_plain(const RadialFunction& f, const char* op) {
  if (f.has_weighted_terms())
    throw UnsupportedOperationError(std::string(op) + ": undefined on balance-weighted terms");
}

}  // namespace

RadialFunction apply_d_minus(const RadialFunction& f) {
  require_plain(f, "apply_d_minus");
  std::vector<RadialTerm> out;
  for (const auto& t : f.terms()) {
    if (t.power == 0)
      throw std::domain_error("apply_d_minus: power-0 term maps outside the term grammar");
    if (t.power != 1)
      out.emplace_back(t.coeff * (t.power - 1), t.power - 1, t.exponent);
    out.emplace_back(-2.0 * t.exponent * t.coeff, t.power + 1, t.exponent);
  }
  return RadialFunction(std::move(out)).simplified();
}

RadialFunction apply_d_plus(const RadialFunction& f) {
  require_plain(f, "apply_d_plus");
  std::vector<RadialTerm> out;
  for (const auto& t : f.terms()) {
    if (t.power == 0)
      throw std::domain_error("apply_d_plus: power-0 term maps outside the term grammar");
    out.emplace_back(-(t.power + 1) * t.coeff, t.power - 1, t.exponent);
    out.emplace_back(2.0 * t.exponent * t.coeff, t.power + 1, t.exponent);
  }
  return RadialFunction(std::move(out)).simplified();
}

namespace {

int weight_origin_shift(const InnerWeight& w) {
  if (w.kind == InnerWeight::Kind::inv_r) return -1;
  if (w.kind == InnerWeight::Kind::potential &&
      w.pot.kind() == PotentialKind::point_coulomb)
    return -1;
  return 0;
}

void check_integrable(const RadialFunction& f, const RadialFunction& g,
                      const InnerWeight& w) {
  const int shift = weight_origin_shift(w);
  if (shift == 0) return;
  for (const auto& ti : f.terms())
    for (const auto& tj : g.terms())
      if (ti.power + tj.power + shift < 0)
        throw IntegrabilityError("inner: integrand divergent at the origin");
}

bool closed_form_possible(const RadialFunction& f, const RadialFunction& g,
                          const InnerWeight& w) {
  if (f.has_weighted_terms() || g.has_weighted_terms()) return false;
  if (w.kind != InnerWeight::Kind::potential) return true;
  return w.pot.kind() != PotentialKind::gaussian_well;
}

double closed_form_inner(const RadialFunction& f, const RadialFunction& g,
                         const InnerWeight& w) {
  int shift = 0;
  double factor = 1.0;
  if (w.kind == InnerWeight::Kind::inv_r) shift = -1;
  if (w.kind == InnerWeight::Kind::potential) {
    switch (w.pot.kind()) {
      case PotentialKind::zero: return 0.0;
      case PotentialKind::point_coulomb:
        shift = -1;
        factor = -w.pot.coulomb_strength();
        break;
      case PotentialKind::gaussian_well:
        throw std::logic_error("closed_form_inner: well weight not closed-form");
    }
  }
  double s = 0.0;
  for (const auto& ti : f.terms())
    for (const auto& tj : g.terms())
      s += ti.coeff * tj.coeff * moment(ti.power + tj.power + shift, ti.exponent + tj.exponent);
  return factor * s;
}

// 15-point Kronrod nodes with embedded 7-point Gauss rule.
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

template <class F>
void gk15(const F& f, double a, double b, double& value, double& err) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(mid);
  double resk = kWgk[7] * fc;
  double resg = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kXgk[i];
    const double fsum = f(mid - dx) + f(mid + dx);
    resk += kWgk[i] * fsum;
    if (i % 2 == 1) resg += kWg[i / 2] * fsum;
  }
  value = resk * half;
  const double diff = std::abs(resk - resg) * half;
  err = std::min(diff, std::pow(200.0 * diff, 1.5));
}

struct Segment {
  double a, b, value, err;
};

double integrand_value(const RadialFunction& f, const RadialFunction& g,
                       const InnerWeight& w, double r) {
  double v = f.value(r) * g.value(r);
  switch (w.kind) {
    case InnerWeight::Kind::one: break;
    case InnerWeight::Kind::inv_r: v /= r; break;
    case InnerWeight::Kind::potential: v *= w.pot.value(r); break;
  }
  return v;
}

double quadrature_inner(const RadialFunction& f, const RadialFunction& g,
                        const InnerWeight& w, const QuadratureOptions& opts) {
  // Cutoff where every pairwise Gaussian tail is negligible.
  double c_min = kExponentMax;
  int n_max = 0;
  for (const auto& ti : f.terms())
    for (const auto& tj : g.terms()) {
      c_min = std::min(c_min, ti.exponent + tj.exponent);
      n_max = std::max(n_max, ti.power + tj.power);
    }
  double r_cut = std::sqrt(90.0 / c_min);
  for (int it = 0; it < 3; ++it)
    r_cut = std::sqrt((90.0 + n_max * std::max(0.0, std::log(r_cut))) / c_min);

  // Panel breakpoints resolving every length scale present.
  std::set<double> scales;
  auto add_scales = [&](double a) {
    const double s = 1.0 / std::sqrt(a);
    for (double m : {0.125, 0.5, 2.0, 8.0}) {
      const double p = m * s;
      if (p > 0.0 && p < r_cut) scales.insert(p);
    }
  };
  for (const auto& t : f.terms()) add_scales(t.exponent);
  for (const auto& t : g.terms()) add_scales(t.exponent);
  if (w.kind == InnerWeight::Kind::potential &&
      w.pot.kind() == PotentialKind::gaussian_well)
    add_scales(1.0 / (w.pot.well_width() * w.pot.well_width()));
  scales.insert(r_cut);

  auto eval = [&](double r) { return integrand_value(f, g, w, r); };

  std::vector<Segment> segs;
  double lo = 0.0;
  double rough = 0.0, rough_abs = 0.0;
  for (double hi : scales) {
    Segment s{lo, hi, 0.0, 0.0};
    gk15(eval, lo, hi, s.value, s.err);
    rough += s.value;
    rough_abs += std::abs(s.value);
    segs.push_back(s);
    lo = hi;
  }

  const double eps_abs =
      std::max(opts.rel_tol * std::max(std::abs(rough), 1e-3 * rough_abs), 1e-300);

  // Bisect the worst segment until the total error estimate is inside budget.
  int n_splits = 0;
  auto total_err = [&] {
    double e = 0.0;
    for (const auto& s : segs) e += s.err;
    return e;
  };
  while (total_err() > eps_abs && n_splits < opts.max_intervals) {
    size_t worst = 0;
    for (size_t i = 1; i < segs.size(); ++i)
      if (segs[i].err > segs[worst].err) worst = i;
    Segment s = segs[worst];
    const double mid = 0.5 * (s.a + s.b);
    if (mid <= s.a || mid >= s.b) break;  // interval exhausted at double precision
    Segment left{s.a, mid, 0.0, 0.0}, right{mid, s.b, 0.0, 0.0};
    gk15(eval, left.a, left.b, left.value, left.err);
    gk15(eval, right.a, right.b, right.value, right.err);
    segs[worst] = left;
    segs.push_back(right);
    ++n_splits;
  }

  double total = 0.0;
  for (const auto& s : segs) total += s.value;
  const double err = total_err();
  if (err > std::max(100.0 * opts.rel_tol * std::abs(total), 1e-280))
    throw IntegrationError("inner: quadrature did not reach the requested tolerance",
                           total, err);
  return total;
}

}  // namespace

double inner(const RadialFunction& f, const RadialFunction& g, const InnerWeight& w,
             const QuadratureOptions& opts) {
  if (f.is_zero() || g.is_zero()) return 0.0;
  check_integrable(f, g, w);
  if (closed_form_possible(f, g, w)) return closed_form_inner(f, g, w);
  return quadrature_inner(f, g, w, opts);
}

}  // namespace diracgap
