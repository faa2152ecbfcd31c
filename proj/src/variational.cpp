#include "dualcat/variational.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>
#include <utility>
#include <vector>

#include "dualcat/error.hpp"
#include "dualcat/random.hpp"

namespace dualcat {

namespace {

double positive_height(const GraphCurve& curve, double x) {
  const double y = curve.y(x).value;
  if (!(y > 0.0)) {
    std::ostringstream msg;
    msg << "curve leaves the half-plane y > 0 at x = " << x << " (y = " << y << ")";
    throw Error(ErrorKind::DomainError, msg.str());
  }
  return y;
}

constexpr std::size_t kBumpsPerField = 3;
constexpr std::int64_t kMinBumpPanels = 4;
constexpr double kCorrectionFloor = 1e-10;

}  // namespace

EnergyValue energy(const GraphCurve& curve, DirectionSpec u, double alpha, std::size_t panels) {
  const Interval& d = curve.domain();
  const DualVec2 dir = u.vector();
  const SmoothFunction power = smooth::pow_alpha(alpha);

  const DualScalar total = composite_gauss5(
      [&](double x) {
        positive_height(curve, x);
        return lift(power, dual_dot(dir, evaluate(curve, x))) * dual_norm(velocity(curve, x));
      },
      d.lo, d.hi, panels);

  const double e0 = composite_gauss5(
      [&](double x) {
        const Jet y = curve.y(x);
        return std::pow(positive_height(curve, x), alpha) * std::sqrt(1.0 + y.d1 * y.d1);
      },
      d.lo, d.hi, panels);

  double e1 = 0.0;
  if (alpha != 0.0) {
    e1 = alpha * composite_gauss5(
                     [&](double x) {
                       const Jet y = curve.y(x);
                       const double h = positive_height(curve, x);
                       return (curve.z(x).value + u.v * x) * std::pow(h, alpha - 1.0) *
                              std::sqrt(1.0 + y.d1 * y.d1);
                     },
                     d.lo, d.hi, panels);
  }
  return {total, e0, e1};
}

double el_residual_real(const GraphCurve& curve, double alpha, double x) {
  const Jet y = curve.y(x);
  const double h = positive_height(curve, x);
  return y.d2 / (1.0 + y.d1 * y.d1) - alpha / h;
}

double el_residual_dual(const GraphCurve& curve, double alpha, DirectionSpec u, double x) {
  const Jet y = curve.y(x);
  const Jet z = curve.z(x);
  const double h = positive_height(curve, x);
  return z.d2 + alpha * (y.d1 / h) * (z.d1 + u.v) + alpha * (z.value + u.v * x) / (h * h);
}

double first_integral_residual(const GraphCurve& curve, double alpha, double c, double x) {
  const Jet y = curve.y(x);
  const double h = positive_height(curve, x);
  return 1.0 + y.d1 * y.d1 - c * c * std::pow(h, 2.0 * alpha);
}

double infer_c(const GraphCurve& curve, double alpha, double x0) {
  const Jet y = curve.y(x0);
  const double h = positive_height(curve, x0);
  return std::sqrt((1.0 + y.d1 * y.d1) / std::pow(h, 2.0 * alpha));
}

double multiplier_residual(const GraphCurve& curve, double alpha, double c, double x) {
  const Jet y = curve.y(x);
  const double h = positive_height(curve, x);
  return y.d2 / c - alpha * c * std::pow(h, 2.0 * alpha - 1.0);
}

Jet Bump::operator()(double x) const {
  const double t = (x - center) / half_width;
  if (!(std::abs(t) < 1.0)) return {};
  const double q = 1.0 - t * t;
  const double hw = half_width;
  return {q * q * q, -6.0 * t * q * q / hw, -6.0 * q * (1.0 - 5.0 * t * t) / (hw * hw)};
}

Jet VariationField::delta_y(double x) const {
  Jet out;
  for (std::size_t k = 0; k < bumps.size(); ++k) {
    const Jet b = bumps[k](x);
    out.value += coef_y[k] * b.value;
    out.d1 += coef_y[k] * b.d1;
    out.d2 += coef_y[k] * b.d2;
  }
  return out;
}

Jet VariationField::delta_z(double x) const {
  Jet out;
  for (std::size_t k = 0; k < bumps.size(); ++k) {
    const Jet b = bumps[k](x);
    out.value += coef_z[k] * b.value;
    out.d1 += coef_z[k] * b.d1;
    out.d2 += coef_z[k] * b.d2;
  }
  const Jet c = correction(x);
  out.value -= correction_coef * c.value;
  out.d1 -= correction_coef * c.d1;
  out.d2 -= correction_coef * c.d2;
  return out;
}

double constraint_integral(const GraphCurve& curve, const VariationField& var, std::size_t panels) {
  const Interval& d = curve.domain();
  return composite_gauss5(
      [&](double x) {
        return curve.y(x).d1 * var.delta_z(x).d1 + curve.z(x).d1 * var.delta_y(x).d1;
      },
      d.lo, d.hi, panels);
}

VariationField make_constrained_variation(const GraphCurve& curve, std::uint64_t seed,
                                          std::size_t panels) {
  const Interval& d = curve.domain();
  const auto n = static_cast<std::int64_t>(panels);
  if (n < kMinBumpPanels) {
    throw Error(ErrorKind::InvalidParams, "variation needs at least 4 quadrature panels");
  }
  const double width = d.width() / static_cast<double>(panels);

  SeededUniform rng(seed);
  VariationField var;
  for (std::size_t k = 0; k < kBumpsPerField; ++k) {
    const std::int64_t first = rng.integer(0, n - kMinBumpPanels);
    const std::int64_t last = rng.integer(first + kMinBumpPanels, n);
    const double lo = d.lo + width * static_cast<double>(first);
    const double hi = last == n ? d.hi : d.lo + width * static_cast<double>(last);
    var.bumps.push_back({0.5 * (lo + hi), 0.5 * (hi - lo)});
    var.coef_y.push_back(rng(-1.0, 1.0));
    var.coef_z.push_back(rng(-1.0, 1.0));
  }
  var.correction = {d.midpoint(), 0.5 * d.width()};

  const double raw = constraint_integral(curve, var, panels);
  if (std::abs(raw) > 1e-14) {
    const double k = composite_gauss5(
        [&](double x) { return curve.y(x).d1 * var.correction(x).d1; }, d.lo, d.hi, panels);
    if (std::abs(k) < kCorrectionFloor) {
      throw Error(ErrorKind::DegenerateVariation,
                  "correction bump does not move the constraint integral; reseed");
    }
    var.correction_coef = raw / k;
  }
  var.constraint_value = constraint_integral(curve, var, panels);
  return var;
}

GraphCurve deform(const GraphCurve& base, CoordinateFn delta_y, CoordinateFn delta_z, double rho,
                  std::size_t panels) {
  auto y = [base, dy = delta_y, rho](double x) {
    const Jet b = base.y(x), d = dy(x);
    return Jet{b.value + rho * d.value, b.d1 + rho * d.d1, b.d2 + rho * d.d2};
  };
  auto z = [base, dz = delta_z, rho](double x) {
    const Jet b = base.z(x), d = dz(x);
    return Jet{b.value + rho * d.value, b.d1 + rho * d.d1, b.d2 + rho * d.d2};
  };
  const Interval& d = base.domain();
  const double a = d.lo;
  const double w_start = base.w(a).value;
  auto slope = [y, z](double t) { return y(t).d1 * z(t).d1; };

  // Running integral at the panel boundaries; a query adds one partial panel.
  const std::size_t n = std::max<std::size_t>(panels, 1);
  const double width = d.width() / static_cast<double>(n);
  auto cumulative = std::make_shared<std::vector<double>>(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double lo = a + width * static_cast<double>(i);
    const double hi = i + 1 == n ? d.hi : lo + width;
    (*cumulative)[i + 1] = (*cumulative)[i] + composite_gauss5(slope, lo, hi, 1);
  }
  auto w = [y, z, slope, a, width, n, w_start, cumulative](double x) {
    const Jet yj = y(x), zj = z(x);
    const auto i = std::min(n - 1, static_cast<std::size_t>(std::max(0.0, (x - a) / width)));
    const double lo = a + width * static_cast<double>(i);
    const double integral = (*cumulative)[i] + composite_gauss5(slope, lo, x, 1);
    return Jet{w_start - integral, -yj.d1 * zj.d1, -(yj.d2 * zj.d1 + yj.d1 * zj.d2)};
  };
  return GraphCurve(base.domain(), y, w, z, AnalyticSource{"deformed"});
}

DualScalar first_variation(const GraphCurve& curve, const VariationField& var, DirectionSpec u,
                           double alpha, double h, std::size_t panels) {
  if (!(h > 0.0)) throw Error(ErrorKind::InvalidParams, "first variation step must be positive");
  auto dy = [var](double x) { return var.delta_y(x); };
  auto dz = [var](double x) { return var.delta_z(x); };
  for (int attempt = 0; attempt < 30; ++attempt, h *= 0.5) {
    try {
      const EnergyValue plus = energy(deform(curve, dy, dz, h, panels), u, alpha, panels);
      const EnergyValue minus = energy(deform(curve, dy, dz, -h, panels), u, alpha, panels);
      return scale(0.5 / h, plus.total - minus.total);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DomainError) throw;
    }
  }
  throw Error(ErrorKind::DomainError, "deformation leaves the half-plane y > 0 for every step");
}

double ResidualReport::MaxAbs::worst() const {
  double out = 0.0;
  for (double v : {admissibility, el_real, el_dual, first_integral, characterization_re,
                   characterization_du}) {
    if (std::isnan(v)) return v;
    out = std::max(out, v);
  }
  return out;
}

ResidualReport residual_report(const GraphCurve& curve, double alpha, DirectionSpec u, double c,
                               const std::vector<double>& grid) {
  ResidualReport r;
  r.grid = grid;
  const std::size_t n = grid.size();
  r.admissibility.resize(n);
  r.el_real.resize(n);
  r.el_dual.resize(n);
  r.first_integral.resize(n);
  r.characterization_re.resize(n);
  r.characterization_du.resize(n);

  // NaN is sticky so a broken evaluation can never look like a pass.
  auto track = [](double& slot, double value) {
    if (std::isnan(value) || std::isnan(slot)) {
      slot = std::nan("");
    } else {
      slot = std::max(slot, std::abs(value));
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    const double x = grid[i];
    r.admissibility[i] = admissibility_residual(curve, x);
    r.el_real[i] = el_residual_real(curve, alpha, x);
    r.el_dual[i] = el_residual_dual(curve, alpha, u, x);
    r.first_integral[i] = first_integral_residual(curve, alpha, c, x);
    const DualScalar ch = characterization_residual(curve, alpha, u, x);
    r.characterization_re[i] = ch.re;
    r.characterization_du[i] = ch.du;

    track(r.max_abs.admissibility, r.admissibility[i]);
    track(r.max_abs.el_real, r.el_real[i]);
    track(r.max_abs.el_dual, r.el_dual[i]);
    track(r.max_abs.first_integral, r.first_integral[i]);
    track(r.max_abs.characterization_re, r.characterization_re[i]);
    track(r.max_abs.characterization_du, r.characterization_du[i]);
  }
  return r;
}

}  // namespace dualcat
