#include "dualcat/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "dualcat/error.hpp"
#include "dualcat/quadrature.hpp"

namespace dualcat {

namespace {

constexpr double kArcLengthTol = 1e-12;

double slack(const Interval& d) {
  return 1e-12 * std::max({1.0, std::abs(d.lo), std::abs(d.hi)});
}

double speed(const GraphCurve& curve, double x) {
  const double yp = curve.y(x).d1;
  return std::sqrt(1.0 + yp * yp);
}

}  // namespace

bool Interval::contains(double x) const {
  const double tol = slack(*this);
  return x >= lo - tol && x <= hi + tol;
}

std::vector<double> uniform_grid(const Interval& domain, std::size_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidParams, "a grid needs at least two points");
  std::vector<double> grid(n);
  const double h = domain.width() / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) grid[i] = domain.lo + h * static_cast<double>(i);
  grid.back() = domain.hi;
  return grid;
}

GraphCurve::GraphCurve(Interval domain, CoordinateFn y, CoordinateFn w, CoordinateFn z,
                       CurveSource source)
    : domain_(domain), y_(std::move(y)), w_(std::move(w)), z_(std::move(z)),
      source_(std::move(source)) {
  if (!(domain_.lo < domain_.hi)) {
    throw Error(ErrorKind::InvalidParams, "curve domain must satisfy lo < hi");
  }
}

void GraphCurve::require_in_domain(double x) const {
  if (!domain_.contains(x)) {
    std::ostringstream msg;
    msg << "x = " << x << " outside [" << domain_.lo << ", " << domain_.hi << "]";
    throw Error(ErrorKind::OutOfDomain, msg.str());
  }
}

Jet GraphCurve::y(double x) const {
  require_in_domain(x);
  return y_(x);
}

Jet GraphCurve::w(double x) const {
  require_in_domain(x);
  return w_(x);
}

Jet GraphCurve::z(double x) const {
  require_in_domain(x);
  return z_(x);
}

DualVec2 evaluate(const GraphCurve& curve, double x) {
  return {{x, curve.y(x).value}, {curve.w(x).value, curve.z(x).value}};
}

DualVec2 velocity(const GraphCurve& curve, double x) {
  return {{1.0, curve.y(x).d1}, {curve.w(x).d1, curve.z(x).d1}};
}

double admissibility_residual(const GraphCurve& curve, double x) {
  return curve.w(x).d1 + curve.y(x).d1 * curve.z(x).d1;
}

Frame frame(const GraphCurve& curve, double x) {
  const double yp = curve.y(x).d1;
  const double zp = curve.z(x).d1;
  const double nu = std::sqrt(1.0 + yp * yp);
  const Vec2 t{1.0 / nu, yp / nu};
  const Vec2 n{-yp / nu, 1.0 / nu};
  return {{t, zp * n}, {n, -zp * t}, nu};
}

CurvatureSample curvature(const GraphCurve& curve, double x) {
  const Jet y = curve.y(x);
  const double zpp = curve.z(x).d2;
  const double nu = std::sqrt(1.0 + y.d1 * y.d1);
  return {x, {y.d2 / (nu * nu * nu), zpp / nu}};
}

DualScalar characterization_residual(const GraphCurve& curve, double alpha, DirectionSpec u,
                                     double x) {
  const DualVec2 dir = u.vector();
  const DualScalar height = dual_dot(evaluate(curve, x), dir);
  const DualScalar normal_component = dual_dot(frame(curve, x).N, dir);
  return curvature(curve, x).kappa - scale(alpha, normal_component / height);
}

double arc_length(const GraphCurve& curve, double x0, double x1) {
  curve.require_in_domain(x0);
  curve.require_in_domain(x1);
  if (x0 == x1) return 0.0;
  return adaptive_integrate([&curve](double x) { return speed(curve, x); }, x0, x1);
}

double reparametrize_by_arclength(const GraphCurve& curve, double s) {
  const Interval& d = curve.domain();
  const double total = arc_length(curve, d.lo, d.hi);
  if (s < -kArcLengthTol || s > total + kArcLengthTol) {
    std::ostringstream msg;
    msg << "arc length " << s << " outside [0, " << total << "]";
    throw Error(ErrorKind::OutOfDomain, msg.str());
  }
  if (s <= 0.0) return d.lo;
  if (s >= total) return d.hi;

  auto residual = [&](double x) { return arc_length(curve, d.lo, x) - s; };

  // ν >= 1 makes the residual strictly increasing, so [lo, hi] stays a bracket.
  double lo = d.lo, hi = d.hi;
  double f_lo = -s, f_hi = total - s;
  for (int i = 0; i < 6; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = residual(mid);
    if (std::abs(f_mid) <= kArcLengthTol) return mid;
    if (f_mid < 0.0) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
      f_hi = f_mid;
    }
  }

  double x_prev = lo, f_prev = f_lo;
  double x_cur = hi, f_cur = f_hi;
  for (int iter = 0; iter < 100; ++iter) {
    double x_next = x_cur - f_cur * (x_cur - x_prev) / (f_cur - f_prev);
    if (!(x_next > lo && x_next < hi)) x_next = 0.5 * (lo + hi);
    const double f_next = residual(x_next);
    if (std::abs(f_next) <= kArcLengthTol) return x_next;
    if (f_next < 0.0) {
      lo = x_next;
    } else {
      hi = x_next;
    }
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x_next))) {
      return x_next;
    }
    x_prev = x_cur;
    f_prev = f_cur;
    x_cur = x_next;
    f_cur = f_next;
  }
  return x_cur;
}

DualVec2 arclength_velocity(const GraphCurve& curve, double x) {
  const double inv_nu = 1.0 / speed(curve, x);
  return DualScalar{inv_nu} * velocity(curve, x);
}

}  // namespace dualcat
