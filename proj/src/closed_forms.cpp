#include "dualcat/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "dualcat/error.hpp"

namespace dualcat {

namespace {

void require(bool ok, ErrorKind kind, const std::string& what) {
  if (!ok) throw Error(kind, what);
}

}  // namespace

GraphCurve catenary_alpha0(const CatenaryParams& p, Interval domain) {
  require(std::isfinite(p.c) && p.c >= 1.0, ErrorKind::InvalidParams,
          "alpha = 0 needs c >= 1 so that the slope sqrt(c^2 - 1) is real");
  const double sign = p.branch == Branch::Plus ? 1.0 : -1.0;
  const double slope = sign * std::sqrt(p.c * p.c - 1.0);
  const double m = p.m, d1 = p.d1, d2 = p.d2, d3 = p.d3;

  CatenaryParams params = p;
  params.alpha = 0.0;
  return GraphCurve(
      domain, [=](double x) { return Jet{slope * x + m, slope, 0.0}; },
      [=](double x) { return Jet{-slope * d1 * x + d3, -slope * d1, 0.0}; },
      [=](double x) { return Jet{d1 * x + d2, d1, 0.0}; }, ClosedFormSource{params});
}

GraphCurve catenary_alpha1(const CatenaryParams& p, Interval domain) {
  require(std::isfinite(p.c) && p.c > 0.0, ErrorKind::InvalidParams, "alpha = 1 needs c > 0");
  const double c = p.c, m = p.m, v = p.v, d1 = p.d1, d2 = p.d2, d3 = p.d3;

  auto y = [=](double x) {
    const double t = c * x + m;
    const double ch = std::cosh(t);
    return Jet{ch / c, std::sinh(t), c * ch};
  };
  auto z = [=](double x) {
    const double t = c * x + m;
    const double se = 1.0 / std::cosh(t);
    const double th = std::tanh(t);
    return Jet{-v * x + d1 * se + d2 * th,
               -v - c * d1 * se * th + c * d2 * se * se,
               -c * c * d1 * se * (se * se - th * th) - 2.0 * c * c * d2 * se * se * th};
  };
  auto w = [=](double x) {
    const double t = c * x + m;
    const double ch = std::cosh(t);
    const double se = 1.0 / ch;
    const double th = std::tanh(t);
    return Jet{(v / c) * ch + c * d1 * x - d1 * th + d2 * se + d3,
               v * std::sinh(t) + c * d1 * (1.0 - se * se) - c * d2 * se * th,
               c * v * ch + 2.0 * c * c * d1 * se * se * th - c * c * d2 * se * (se * se - th * th)};
  };

  CatenaryParams params = p;
  params.alpha = 1.0;
  return GraphCurve(domain, y, w, z, ClosedFormSource{params});
}

GraphCurve catenary_alpha_minus1(const CatenaryParams& p, std::optional<Interval> domain,
                                 double margin_fraction) {
  require(std::isfinite(p.R) && p.R > 0.0, ErrorKind::InvalidParams, "alpha = -1 needs R > 0");
  require(margin_fraction > 0.0 && margin_fraction < 1.0, ErrorKind::InvalidParams,
          "circle margin fraction must lie in (0, 1)");
  const double R = p.R, m = p.m, v = p.v, d1 = p.d1, d2 = p.d2, d3 = p.d3;

  const double delta = margin_fraction * R;
  Interval clipped{m - R + delta, m + R - delta};
  if (domain) {
    if (domain->lo <= m - R || domain->hi >= m + R) {
      std::ostringstream msg;
      msg << "domain [" << domain->lo << ", " << domain->hi << "] must lie strictly inside |x - m| < "
          << R;
      throw Error(ErrorKind::DomainError, msg.str());
    }
    clipped = {std::max(domain->lo, clipped.lo), std::min(domain->hi, clipped.hi)};
  }

  auto y = [=](double x) {
    const double u = x - m;
    const double r = std::sqrt(R * R - u * u);
    return Jet{r, -u / r, -R * R / (r * r * r)};
  };
  auto z = [=](double x) {
    const double u = x - m;
    const double r = std::sqrt(R * R - u * u);
    const double as = std::asin(u / R);
    return Jet{-v * x + d1 * u + d2 * (r + u * as), -v + d1 + d2 * as, d2 / r};
  };
  auto w = [=](double x) {
    const double u = x - m;
    const double r = std::sqrt(R * R - u * u);
    const double as = std::asin(u / R);
    const double yp = -u / r;
    const double ypp = -R * R / (r * r * r);
    return Jet{(v - d1) * r + d2 * u - d2 * r * as + d3,
               (v - d1) * yp - d2 * yp * as,
               (v - d1) * ypp - d2 * (ypp * as + yp / r)};
  };

  CatenaryParams params = p;
  params.alpha = -1.0;
  return GraphCurve(clipped, y, w, z, ClosedFormSource{params});
}

GraphCurve closed_form_catenary(const CatenaryParams& p, std::optional<Interval> domain) {
  if (p.alpha == -1.0) return catenary_alpha_minus1(p, domain);
  if (!domain) throw Error(ErrorKind::InvalidParams, "a domain is required for alpha = 0 and 1");
  if (p.alpha == 0.0) return catenary_alpha0(p, *domain);
  if (p.alpha == 1.0) return catenary_alpha1(p, *domain);
  std::ostringstream msg;
  msg << "no closed form for alpha = " << p.alpha << " (use the numeric solver)";
  throw Error(ErrorKind::InvalidParams, msg.str());
}

RealCatenary real_part(const GraphCurve& curve) {
  return {curve.domain(), [curve](double x) { return curve.y(x); }, curve.source()};
}

GraphCurve reversed_catenary(double alpha, const RealCatenary& base, double v) {
  CurveSource source = base.source;
  if (auto* closed = std::get_if<ClosedFormSource>(&source)) {
    closed->params.alpha = alpha;
    closed->params.v = v;
    closed->params.d1 = closed->params.d2 = closed->params.d3 = 0.0;
    closed->reversed = true;
  }
  auto y = base.y;
  return GraphCurve(
      base.domain, y,
      [y, v](double x) {
        const Jet j = y(x);
        return Jet{v * j.value, v * j.d1, v * j.d2};
      },
      [v](double x) { return Jet{-v * x, -v, 0.0}; }, std::move(source));
}

}  // namespace dualcat
