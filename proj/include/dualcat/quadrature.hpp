#pragma once

#include <cstddef>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace dualcat {

inline constexpr std::size_t kDefaultPanels = 64;

/// Composite 5-point Gauss–Legendre over `panels` uniform panels of [a,b].
/// The integrand may return double or DualScalar.
template <class F>
auto composite_gauss5(F&& f, double a, double b, std::size_t panels = kDefaultPanels) {
  using Rule = boost::math::quadrature::gauss<double, 5>;
  using Result = decltype(f(a));
  const auto& nodes = Rule::abscissa();
  const auto& weights = Rule::weights();

  Result total{};
  if (panels == 0 || a == b) return total;
  const double width = (b - a) / static_cast<double>(panels);
  const double half = 0.5 * width;
  for (std::size_t p = 0; p < panels; ++p) {
    const double lo = a + width * static_cast<double>(p);
    const double mid = lo + half;
    Result panel = weights[0] * f(mid);
    for (std::size_t k = 1; k < nodes.size(); ++k) {
      panel = panel + weights[k] * f(mid - half * nodes[k]);
      panel = panel + weights[k] * f(mid + half * nodes[k]);
    }
    total = total + half * panel;
  }
  return total;
}

inline constexpr unsigned kAdaptiveMaxDepth = 10;

/// Adaptive Gauss–Kronrod (15-point) integration to relative tolerance `tol`.
template <class F>
double adaptive_integrate(F&& f, double a, double b, double tol = 1e-14) {
  if (a == b) return 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, kAdaptiveMaxDepth, tol);
}

}  // namespace dualcat
