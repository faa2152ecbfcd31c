#pragma once

// α-catenaries for arbitrary real α: RK4 on the real Euler–Lagrange
// equation, then on the linear dual equation along the solved y, then w by
// quadrature of the admissibility condition.

#include <cstddef>

#include "dualcat/curve.hpp"
#include "dualcat/sampled.hpp"

namespace dualcat {

struct SolverConfig {
  double step{1e-3};
  double y_min{1e-6};
  double slope_max{1e8};
};

struct InitialData {
  double x0{0.0};
  double y0{1.0};
  double yp0{0.0};
  double z0{0.0};
  double zp0{0.0};
  double w0{0.0};
};

/// Samples of y on the achieved interval. `start` is the grid index of x0.
struct RealSolution {
  double alpha{1.0};
  SampledFunction y;
  Interval requested;
  Interval achieved;
  std::size_t start{0};
  bool truncated{false};
};

struct DualSolution {
  double v{0.0};
  SampledFunction z;
};

struct WSolution {
  SampledFunction w;
};

/// Integrates y″ = α(1+y′²)/y outward from x0 to both ends of `domain`.
/// Integration stops early (truncated = true) when y < y_min, |y′| >
/// slope_max, or the state stops being finite. Throws InvalidParams for bad
/// input and ImmediateSingularity if a side stops within 10 steps.
RealSolution solve_real(double alpha, const InitialData& init, Interval domain,
                        const SolverConfig& cfg = {});

/// Integrates z″ = −α(y′/y)(z′+v) − α(z+vx)/y² on the grid of `y`.
DualSolution solve_dual(double alpha, double v, const RealSolution& y, const InitialData& init,
                        const SolverConfig& cfg = {});

/// w = w0 − ∫_{x0} y′z′ dx cell by cell with 5-point Gauss–Legendre; w′ =
/// −y′z′ exactly at the nodes.
WSolution recover_w(const RealSolution& y, const DualSolution& z, double w0);

/// Numeric-source curve over the achieved interval.
GraphCurve assemble(const RealSolution& y, const DualSolution& z, const WSolution& w);

/// solve_real → solve_dual → recover_w → assemble.
struct SolvedCatenary {
  RealSolution real;
  DualSolution dual;
  WSolution w;
  GraphCurve curve;
};

SolvedCatenary solve_catenary(double alpha, double v, const InitialData& init, Interval domain,
                              const SolverConfig& cfg = {});

}  // namespace dualcat
