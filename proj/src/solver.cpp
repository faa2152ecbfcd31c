#include "dualcat/solver.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <utility>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "dualcat/error.hpp"

namespace dualcat {

namespace {

using State = std::array<double, 2>;

constexpr int kMinStepsBeforeSingularity = 10;

State axpy(const State& s, double h, const State& k) { return {s[0] + h * k[0], s[1] + h * k[1]}; }

template <class Rhs>
State rk4_step(const Rhs& f, double x, const State& s, double h) {
  const State k1 = f(x, s);
  const State k2 = f(x + 0.5 * h, axpy(s, 0.5 * h, k1));
  const State k3 = f(x + 0.5 * h, axpy(s, 0.5 * h, k2));
  const State k4 = f(x + h, axpy(s, h, k3));
  return {s[0] + h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]),
          s[1] + h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1])};
}

std::size_t steps_for(double length, double step) {
  if (length <= 0.0) return 0;
  return static_cast<std::size_t>(std::max(1.0, std::ceil(length / step - 1e-9)));
}

struct Side {
  std::vector<double> x;
  std::vector<State> s;
  bool truncated{false};
};

void require_same_grid(const SampledFunction& a, const SampledFunction& b) {
  if (a.grid() != b.grid()) {
    throw Error(ErrorKind::GridMismatch, "solutions are sampled on different grids");
  }
}

}  // namespace

RealSolution solve_real(double alpha, const InitialData& init, Interval domain,
                        const SolverConfig& cfg) {
  if (!std::isfinite(alpha)) throw Error(ErrorKind::InvalidParams, "alpha must be finite");
  if (!(init.y0 > 0.0)) throw Error(ErrorKind::InvalidParams, "initial height y0 must be positive");
  if (!(cfg.step > 0.0) || !(cfg.y_min > 0.0) || !(cfg.slope_max > 0.0)) {
    throw Error(ErrorKind::InvalidParams, "solver step, y_min and slope_max must be positive");
  }
  if (!(domain.lo < domain.hi)) throw Error(ErrorKind::InvalidParams, "empty solve domain");
  if (!(init.x0 >= domain.lo && init.x0 <= domain.hi)) {
    throw Error(ErrorKind::InvalidParams, "x0 must lie inside the solve domain");
  }

  auto rhs = [alpha](double, const State& s) {
    return State{s[1], alpha * (1.0 + s[1] * s[1]) / s[0]};
  };
  auto valid = [&cfg](const State& s) {
    return std::isfinite(s[0]) && std::isfinite(s[1]) && s[0] >= cfg.y_min &&
           std::abs(s[1]) <= cfg.slope_max;
  };

  auto integrate_side = [&](double end) {
    Side side;
    const std::size_t n = steps_for(std::abs(end - init.x0), cfg.step);
    if (n == 0) return side;
    const double h = (end - init.x0) / static_cast<double>(n);
    State s{init.y0, init.yp0};
    for (std::size_t i = 1; i <= n; ++i) {
      const double x_prev = init.x0 + h * static_cast<double>(i - 1);
      const State next = rk4_step(rhs, x_prev, s, h);
      if (!valid(next)) {
        side.truncated = true;
        if (i - 1 < static_cast<std::size_t>(kMinStepsBeforeSingularity)) {
          std::ostringstream msg;
          msg << "solution hits a singularity after " << (i - 1) << " steps from x0 = " << init.x0;
          throw Error(ErrorKind::ImmediateSingularity, msg.str());
        }
        break;
      }
      s = next;
      side.x.push_back(i == n ? end : init.x0 + h * static_cast<double>(i));
      side.s.push_back(s);
    }
    return side;
  };

  const Side back = integrate_side(domain.lo);
  const Side fwd = integrate_side(domain.hi);

  std::vector<double> grid, y, yp, ypp;
  auto push = [&](double x, const State& s) {
    grid.push_back(x);
    y.push_back(s[0]);
    yp.push_back(s[1]);
    ypp.push_back(rhs(x, s)[1]);
  };
  for (std::size_t i = back.x.size(); i-- > 0;) push(back.x[i], back.s[i]);
  push(init.x0, {init.y0, init.yp0});
  for (std::size_t i = 0; i < fwd.x.size(); ++i) push(fwd.x[i], fwd.s[i]);

  RealSolution out;
  out.alpha = alpha;
  out.requested = domain;
  out.achieved = {grid.front(), grid.back()};
  out.start = back.x.size();
  out.truncated = back.truncated || fwd.truncated;
  out.y = SampledFunction(std::move(grid), std::move(y), std::move(yp), std::move(ypp));
  return out;
}

DualSolution solve_dual(double alpha, double v, const RealSolution& ys, const InitialData& init,
                        const SolverConfig&) {
  if (!std::isfinite(alpha) || !std::isfinite(v)) {
    throw Error(ErrorKind::InvalidParams, "alpha and v must be finite");
  }
  const SampledFunction& yf = ys.y;
  const std::vector<double>& grid = yf.grid();
  if (ys.start >= grid.size()) throw Error(ErrorKind::InvalidParams, "real solution has no start node");

  auto rhs = [&](double x, const State& s) {
    const Jet y = yf(x);
    return State{s[1], -alpha * (y.d1 / y.value) * (s[1] + v) - alpha * (s[0] + v * x) /
                                                                      (y.value * y.value)};
  };

  std::vector<State> states(grid.size());
  states[ys.start] = {init.z0, init.zp0};
  for (std::size_t i = ys.start; i + 1 < grid.size(); ++i) {
    states[i + 1] = rk4_step(rhs, grid[i], states[i], grid[i + 1] - grid[i]);
  }
  for (std::size_t i = ys.start; i > 0; --i) {
    states[i - 1] = rk4_step(rhs, grid[i], states[i], grid[i - 1] - grid[i]);
  }

  std::vector<double> z(grid.size()), zp(grid.size()), zpp(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    z[i] = states[i][0];
    zp[i] = states[i][1];
    zpp[i] = rhs(grid[i], states[i])[1];
  }
  return {v, SampledFunction(grid, std::move(z), std::move(zp), std::move(zpp))};
}

WSolution recover_w(const RealSolution& ys, const DualSolution& zs, double w0) {
  require_same_grid(ys.y, zs.z);
  const SampledFunction& yf = ys.y;
  const SampledFunction& zf = zs.z;
  const std::vector<double>& grid = yf.grid();
  const std::size_t n = grid.size();

  using Rule = boost::math::quadrature::gauss<double, 5>;
  auto cell = [&](double lo, double hi) {
    return Rule::integrate([&](double x) { return yf(x).d1 * zf(x).d1; }, lo, hi);
  };

  std::vector<double> w(n), wp(n), wpp(n);
  w[ys.start] = w0;
  for (std::size_t i = ys.start; i + 1 < n; ++i) w[i + 1] = w[i] - cell(grid[i], grid[i + 1]);
  for (std::size_t i = ys.start; i > 0; --i) w[i - 1] = w[i] + cell(grid[i - 1], grid[i]);
  for (std::size_t i = 0; i < n; ++i) {
    const Jet y = yf.node(i), z = zf.node(i);
    wp[i] = -y.d1 * z.d1;
    wpp[i] = -(y.d2 * z.d1 + y.d1 * z.d2);
  }
  return {SampledFunction(grid, std::move(w), std::move(wp), std::move(wpp))};
}

GraphCurve assemble(const RealSolution& ys, const DualSolution& zs, const WSolution& ws) {
  require_same_grid(ys.y, zs.z);
  require_same_grid(ys.y, ws.w);
  return GraphCurve(ys.y.span(), ys.y, ws.w, zs.z, NumericSource{ys.y.grid()});
}

SolvedCatenary solve_catenary(double alpha, double v, const InitialData& init, Interval domain,
                              const SolverConfig& cfg) {
  RealSolution real = solve_real(alpha, init, domain, cfg);
  DualSolution dual = solve_dual(alpha, v, real, init, cfg);
  WSolution w = recover_w(real, dual, init.w0);
  GraphCurve curve = assemble(real, dual, w);
  return {std::move(real), std::move(dual), std::move(w), std::move(curve)};
}

}  // namespace dualcat
