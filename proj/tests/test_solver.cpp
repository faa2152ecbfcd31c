#include <gtest/gtest.h>

#include <cmath>
#include <functional>

#include "dualcat/closed_forms.hpp"
#include "dualcat/solver.hpp"
#include "dualcat/variational.hpp"
#include "support.hpp"

using namespace dualcat;
using dualcat::testing::kind_of;

namespace {

double sup_error(const SampledFunction& f, const std::function<double(double)>& exact) {
  double out = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    out = std::max(out, std::abs(f.values()[i] - exact(f.grid()[i])));
  }
  return out;
}

double sech_fn(double x) { return 1.0 / std::cosh(x); }

}  // namespace

TEST(SolveReal, StandardCatenary) {
  const RealSolution s = solve_real(1.0, InitialData{}, {-1, 1});
  EXPECT_FALSE(s.truncated);
  EXPECT_EQ(s.achieved.lo, -1.0);
  EXPECT_EQ(s.achieved.hi, 1.0);
  EXPECT_EQ(s.y.size(), 2001u);
  EXPECT_EQ(s.y.grid()[s.start], 0.0);
  EXPECT_LE(sup_error(s.y, [](double x) { return std::cosh(x); }), 1e-8);
  // Interpolated between nodes too.
  for (double x : {-0.99951, 0.12345, 0.77777}) EXPECT_NEAR(s.y(x).value, std::cosh(x), 1e-10);
}

TEST(SolveReal, AlphaZeroIsExactLine) {
  InitialData in;
  in.y0 = 2;
  in.yp0 = 3;
  const RealSolution s = solve_real(0.0, in, {-0.5, 1});
  EXPECT_FALSE(s.truncated);
  EXPECT_LE(sup_error(s.y, [](double x) { return 2 + 3 * x; }), 1e-12);
}

TEST(SolveReal, CircleUntilGuard) {
  const RealSolution s = solve_real(-1.0, InitialData{}, {-0.9, 0.9});
  EXPECT_LE(sup_error(s.y, [](double x) { return std::sqrt(1 - x * x); }), 1e-8);

  SolverConfig cfg;
  cfg.slope_max = 1e3;
  const RealSolution t = solve_real(-1.0, InitialData{}, {-2, 2}, cfg);
  // Fixed-step RK4 overshoots the true endpoint x = ±1 slightly before a
  // guard fires.
  EXPECT_TRUE(t.truncated);
  EXPECT_GT(t.achieved.lo, -1.1);
  EXPECT_LT(t.achieved.hi, 1.1);
  EXPECT_LT(t.achieved.width(), 4.0);
  EXPECT_EQ(t.requested.lo, -2.0);
}

TEST(SolveReal, ConvergenceOrder) {
  auto err = [](double step) {
    SolverConfig cfg;
    cfg.step = step;
    return sup_error(solve_real(1.0, InitialData{}, {-1, 1}, cfg).y, [](double x) { return std::cosh(x); });
  };
  EXPECT_GE(err(0.05) / err(0.025), 12.0);
  EXPECT_GE(err(0.1) / err(0.05), 12.0);
}

TEST(SolveReal, Errors) {
  InitialData bad;
  bad.y0 = 0;
  EXPECT_EQ(kind_of([&] { solve_real(1.0, bad, {-1, 1}); }), ErrorKind::InvalidParams);
  InitialData outside;
  outside.x0 = 2;
  EXPECT_EQ(kind_of([&] { solve_real(1.0, outside, {-1, 1}); }), ErrorKind::InvalidParams);
  SolverConfig cfg;
  cfg.step = 0;
  EXPECT_EQ(kind_of([&] { solve_real(1.0, InitialData{}, {-1, 1}, cfg); }), ErrorKind::InvalidParams);

  InitialData steep;
  steep.y0 = 1e-3;
  steep.yp0 = -1;
  EXPECT_EQ(kind_of([&] { solve_real(-1.0, steep, {-1, 1}); }), ErrorKind::ImmediateSingularity);
}

TEST(SolveDual, SechBranch) {
  InitialData in;
  in.z0 = 1;
  in.zp0 = -1;
  const RealSolution y = solve_real(1.0, in, {-1, 1});
  const DualSolution z = solve_dual(1.0, 1.0, y, in);
  EXPECT_LE(sup_error(z.z, [](double x) { return -x + sech_fn(x); }), 1e-7);
}

TEST(SolveDual, ReversedBranchIsExact) {
  for (double alpha : {-0.5, 1.0, 2.0}) {
    InitialData in;
    in.x0 = 0.3;
    const double v = 1.5;
    in.z0 = -v * in.x0;
    in.zp0 = -v;
    const RealSolution y = solve_real(alpha, in, {-0.5, 0.5});
    const DualSolution z = solve_dual(alpha, v, y, in);
    EXPECT_LE(sup_error(z.z, [v](double x) { return -v * x; }), 1e-13) << alpha;
  }
}

TEST(SolveDual, CircleLinearSolution) {
  InitialData in;
  in.zp0 = 0.7;
  const RealSolution y = solve_real(-1.0, in, {-0.9, 0.9});
  const DualSolution z = solve_dual(-1.0, 0.0, y, in);
  EXPECT_LE(sup_error(z.z, [](double x) { return 0.7 * x; }), 1e-7);
}

TEST(RecoverW, ReversedCatenary) {
  InitialData in;
  in.zp0 = -1;
  in.w0 = 1;
  const SolvedCatenary s = solve_catenary(1.0, 1.0, in, {-1, 1});
  EXPECT_LE(sup_error(s.w.w, [](double x) { return std::cosh(x); }), 1e-7);
}

TEST(RecoverW, ConstantZGivesConstantW) {
  InitialData in;
  in.z0 = 0.4;
  in.w0 = -2;
  const SolvedCatenary s = solve_catenary(0.0, 0.0, in, {-1, 1});
  EXPECT_LE(sup_error(s.w.w, [](double) { return -2.0; }), 1e-15);
}

TEST(RecoverW, SechTanhBranch) {
  InitialData in;
  in.z0 = 1;
  const SolvedCatenary s = solve_catenary(1.0, 0.0, in, {-1, 1});
  EXPECT_LE(sup_error(s.dual.z, sech_fn), 1e-7);
  EXPECT_LE(sup_error(s.w.w, [](double x) { return x - std::tanh(x); }), 1e-7);
  for (std::size_t i = 0; i < s.w.w.size(); ++i) {
    const double x = s.w.w.grid()[i];
    EXPECT_EQ(s.w.w.d1()[i], -s.real.y.d1()[i] * s.dual.z.d1()[i]) << x;
  }
}

TEST(RecoverW, GridMismatch) {
  const RealSolution a = solve_real(1.0, InitialData{}, {-1, 1});
  SolverConfig cfg;
  cfg.step = 2e-3;
  const RealSolution b = solve_real(1.0, InitialData{}, {-1, 1}, cfg);
  const DualSolution zb = solve_dual(1.0, 0.0, b, InitialData{});
  EXPECT_EQ(kind_of([&] { recover_w(a, zb, 0.0); }), ErrorKind::GridMismatch);
  const DualSolution za = solve_dual(1.0, 0.0, a, InitialData{});
  const WSolution wa = recover_w(a, za, 0.0);
  EXPECT_EQ(kind_of([&] { assemble(a, zb, wa); }), ErrorKind::GridMismatch);
}

TEST(Assemble, CharacterizationAndAdmissibility) {
  InitialData in;
  in.x0 = 0.2;
  in.y0 = 1.3;
  in.yp0 = -0.4;
  in.z0 = 0.5;
  in.zp0 = 0.8;
  in.w0 = -0.1;
  const double v = 0.6;
  const SolvedCatenary s = solve_catenary(1.0, v, in, {-1, 1});
  const std::vector<double>& grid = s.real.y.grid();
  for (std::size_t i = 0; i < grid.size(); i += 7) {
    const DualScalar r = characterization_residual(s.curve, 1.0, DirectionSpec{v}, grid[i]);
    ASSERT_LE(std::abs(r.re), 1e-6);
    ASSERT_LE(std::abs(r.du), 1e-6);
    ASSERT_LE(std::abs(admissibility_residual(s.curve, grid[i])), 1e-8);
  }
}

TEST(Assemble, ReversedBranchHasRealCurvature) {
  InitialData in;
  in.zp0 = -2;
  const SolvedCatenary s = solve_catenary(2.0, 2.0, in, {-0.5, 0.5});
  for (double x : s.real.y.grid()) ASSERT_LE(std::abs(curvature(s.curve, x).kappa.du), 1e-8);
}

TEST(Assemble, MatchesClosedForms) {
  // Same initial data as the closed form at x0 = 0.
  struct Case {
    CatenaryParams p;
    Interval domain;
  };
  CatenaryParams p1;
  p1.c = 1.3;
  p1.m = 0.2;
  p1.v = 0.5;
  p1.d1 = -0.7;
  p1.d2 = 0.4;
  p1.d3 = 0.1;
  CatenaryParams p0 = p1;
  p0.alpha = 0;
  p0.m = 1.5;
  CatenaryParams pm = p1;
  pm.alpha = -1;
  pm.R = 1.5;
  for (const Case& c : {Case{p1, {-1, 1}}, Case{p0, {-1, 1}}, Case{pm, {-1, 1}}}) {
    const GraphCurve exact = closed_form_catenary(c.p, c.domain);
    InitialData in;
    in.y0 = exact.y(0).value;
    in.yp0 = exact.y(0).d1;
    in.z0 = exact.z(0).value;
    in.zp0 = exact.z(0).d1;
    in.w0 = exact.w(0).value;
    const SolvedCatenary s = solve_catenary(c.p.alpha, c.p.v, in, c.domain);
    EXPECT_LE(sup_error(s.real.y, [&](double x) { return exact.y(x).value; }), 1e-6) << c.p.alpha;
    EXPECT_LE(sup_error(s.dual.z, [&](double x) { return exact.z(x).value; }), 1e-6) << c.p.alpha;
    EXPECT_LE(sup_error(s.w.w, [&](double x) { return exact.w(x).value; }), 1e-6) << c.p.alpha;
  }
}

TEST(Assemble, FirstIntegralConservedAwayFromBlowUp) {
  for (double alpha : {-1.0, -0.5, 0.0, 0.5, 1.0, 2.0, 3.0}) {
    const SolvedCatenary s = solve_catenary(alpha, 0.0, InitialData{}, {-0.5, 0.5});
    const double c = infer_c(s.curve, alpha, 0.0);
    for (double x : s.real.y.grid()) {
      ASSERT_LE(std::abs(first_integral_residual(s.curve, alpha, c, x)), 1e-7) << alpha << " " << x;
    }
  }
}

TEST(Assemble, SourceRecordsGrid) {
  const SolvedCatenary s = solve_catenary(1.0, 0.0, InitialData{}, {-1, 1});
  const auto* src = std::get_if<NumericSource>(&s.curve.source());
  ASSERT_NE(src, nullptr);
  EXPECT_EQ(src->grid, s.real.y.grid());
}
