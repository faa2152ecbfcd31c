#pragma once

// Admissible graph curves γ(x) = (x, y(x)) + ε(w(x), z(x)) in the dual plane,
// with their frames, dual curvature and arc-length machinery.

#include <cstddef>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "dualcat/catenary_params.hpp"
#include "dualcat/dual.hpp"

namespace dualcat {

/// Value with first and second derivative at a point.
struct Jet {
  double value{0.0};
  double d1{0.0};
  double d2{0.0};
};

using CoordinateFn = std::function<Jet(double)>;

struct Interval {
  double lo{0.0};
  double hi{0.0};

  double width() const { return hi - lo; }
  double midpoint() const { return 0.5 * (lo + hi); }
  /// Membership with a few-ulp slack so grid endpoints computed in floating
  /// point are accepted.
  bool contains(double x) const;
  bool contains(const Interval& other) const { return contains(other.lo) && contains(other.hi); }
};

/// `n` equally spaced points from lo to hi, endpoints exact. n >= 2.
std::vector<double> uniform_grid(const Interval& domain, std::size_t n);

struct ClosedFormSource {
  CatenaryParams params;
  bool reversed{false};
};

struct NumericSource {
  std::vector<double> grid;
};

/// Curves assembled from user-supplied coordinate functions.
struct AnalyticSource {
  std::string label;
};

using CurveSource = std::variant<ClosedFormSource, NumericSource, AnalyticSource>;

/// Immutable curve in graph form over a closed interval. Coordinate
/// queries outside the domain throw OutOfDomain.
class GraphCurve {
 public:
  GraphCurve(Interval domain, CoordinateFn y, CoordinateFn w, CoordinateFn z,
             CurveSource source = AnalyticSource{});

  const Interval& domain() const noexcept { return domain_; }
  const CurveSource& source() const noexcept { return source_; }

  Jet y(double x) const;
  Jet w(double x) const;
  Jet z(double x) const;

  /// Throws OutOfDomain unless x lies in the domain.
  void require_in_domain(double x) const;

 private:
  Interval domain_;
  CoordinateFn y_;
  CoordinateFn w_;
  CoordinateFn z_;
  CurveSource source_;
};

struct Frame {
  DualVec2 T;  // unit tangent T_ψ + εz′N_ψ
  DualVec2 N;  // unit normal  N_ψ − εz′T_ψ
  double nu{1.0};
};

struct CurvatureSample {
  double x{0.0};
  DualScalar kappa;
};

/// γ(x) = (x, y) + ε(w, z).
DualVec2 evaluate(const GraphCurve& curve, double x);

/// γ′(x) = (1, y′) + ε(w′, z′).
DualVec2 velocity(const GraphCurve& curve, double x);

/// w′ + y′z′; zero exactly when the real and dual velocities are orthogonal.
double admissibility_residual(const GraphCurve& curve, double x);

Frame frame(const GraphCurve& curve, double x);

/// κ_γ = y″/(1+y′²)^{3/2} + ε z″/√(1+y′²). The normal is N_ψ = (−y′,1)/ν, so
/// the upper semicircle has κ = −1/R.
CurvatureSample curvature(const GraphCurve& curve, double x);

/// κ_γ − α⟨N_γ,u⟩/⟨γ,u⟩ using dual division. Throws ZeroRealPart if y(x) = 0.
DualScalar characterization_residual(const GraphCurve& curve, double alpha, DirectionSpec u,
                                     double x);

/// ∫_{x0}^{x1} √(1+y′²) dx (adaptive quadrature).
double arc_length(const GraphCurve& curve, double x0, double x1);

/// The x with arc_length(curve, a, x) = s. Bisection bracket, then secant
/// refinement to 1e-12 in s.
double reparametrize_by_arclength(const GraphCurve& curve, double s);

/// γ′_s = γ′/ν, the velocity with respect to arc length at parameter x.
DualVec2 arclength_velocity(const GraphCurve& curve, double x);

}  // namespace dualcat
