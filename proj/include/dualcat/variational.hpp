#pragma once

// Potential α-energy of admissible curves, Euler–Lagrange residuals and
// numerical first variations under admissibility-preserving deformations.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dualcat/curve.hpp"
#include "dualcat/dual.hpp"
#include "dualcat/quadrature.hpp"

namespace dualcat {

/// ℰ[γ] = ℰ₀[ψ] + εℰ₁[ψ,φ]. `total` comes from the dual integrand; e0 and
/// e1 from the separated real formulas, so the two can be compared.
struct EnergyValue {
  DualScalar total;
  double e0{0.0};
  double e1{0.0};
};

/// ∫⟨u,γ⟩^α |γ′| dx by composite Gauss–Legendre. Throws DomainError if
/// y <= 0 at any quadrature node.
EnergyValue energy(const GraphCurve& curve, DirectionSpec u, double alpha,
                   std::size_t panels = kDefaultPanels);

/// y″/(1+y′²) − α/y
double el_residual_real(const GraphCurve& curve, double alpha, double x);

/// z″ + α(y′/y)(z′+v) + α(z+vx)/y²
double el_residual_dual(const GraphCurve& curve, double alpha, DirectionSpec u, double x);

/// 1 + y′² − c²y^{2α}
double first_integral_residual(const GraphCurve& curve, double alpha, double c, double x);

/// c = √((1+y′(x0)²)/y(x0)^{2α}), the first-integral constant through x0.
double infer_c(const GraphCurve& curve, double alpha, double x0);

/// y″/c − αc·y^{2α−1}; vanishes when the multiplier of the admissibility
/// constraint is λ = 1/c.
double multiplier_residual(const GraphCurve& curve, double alpha, double c, double x);

/// Polynomial bump (1−t²)³ with t = (x − center)/half_width, zero outside
/// |t| < 1. Value, slope and curvature vanish at the support ends.
struct Bump {
  double center{0.0};
  double half_width{1.0};

  Jet operator()(double x) const;
};

/// Compactly supported deformation direction (δy, δz) satisfying
/// ∫(y′δz′ + z′δy′)dx = 0 for its base curve, which keeps w(b) fixed to
/// first order when w is rebuilt from w′ = −y′z′.
struct VariationField {
  std::vector<Bump> bumps;
  std::vector<double> coef_y;
  std::vector<double> coef_z;
  Bump correction;
  double correction_coef{0.0};
  // ∫(y′δz′ + z′δy′)dx after the correction.
  double constraint_value{0.0};

  Jet delta_y(double x) const;
  Jet delta_z(double x) const;
};

/// ∫(y′δz′ + z′δy′)dx over the curve's domain.
double constraint_integral(const GraphCurve& curve, const VariationField& var,
                           std::size_t panels = kDefaultPanels);

/// Seeded random bump combination with the constraint enforced by
/// subtracting a multiple of a domain-wide bump from δz. Bump supports are
/// aligned with the `panels` quadrature partition. Throws
/// DegenerateVariation when the correction cannot be applied.
VariationField make_constrained_variation(const GraphCurve& curve, std::uint64_t seed,
                                          std::size_t panels = kDefaultPanels);

/// γ_ρ with y + ρδy, z + ρδz and w rebuilt as w(a) − ∫_a^x y_ρ′z_ρ′.
GraphCurve deform(const GraphCurve& base, CoordinateFn delta_y, CoordinateFn delta_z, double rho,
                  std::size_t panels = kDefaultPanels);

/// Central difference (ℰ[γ_h] − ℰ[γ_−h])/(2h) of the dual energy. The step
/// is halved while a deformed curve leaves the half-plane y > 0.
DualScalar first_variation(const GraphCurve& curve, const VariationField& var, DirectionSpec u,
                           double alpha, double h = 1e-4, std::size_t panels = kDefaultPanels);

struct ResidualReport {
  struct MaxAbs {
    double admissibility{0.0};
    double el_real{0.0};
    double el_dual{0.0};
    double first_integral{0.0};
    double characterization_re{0.0};
    double characterization_du{0.0};

    double worst() const;
  };

  std::vector<double> grid;
  std::vector<double> admissibility;
  std::vector<double> el_real;
  std::vector<double> el_dual;
  std::vector<double> first_integral;
  std::vector<double> characterization_re;
  std::vector<double> characterization_du;
  MaxAbs max_abs;
};

ResidualReport residual_report(const GraphCurve& curve, double alpha, DirectionSpec u, double c,
                               const std::vector<double>& grid);

}  // namespace dualcat
