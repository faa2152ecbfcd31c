#pragma once

// Explicit α-catenaries of the dual plane for α ∈ {−1, 0, 1} and the
// reversed catenary built from any real α-catenary.

#include <optional>

#include "dualcat/catenary_params.hpp"
#include "dualcat/curve.hpp"

namespace dualcat {

/// Default clipping margin for α = −1, as a fraction of R.
inline constexpr double kCircleMarginFraction = 1e-3;

/// α = 0: y = ±√(c²−1)x + m, w = ∓√(c²−1)d1 x + d3, z = d1 x + d2.
/// Requires c >= 1 (c = 1 is the horizontal line).
GraphCurve catenary_alpha0(const CatenaryParams& p, Interval domain);

/// α = 1: y = cosh(cx+m)/c with the sech/tanh dual part. Requires c > 0.
GraphCurve catenary_alpha1(const CatenaryParams& p, Interval domain);

/// α = −1: circular arc y = √(R²−(x−m)²) with its dual part.
///
/// The domain is clipped to [m−R+δ, m+R−δ], δ = margin_fraction·R. Without
/// an explicit domain the whole clipped interval is used; an explicit
/// domain reaching |x−m| >= R is a DomainError.
GraphCurve catenary_alpha_minus1(const CatenaryParams& p, std::optional<Interval> domain = {},
                                 double margin_fraction = kCircleMarginFraction);

/// Dispatches on p.alpha ∈ {−1, 0, 1}; anything else is InvalidParams.
GraphCurve closed_form_catenary(const CatenaryParams& p, std::optional<Interval> domain);

/// Real part y(x) of an α-catenary together with its domain.
struct RealCatenary {
  Interval domain;
  CoordinateFn y;
  CurveSource source;
};

/// Real part of an existing curve (its dual part is discarded).
RealCatenary real_part(const GraphCurve& curve);

/// (x, y) + εv(y, −x): w = v·y, z = −v·x. Admissible by construction.
GraphCurve reversed_catenary(double alpha, const RealCatenary& base, double v);

}  // namespace dualcat
