#pragma once

namespace dualcat {

/// Slope sign of the straight real part for α = 0.
enum class Branch { Plus, Minus };

/// Constants of the closed-form α-catenaries.
///
/// `c` is the first-integral constant (α ∈ {0, 1}), `R` the circle radius
/// (α = −1), `m` the horizontal shift, `v` the dual part of the direction
/// u = (0,1) + ε(v,0), and d1, d2, d3 the integration constants of the dual
/// part.
struct CatenaryParams {
  double alpha{1.0};
  double c{1.0};
  double m{0.0};
  double R{1.0};
  double v{0.0};
  double d1{0.0};
  double d2{0.0};
  double d3{0.0};
  Branch branch{Branch::Plus};
};

}  // namespace dualcat
