#pragma once

#include <cstddef>
#include <vector>

#include "dualcat/curve.hpp"

namespace dualcat {

/// Function stored as (f, f′, f″) samples on a strictly increasing grid and
/// evaluated by quintic Hermite interpolation, so the interpolant's first
/// and second derivatives are consistent with the stored ones at the nodes.
class SampledFunction {
 public:
  SampledFunction() = default;
  SampledFunction(std::vector<double> grid, std::vector<double> value, std::vector<double> d1,
                  std::vector<double> d2);

  /// Interpolated jet; throws OutOfDomain outside [front, back].
  Jet operator()(double x) const;

  Jet node(std::size_t i) const { return {value_[i], d1_[i], d2_[i]}; }
  std::size_t size() const noexcept { return grid_.size(); }
  const std::vector<double>& grid() const noexcept { return grid_; }
  const std::vector<double>& values() const noexcept { return value_; }
  const std::vector<double>& d1() const noexcept { return d1_; }
  const std::vector<double>& d2() const noexcept { return d2_; }
  Interval span() const { return {grid_.front(), grid_.back()}; }

 private:
  std::vector<double> grid_;
  std::vector<double> value_;
  std::vector<double> d1_;
  std::vector<double> d2_;
};

}  // namespace dualcat
