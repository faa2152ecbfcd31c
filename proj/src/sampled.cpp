#include "dualcat/sampled.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>
#include <utility>

#include "dualcat/error.hpp"

namespace dualcat {

SampledFunction::SampledFunction(std::vector<double> grid, std::vector<double> value,
                                 std::vector<double> d1, std::vector<double> d2)
    : grid_(std::move(grid)), value_(std::move(value)), d1_(std::move(d1)), d2_(std::move(d2)) {
  if (grid_.size() < 2) throw Error(ErrorKind::InvalidParams, "sampled function needs >= 2 nodes");
  if (value_.size() != grid_.size() || d1_.size() != grid_.size() || d2_.size() != grid_.size()) {
    throw Error(ErrorKind::GridMismatch, "sample arrays differ in length from the grid");
  }
  for (std::size_t i = 1; i < grid_.size(); ++i) {
    if (!(grid_[i] > grid_[i - 1])) {
      throw Error(ErrorKind::InvalidParams, "sample grid must be strictly increasing");
    }
  }
}

Jet SampledFunction::operator()(double x) const {
  if (!span().contains(x)) {
    std::ostringstream msg;
    msg << "x = " << x << " outside sampled range [" << grid_.front() << ", " << grid_.back() << "]";
    throw Error(ErrorKind::OutOfDomain, msg.str());
  }
  x = std::clamp(x, grid_.front(), grid_.back());
  auto it = std::upper_bound(grid_.begin(), grid_.end(), x);
  std::size_t i = it == grid_.begin() ? 0 : static_cast<std::size_t>(std::distance(grid_.begin(), it)) - 1;
  if (i + 1 >= grid_.size()) i = grid_.size() - 2;
  if (x == grid_[i]) return node(i);

  const double h = grid_[i + 1] - grid_[i];
  const double t = (x - grid_[i]) / h;
  const double t2 = t * t, t3 = t2 * t, t4 = t3 * t, t5 = t4 * t;

  // Quintic Hermite basis on [0,1] and its first two t-derivatives.
  const double b[6] = {
      1.0 - 10.0 * t3 + 15.0 * t4 - 6.0 * t5,
      t - 6.0 * t3 + 8.0 * t4 - 3.0 * t5,
      0.5 * (t2 - 3.0 * t3 + 3.0 * t4 - t5),
      10.0 * t3 - 15.0 * t4 + 6.0 * t5,
      -4.0 * t3 + 7.0 * t4 - 3.0 * t5,
      0.5 * (t3 - 2.0 * t4 + t5),
  };
  const double db[6] = {
      -30.0 * t2 + 60.0 * t3 - 30.0 * t4,
      1.0 - 18.0 * t2 + 32.0 * t3 - 15.0 * t4,
      0.5 * (2.0 * t - 9.0 * t2 + 12.0 * t3 - 5.0 * t4),
      30.0 * t2 - 60.0 * t3 + 30.0 * t4,
      -12.0 * t2 + 28.0 * t3 - 15.0 * t4,
      0.5 * (3.0 * t2 - 8.0 * t3 + 5.0 * t4),
  };
  const double ddb[6] = {
      -60.0 * t + 180.0 * t2 - 120.0 * t3,
      -36.0 * t + 96.0 * t2 - 60.0 * t3,
      0.5 * (2.0 - 18.0 * t + 36.0 * t2 - 20.0 * t3),
      60.0 * t - 180.0 * t2 + 120.0 * t3,
      -24.0 * t + 84.0 * t2 - 60.0 * t3,
      0.5 * (6.0 * t - 24.0 * t2 + 20.0 * t3),
  };
  const double c[6] = {value_[i],     h * d1_[i],     h * h * d2_[i],
                       value_[i + 1], h * d1_[i + 1], h * h * d2_[i + 1]};

  Jet out;
  for (int k = 0; k < 6; ++k) {
    out.value += c[k] * b[k];
    out.d1 += c[k] * db[k];
    out.d2 += c[k] * ddb[k];
  }
  out.d1 /= h;
  out.d2 /= h * h;
  return out;
}

}  // namespace dualcat
