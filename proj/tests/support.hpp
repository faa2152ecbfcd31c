#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "dualcat/catenary_params.hpp"
#include "dualcat/curve.hpp"
#include "dualcat/error.hpp"
#include "dualcat/random.hpp"

namespace dualcat::testing {

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return static_cast<ErrorKind>(-1);
}

struct RandomCase {
  CatenaryParams params;
  Interval domain;
};

/// Parameter sets for α ∈ {−1, 0, 1} with domains kept away from y = 0.
inline RandomCase random_case(double alpha, SeededUniform& rng) {
  RandomCase rc;
  CatenaryParams& p = rc.params;
  p.alpha = alpha;
  p.m = rng(-1, 1);
  p.v = rng(-2, 2);
  p.d1 = rng(-2, 2);
  p.d2 = rng(-2, 2);
  p.d3 = rng(-2, 2);
  if (alpha == 1.0) {
    p.c = rng(0.5, 3);
    rc.domain = {-1, 1};
  } else if (alpha == -1.0) {
    p.R = rng(0.5, 3);
    rc.domain = {p.m - 0.9 * p.R, p.m + 0.9 * p.R};
  } else {
    p.c = rng(1, 3);
    p.branch = rng.unit() < 0.5 ? Branch::Plus : Branch::Minus;
    const double s = std::sqrt(p.c * p.c - 1.0);
    // Length-2 window on which y >= 0.5.
    if (s < 1e-3) {
      p.m = rng(0.5, 1.5);
      rc.domain = {-1, 1};
    } else if (p.branch == Branch::Plus) {
      const double lo = (0.5 - p.m) / s;
      rc.domain = {lo, lo + 2};
    } else {
      const double hi = (p.m - 0.5) / s;
      rc.domain = {hi - 2, hi};
    }
  }
  return rc;
}

inline std::vector<RandomCase> random_cases(double alpha, int count, std::uint64_t seed) {
  SeededUniform rng(seed);
  std::vector<RandomCase> out;
  for (int i = 0; i < count; ++i) out.push_back(random_case(alpha, rng));
  return out;
}

}  // namespace dualcat::testing
