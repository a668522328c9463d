#pragma once

#include <functional>

#include "bcalc/errors.hpp"

namespace bcalc {

/// Adaptive Gauss-Kronrod (7/15) integration of f over [a, b] to an absolute
/// tolerance. Intervals are bisected until the local error estimate passes;
/// partial sums are accumulated left to right, so the result is deterministic
/// for a given refinement tree. Throws QuadratureError when the interval
/// budget is exhausted before the tolerance is met.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double abs_tol,
                          int max_intervals = 10000);

namespace detail {

struct Qk15Result {
  double value;      // 15-point Kronrod estimate
  double abs_error;  // scaled |K15 - G7| error estimate
  double resabs;     // integral of |f|
};

Qk15Result qk15(const std::function<double(double)>& f, double a, double b);

}  // namespace detail
}  // namespace bcalc
