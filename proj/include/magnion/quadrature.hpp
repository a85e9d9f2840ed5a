#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace magnion {

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;  // accumulated Kronrod-Gauss discrepancy
  int subdivisions = 1;
};

/// Thrown when the subdivision cap is reached before the requested tolerance;
/// carries the best value obtained so far.
class QuadConvergenceError : public std::runtime_error {
 public:
  QuadConvergenceError(const char* what, QuadResult best)
      : std::runtime_error(what), best_(best) {}
  const QuadResult& best() const { return best_; }

 private:
  QuadResult best_;
};

struct QuadTols {
  double abs_tol = 1e-10;
  double rel_tol = 1e-9;
  int max_subdivisions = 2000;
};

using Integrand1D = std::function<double(double)>;
using Integrand2D = std::function<double(double, double)>;

/// Adaptive Gauss-Kronrod 7-15 integration of f over [lo, hi]. Interior
/// breakpoints (kinks, delta positions) must be declared by the caller;
/// the rule never auto-detects singular structure.
QuadResult integrate(const Integrand1D& f, double lo, double hi,
                     const QuadTols& tols = {},
                     std::span<const double> breakpoints = {});

/// Integral over [lo, inf) of an integrand bounded by C*exp(-decay_rate*z)
/// past the last breakpoint. The domain is truncated where the decay bound
/// drops below 1e-16 of its value at the truncation origin.
QuadResult integrate_semi_infinite(const Integrand1D& f, double lo,
                                   double decay_rate, const QuadTols& tols = {},
                                   std::span<const double> breakpoints = {});

/// One coordinate axis of a 2D domain: finite [lo, hi], or semi-infinite
/// [lo, inf) when decay_rate > 0 (hi ignored).
struct QuadAxis {
  double lo = 0.0;
  double hi = 0.0;
  double decay_rate = 0.0;  // > 0 selects the semi-infinite form
  std::vector<double> breakpoints;
};

/// Iterated 2D integration, outer over x, inner over y. `tols` applies to the
/// inner integrals; the outer tolerance is inflated 10x. With
/// split_at_diagonal the inner integral is split at y = x (|x-y| kinks).
QuadResult integrate2d(const Integrand2D& f, const QuadAxis& x_axis,
                       const QuadAxis& y_axis, const QuadTols& tols = {},
                       bool split_at_diagonal = false);

}  // namespace magnion
