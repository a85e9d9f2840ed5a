#include "magnion/delta_model.hpp"

#include <cmath>
#include <stdexcept>

#include "magnion/special_math.hpp"

namespace magnion {

namespace {

// Stable overall coefficient: psi0(z<=a) = C (exp(alpha(z-a)) + exp(-alpha(z+a))),
// psi0(z>a) = alpha C exp(-alpha(z-a)). Uses exp(-2 a alpha) = alpha - 1,
// exact for the Lambert-W root.
double stable_coef(double a, double alpha) {
  return 1.0 / std::sqrt(1.0 + 2.0 * a * (alpha - 1.0));
}

}  // namespace

DeltaGround solve_ground(double half_sep) {
  if (!(half_sep > 0.0) || !std::isfinite(half_sep))
    throw std::invalid_argument("solve_ground: half separation must be positive");
  const double a = half_sep;
  const double alpha = 1.0 + lambert_w0(2.0 * a * std::exp(-2.0 * a)) / (2.0 * a);

  DeltaGround g;
  g.half_sep = a;
  g.decay = alpha;
  g.energy = -0.5 * alpha * alpha;
  const double c = stable_coef(a, alpha);
  g.peak = alpha * c;
  // May over/underflow for extreme separations; evaluation goes through the
  // stable form in psi0, these are kept for reporting.
  g.amp_inner = 2.0 * c * std::exp(-a * alpha);
  g.amp_outer = 0.5 * alpha * std::exp(2.0 * a * alpha) * g.amp_inner;
  return g;
}

double psi0(const DeltaGround& g, double z) {
  if (z < 0.0) throw std::domain_error("psi0: z must be >= 0");
  const double a = g.half_sep;
  const double alpha = g.decay;
  const double c = stable_coef(a, alpha);
  if (z <= a)
    return c * (std::exp(alpha * (z - a)) + std::exp(-alpha * (z + a)));
  return alpha * c * std::exp(-alpha * (z - a));
}

KernelEval free_kernel(double x, double y, double xi) {
  if (!(xi < 0.0)) throw std::domain_error("free_kernel: xi must be negative");
  if (x < 0.0 || y < 0.0)
    throw std::domain_error("free_kernel: coordinates must be >= 0");
  const double k = std::sqrt(-2.0 * xi);
  const double s = std::fabs(x - y);
  const double t = x + y;
  const double es = std::exp(-k * s);
  const double et = std::exp(-k * t);
  const double k2 = k * k;
  const double k3 = k2 * k;

  KernelEval e;
  e.value = (es + et) / k;
  // d/dxi = -(1/k) d/dk applied to the closed form
  e.d_xi = (es + et) / k3 + (s * es + t * et) / k2;
  e.d2_xi = 3.0 * (es + et) / (k3 * k2) + 3.0 * (s * es + t * et) / (k2 * k2) +
            (s * s * es + t * t * et) / k3;
  return e;
}

ReducedResolvent::ReducedResolvent(const DeltaGround& g)
    : half_sep_(g.half_sep), decay_(g.decay), energy_(g.energy) {
  const KernelEval aa = free_kernel(half_sep_, half_sep_, energy_);
  if (aa.d_xi == 0.0)
    throw std::runtime_error("ReducedResolvent: degenerate kernel derivative");
  coef_gd_ = -1.0 / aa.d_xi;
  coef_gg_ = 0.5 * aa.d2_xi / (aa.d_xi * aa.d_xi);
  center_ = (*this)(half_sep_, half_sep_);
}

ReducedResolvent::Row ReducedResolvent::row(double x) const {
  const KernelEval xa = free_kernel(x, half_sep_, energy_);
  return {x, xa.value, xa.d_xi};
}

double ReducedResolvent::eval(const Row& r, double y) const {
  const KernelEval ay = free_kernel(half_sep_, y, energy_);
  const KernelEval xy = free_kernel(r.x, y, energy_);
  return xy.value + r.g_xa * (coef_gg_ * ay.value + coef_gd_ * ay.d_xi) +
         r.dg_xa * coef_gd_ * ay.value;
}

double ReducedResolvent::operator()(double x, double y) const {
  return eval(row(x), y);
}

double reduced_resolvent(const DeltaGround& g, double x, double y) {
  return ReducedResolvent(g)(x, y);
}

}  // namespace magnion
