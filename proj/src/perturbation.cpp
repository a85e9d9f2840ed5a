#include "magnion/perturbation.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "magnion/effective_potential.hpp"

namespace magnion {

Potential1D scaled_potential(const ScaledModel& m, bool quadrature_path,
                             const QuadTols& tols) {
  const double inv_l2 = 1.0 / (m.scale * m.scale);
  if (quadrature_path) {
    return [m, inv_l2, tols](double z) {
      return inv_l2 * v_total_quadrature(m, z, tols);
    };
  }
  return [m, inv_l2](double z) { return inv_l2 * v_total(m, z); };
}

double first_order_term(const DeltaGround& g, const Potential1D& w,
                        const QuadTols& tols, double* err_out) {
  const std::array<double, 1> breaks{g.half_sep};
  Integrand1D f = [&](double z) {
    const double p = psi0(g, z);
    return p * p * w(z);
  };
  const QuadResult q =
      integrate_semi_infinite(f, 0.0, 2.0 * g.decay, tols, breaks);
  if (err_out) *err_out = q.error_estimate;
  return g.peak * g.peak - q.value;
}

double first_order_term(const DeltaGround& g, const ScaledModel& m,
                        const PerturbOptions& opts) {
  return first_order_term(g, scaled_potential(m, opts.quadrature_potential),
                          opts.tols);
}

double second_order_term(const DeltaGround& g, const Potential1D& w,
                         const QuadTols& tols, EnergyBreakdown* pieces_out,
                         double* err_out) {
  const ReducedResolvent rr(g);
  const double a = g.half_sep;
  const double peak = g.peak;
  const std::array<double, 1> breaks{a};

  const double piece_delta = peak * peak * rr.at_center();

  const ReducedResolvent::Row row_a = rr.row(a);
  Integrand1D cross = [&](double y) { return rr.eval(row_a, y) * w(y) * psi0(g, y); };
  const QuadResult q_cross =
      integrate_semi_infinite(cross, 0.0, 2.0 * g.decay, tols, breaks);
  const double piece_cross = -2.0 * peak * q_cross.value;

  // last-x cache: the inner integral evaluates many y at one fixed x
  double cached_x = -1.0;
  double cached_wx_psi = 0.0;
  ReducedResolvent::Row cached_row;
  Integrand2D dbl = [&](double x, double y) {
    if (x != cached_x) {
      cached_x = x;
      cached_wx_psi = psi0(g, x) * w(x);
      cached_row = rr.row(x);
    }
    return cached_wx_psi * rr.eval(cached_row, y) * w(y) * psi0(g, y);
  };
  QuadAxis axis;
  axis.lo = 0.0;
  axis.decay_rate = 2.0 * g.decay;
  axis.breakpoints = {a};
  const QuadResult q_dbl = integrate2d(dbl, axis, axis, tols, true);
  const double piece_double = q_dbl.value;

  const double total = piece_delta + piece_cross + piece_double;
  const double err = 2.0 * peak * q_cross.error_estimate + q_dbl.error_estimate;
  if (total < -(1e-8 + 10.0 * err))
    throw std::runtime_error(
        "second_order_term: negative trace, reduced resolvent inconsistent");

  if (pieces_out) {
    pieces_out->so_delta_delta = piece_delta;
    pieces_out->so_cross = piece_cross;
    pieces_out->so_double = piece_double;
  }
  if (err_out) *err_out = err;
  return total;
}

double second_order_term(const DeltaGround& g, const ScaledModel& m,
                         const PerturbOptions& opts) {
  return second_order_term(g, scaled_potential(m, opts.quadrature_potential),
                           opts.tols);
}

EnergyBreakdown e2_breakdown(const DeltaGround& g, const ScaledModel& m,
                             const PerturbOptions& opts) {
  const Potential1D w = scaled_potential(m, opts.quadrature_potential,
                                         opts.tols);
  EnergyBreakdown bd;
  bd.e0 = g.energy;
  double err_first = 0.0, err_second = 0.0;
  bd.first_order = first_order_term(g, w, opts.tols, &err_first);
  bd.second_order = second_order_term(g, w, opts.tols, &bd, &err_second);
  bd.e2 = bd.e0 + bd.first_order - bd.second_order;
  bd.quadrature_error = err_first + err_second;
  return bd;
}

EnergyBreakdown e2_breakdown(const ScaledModel& m, const PerturbOptions& opts) {
  return e2_breakdown(solve_ground(m.half_sep), m, opts);
}

}  // namespace magnion
