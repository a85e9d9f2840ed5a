#pragma once

#include <functional>

#include "magnion/delta_model.hpp"
#include "magnion/quadrature.hpp"
#include "magnion/scaling.hpp"

namespace magnion {

/// Second-order Rayleigh-Schrodinger breakdown of the effective ground
/// energy: e2 = e0 + first_order - second_order.
struct EnergyBreakdown {
  double e0 = 0.0;
  double first_order = 0.0;
  double second_order = 0.0;  // the subtracted trace, >= 0
  double e2 = 0.0;
  double quadrature_error = 0.0;
  // diagnostic pieces of the second-order trace
  double so_delta_delta = 0.0;  // psi0(a)^2 * Ghat(a,a)
  double so_cross = 0.0;        // -2 psi0(a) * int Ghat(a,y) W(y) psi0(y)
  double so_double = 0.0;       // double integral of psi0 W Ghat W psi0
};

/// Smooth part of the perturbation, W(z) = V_L(z) / L^2.
using Potential1D = std::function<double(double)>;

struct PerturbOptions {
  QuadTols tols;
  bool quadrature_potential = false;  // reference path instead of erfcx form
};

/// W for a scaled model, on the production (erfcx) or reference path.
Potential1D scaled_potential(const ScaledModel& m,
                             bool quadrature_path = false,
                             const QuadTols& tols = {});

/// tr(P0 dV P0) = psi0(a)^2 - int psi0^2 W. The delta part is sampled in
/// closed form, never discretized. Generic in W for mock potentials.
double first_order_term(const DeltaGround& g, const Potential1D& w,
                        const QuadTols& tols = {}, double* err_out = nullptr);
double first_order_term(const DeltaGround& g, const ScaledModel& m,
                        const PerturbOptions& opts = {});

/// tr(P0 dV Ghat dV P0), expanded into the three diagnostic pieces.
double second_order_term(const DeltaGround& g, const Potential1D& w,
                         const QuadTols& tols = {},
                         EnergyBreakdown* pieces_out = nullptr,
                         double* err_out = nullptr);
double second_order_term(const DeltaGround& g, const ScaledModel& m,
                         const PerturbOptions& opts = {});

/// Full second-order energy of the scaled effective Hamiltonian.
EnergyBreakdown e2_breakdown(const DeltaGround& g, const ScaledModel& m,
                             const PerturbOptions& opts = {});
EnergyBreakdown e2_breakdown(const ScaledModel& m,
                             const PerturbOptions& opts = {});

}  // namespace magnion
