#pragma once

#include "magnion/quadrature.hpp"
#include "magnion/scaling.hpp"

namespace magnion {

/// Which nucleus the half potential is centered on: Lower = well at +a
/// (coordinate offset z - a), Upper = well at -a (offset z + a).
enum class WellSign { minus, plus };

/// One half of the lowest-Landau-level potential, closed erfcx form:
///   V(z) = sqrt(pi B / 2) / Z * erfcx(|c| sqrt(B/2) / Z),  c = (z -+ a) / L.
/// Positive, finite for all z; equals sqrt(pi B / 2) / Z at the nucleus.
double v_half(const ScaledModel& m, double z, WellSign sign);

/// Same quantity by direct adaptive quadrature of the defining integral;
/// the slow reference path.
double v_half_quadrature(const ScaledModel& m, double z, WellSign sign,
                         const QuadTols& tols = {});

/// Full potential V_L(z) = V_L^- + V_L^+, even in z.
double v_total(const ScaledModel& m, double z);
double v_total_quadrature(const ScaledModel& m, double z,
                          const QuadTols& tols = {});

}  // namespace magnion
