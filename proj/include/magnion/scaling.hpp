#pragma once

namespace magnion {

/// Reference field at which the Landau gap equals one Hartree.
inline constexpr double kFieldUnitGauss = 2.35e9;

/// Physical problem statement: field in gauss, internuclear distance in Bohr
/// radii, nuclear charge.
struct ModelInput {
  double b_gauss = 0.0;
  double distance = 0.0;  // R, Bohr radii
  double charge = 1.0;    // Z
  double charge_cap = 10.0;
};

/// Dimensionless quantities derived from a ModelInput.
struct ScaledModel {
  double b_au = 0.0;     // B / B0
  double scale = 0.0;    // L = 2 W(sqrt(B/B0)/2)
  double half_sep = 0.0; // a = Z R L / 2, scaled coordinates
  double charge = 1.0;   // Z, carried through
  double distance = 0.0; // R, carried through
};

/// Validates the input and derives the scaled model. Throws
/// std::invalid_argument on non-positive or non-finite fields.
ScaledModel build_scaled_model(const ModelInput& input);

}  // namespace magnion
