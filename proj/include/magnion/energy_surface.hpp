#pragma once

#include <optional>
#include <stdexcept>

#include "magnion/perturbation.hpp"
#include "magnion/scaling.hpp"

namespace magnion {

/// Total energy E2(B, R, Z) = Z^2 [L^2 e2 + 1/R] in Hartree.
double total_energy(double b_gauss, double distance, double charge = 1.0,
                    const PerturbOptions& opts = {});

/// total_energy plus the full diagnostic breakdown.
struct EnergyPoint {
  double energy = 0.0;  // E2, Hartree
  ScaledModel model;
  EnergyBreakdown breakdown;
};
EnergyPoint evaluate_energy(double b_gauss, double distance, double charge = 1.0,
                            const PerturbOptions& opts = {});

struct RWindow {
  double lo = 0.01;
  double hi = 5.0;
  int scan_points = 40;
};

struct EquilibriumResult {
  double r_eq = 0.0;       // Bohr radii
  double e_min = 0.0;      // Hartree
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  int iterations = 0;
};

class NoMinimumError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coarse log-spaced scan to bracket an interior local minimum of
/// R -> E2(B, R, Z), then golden-section refinement to |dR| <= 1e-4.
/// Throws NoMinimumError when the scan finds no interior local minimum.
EquilibriumResult minimize_over_r(double b_gauss, double charge = 1.0,
                                  const RWindow& window = {},
                                  const PerturbOptions& opts = {});

enum class Stability { bound, resonance, unbound };

struct StabilityReport {
  Stability classification = Stability::unbound;
  std::optional<EquilibriumResult> minimum;
  double e_dissoc = 0.0;  // large-R plateau of the energy curve
  double b_gauss = 0.0;
  double charge = 0.0;
};

const char* to_string(Stability s);

/// bound: interior minimum below the dissociation plateau; resonance: local
/// minimum at or above it; unbound: no interior minimum.
StabilityReport classify_stability(double b_gauss, double charge,
                                   const RWindow& window = {},
                                   const PerturbOptions& opts = {});

struct CriticalCharges {
  double z_bound = 0.0;     // bound -> resonance transition
  double z_critical = 0.0;  // resonance -> unbound transition
};

/// Bisection in Z of the two classification transitions over Z in [1, 5],
/// each to |dZ| <= 0.01. Throws on a non-monotone classification scan.
CriticalCharges critical_charges(double b_gauss, const RWindow& window = {},
                                 const PerturbOptions& opts = {});

}  // namespace magnion
