#pragma once

#include <functional>

#include "magnion/scaling.hpp"

namespace magnion {

/// Uniform staggered grid on [0, z_max]: nodes (i + 1/2) h, h = z_max / n.
/// The staggering makes the Neumann condition at 0 (even sector) exact to
/// second order with a symmetric matrix.
struct FdGrid {
  double z_max = 0.0;
  int n = 2000;
};

/// Lowest eigenvalue of the symmetric tridiagonal discretization of
/// -1/2 d^2/dz^2 + V(z), Neumann at 0, Dirichlet at z_max, via Sturm-sequence
/// bisection to 1e-12 absolute.
double fd_ground_eigenvalue(const std::function<double(double)>& potential,
                            const FdGrid& grid);

/// Ground eigenvalue of the scaled effective Hamiltonian
/// p^2/2 - V_L/L^2, Richardson-extrapolated over n and 2n. The grid default
/// puts the Dirichlet wall at half_sep + 30/alpha0. Throws when the lowest
/// eigenvalue is non-negative (no bound state on the grid).
double ground_eigenvalue(const ScaledModel& m, FdGrid grid = {0.0, 2000});

}  // namespace magnion
