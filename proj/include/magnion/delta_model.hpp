#pragma once

namespace magnion {

/// Even-parity ground state of the double-delta Hamiltonian on the half-line:
/// -1/2 d^2/dz^2 - delta(z - a), Neumann condition at z = 0. Normalized to
/// unit L^2 norm on [0, inf).
struct DeltaGround {
  double half_sep = 0.0;   // a
  double decay = 0.0;      // alpha0, solves alpha = 1 + exp(-2 a alpha)
  double energy = 0.0;     // e0 = -alpha0^2 / 2
  double amp_outer = 0.0;  // A1, coefficient of exp(-alpha0 z) for z > a
  double amp_inner = 0.0;  // A2, coefficient of cosh(alpha0 z) for z < a
  double peak = 0.0;       // psi0(a)
};

/// Decay constant via the Lambert-W closed form; amplitudes normalize the
/// half-line wavefunction.
DeltaGround solve_ground(double half_sep);

/// Ground-state wavefunction, overflow-safe for large half separations.
double psi0(const DeltaGround& g, double z);

/// Free Neumann half-line resolvent kernel of -1/2 d^2/dx^2 at spectral
/// parameter xi < 0, with its first two xi-derivatives (closed form).
struct KernelEval {
  double value = 0.0;
  double d_xi = 0.0;
  double d2_xi = 0.0;
};

KernelEval free_kernel(double x, double y, double xi);

/// Kernel of the reduced resolvent of the delta Hamiltonian at its ground
/// energy: the finite part of the resolvent with the ground-state pole
/// removed. Positive on the orthogonal complement of psi0.
class ReducedResolvent {
 public:
  explicit ReducedResolvent(const DeltaGround& g);

  double operator()(double x, double y) const;

  /// Precomputed kernel row at one fixed first argument, for inner loops.
  struct Row {
    double x = 0.0;
    double g_xa = 0.0;
    double dg_xa = 0.0;
  };
  Row row(double x) const;
  double eval(const Row& r, double y) const;

  double at_center() const { return center_; }  // G_hat(a, a)

 private:
  double half_sep_;
  double decay_;    // alpha0 = sqrt(-2 e0)
  double energy_;
  double coef_gg_;  // A3
  double coef_gd_;  // A4
  double center_;
};

/// Convenience wrapper; prefer the class when evaluating many points.
double reduced_resolvent(const DeltaGround& g, double x, double y);

}  // namespace magnion
