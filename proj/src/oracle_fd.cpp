#include "magnion/oracle_fd.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "magnion/delta_model.hpp"
#include "magnion/effective_potential.hpp"

namespace magnion {

namespace {

// Number of eigenvalues of the symmetric tridiagonal matrix (diag, off)
// strictly below lambda, by the Sturm / LDL^T sign count.
int count_below(const std::vector<double>& diag, const std::vector<double>& off,
                double lambda) {
  // near-zero pivots count as a sign change and are clamped away from zero,
  // as in LAPACK's dstebz; a plain +-tiny substitution overflows to inf and
  // silently drops the change
  double max_off2 = 1.0;
  for (double e : off) max_off2 = std::fmax(max_off2, e * e);
  const double pivmin = 2.2250738585072014e-308 * max_off2;
  int count = 0;
  double d = diag[0] - lambda;
  if (d <= pivmin) {
    ++count;
    d = std::fmin(d, -pivmin);
  }
  for (size_t i = 1; i < diag.size(); ++i) {
    d = (diag[i] - lambda) - off[i - 1] * off[i - 1] / d;
    if (d <= pivmin) {
      ++count;
      d = std::fmin(d, -pivmin);
    }
  }
  return count;
}

double lowest_eigenvalue(const std::vector<double>& diag,
                         const std::vector<double>& off) {
  // Gerschgorin bounds
  double lo = diag[0], hi = diag[0];
  const size_t n = diag.size();
  for (size_t i = 0; i < n; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::fabs(off[i - 1]);
    if (i + 1 < n) radius += std::fabs(off[i]);
    lo = std::fmin(lo, diag[i] - radius);
    hi = std::fmax(hi, diag[i] + radius);
  }
  while (hi - lo > 1e-12 * std::fmax(1.0, std::fabs(lo))) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (count_below(diag, off, mid) >= 1) hi = mid; else lo = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double fd_ground_eigenvalue(const std::function<double(double)>& potential,
                            const FdGrid& grid) {
  if (!(grid.z_max > 0.0) || grid.n < 2)
    throw std::invalid_argument("fd_ground_eigenvalue: bad grid");
  const int n = grid.n;
  const double h = grid.z_max / n;
  const double inv_2h2 = 0.5 / (h * h);

  std::vector<double> diag(n), off(n - 1);
  for (int i = 0; i < n; ++i) {
    const double z = (i + 0.5) * h;
    // mirrored ghost at the first node drops one kinetic coupling
    diag[i] = (i == 0 ? inv_2h2 : 2.0 * inv_2h2) + potential(z);
  }
  for (int i = 0; i + 1 < n; ++i) off[i] = -inv_2h2;
  return lowest_eigenvalue(diag, off);
}

double ground_eigenvalue(const ScaledModel& m, FdGrid grid) {
  const DeltaGround g = solve_ground(m.half_sep);
  if (grid.z_max <= 0.0) grid.z_max = m.half_sep + 30.0 / g.decay;
  const double inv_l2 = 1.0 / (m.scale * m.scale);
  auto pot = [&m, inv_l2](double z) { return -inv_l2 * v_total(m, z); };

  const double coarse = fd_ground_eigenvalue(pot, grid);
  const double fine = fd_ground_eigenvalue(pot, {grid.z_max, 2 * grid.n});
  const double extrapolated = (4.0 * fine - coarse) / 3.0;
  if (extrapolated >= 0.0)
    throw std::runtime_error("ground_eigenvalue: no bound state on grid");
  return extrapolated;
}

}  // namespace magnion
