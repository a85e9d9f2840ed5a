#include "magnion/energy_surface.hpp"

#include <cmath>
#include <vector>

namespace magnion {

namespace {

double golden_section(const std::function<double(double)>& f, double lo,
                      double mid, double hi, double f_mid, double tol,
                      int* iterations, double* f_min_out, double* lo_out,
                      double* hi_out) {
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = mid, f1 = f_mid;
  int iter = 0;
  while (hi - lo > tol && iter < 200) {
    double x2;
    if (x1 - lo > hi - x1) {
      x2 = x1 - (1.0 - kInvPhi) * (x1 - lo);
    } else {
      x2 = x1 + (1.0 - kInvPhi) * (hi - x1);
    }
    const double f2 = f(x2);
    if (f2 < f1) {
      if (x2 < x1) hi = x1; else lo = x1;
      x1 = x2;
      f1 = f2;
    } else {
      if (x2 < x1) lo = x2; else hi = x2;
    }
    ++iter;
  }
  *iterations = iter;
  *f_min_out = f1;
  *lo_out = lo;
  *hi_out = hi;
  return x1;
}

}  // namespace

double total_energy(double b_gauss, double distance, double charge,
                    const PerturbOptions& opts) {
  return evaluate_energy(b_gauss, distance, charge, opts).energy;
}

EnergyPoint evaluate_energy(double b_gauss, double distance, double charge,
                            const PerturbOptions& opts) {
  EnergyPoint pt;
  pt.model = build_scaled_model({b_gauss, distance, charge});
  pt.breakdown = e2_breakdown(pt.model, opts);
  const double l2 = pt.model.scale * pt.model.scale;
  pt.energy = charge * charge * (l2 * pt.breakdown.e2 + 1.0 / distance);
  return pt;
}

EquilibriumResult minimize_over_r(double b_gauss, double charge,
                                  const RWindow& window,
                                  const PerturbOptions& opts) {
  const int n = window.scan_points;
  std::vector<double> r(n), e(n);
  const double log_lo = std::log(window.lo);
  const double step = (std::log(window.hi) - log_lo) / (n - 1);
  for (int i = 0; i < n; ++i) {
    r[i] = std::exp(log_lo + i * step);
    e[i] = total_energy(b_gauss, r[i], charge, opts);
  }

  // deepest interior local minimum
  int best = -1;
  for (int i = 1; i + 1 < n; ++i) {
    if (e[i] < e[i - 1] && e[i] < e[i + 1] && (best < 0 || e[i] < e[best]))
      best = i;
  }
  if (best < 0)
    throw NoMinimumError("minimize_over_r: no interior local minimum in scan");

  auto f = [&](double rr) { return total_energy(b_gauss, rr, charge, opts); };
  EquilibriumResult res;
  res.r_eq = golden_section(f, r[best - 1], r[best], r[best + 1], e[best],
                            1e-4, &res.iterations, &res.e_min,
                            &res.bracket_lo, &res.bracket_hi);
  return res;
}

const char* to_string(Stability s) {
  switch (s) {
    case Stability::bound: return "bound";
    case Stability::resonance: return "resonance";
    case Stability::unbound: return "unbound";
  }
  return "unknown";
}

StabilityReport classify_stability(double b_gauss, double charge,
                                   const RWindow& window,
                                   const PerturbOptions& opts) {
  StabilityReport rep;
  rep.b_gauss = b_gauss;
  rep.charge = charge;
  try {
    rep.minimum = minimize_over_r(b_gauss, charge, window, opts);
  } catch (const NoMinimumError&) {
    rep.minimum.reset();
  }

  const double r_ref = rep.minimum ? rep.minimum->r_eq : 1.0;
  const double r_big = std::fmax(20.0 * r_ref, 10.0);
  bool plateau = false;
  double e_far = 0.0;
  // the 1/R interaction tail for Z > 1 makes the plateau slow; widen 3x per
  // attempt
  for (int widen = 0; widen <= 3; ++widen) {
    const double r1 = r_big * std::pow(3.0, widen);
    const double e_near = total_energy(b_gauss, r1, charge, opts);
    const double e_farther = total_energy(b_gauss, 1.5 * r1, charge, opts);
    if (std::fabs(e_near - e_farther) <= 0.005 * std::fabs(e_near)) {
      // remove the leading Z(Z-1)/R interaction tail by 1/R extrapolation
      e_far = 3.0 * e_farther - 2.0 * e_near;
      plateau = true;
      break;
    }
  }
  if (!plateau)
    throw std::runtime_error("classify_stability: dissociation plateau not reached");
  rep.e_dissoc = e_far;

  if (!rep.minimum) {
    rep.classification = Stability::unbound;
  } else if (rep.minimum->e_min < rep.e_dissoc) {
    rep.classification = Stability::bound;
  } else {
    rep.classification = Stability::resonance;
  }
  return rep;
}

CriticalCharges critical_charges(double b_gauss, const RWindow& window,
                                 const PerturbOptions& opts) {
  auto rank = [&](double z) {
    switch (classify_stability(b_gauss, z, window, opts).classification) {
      case Stability::bound: return 0;
      case Stability::resonance: return 1;
      default: return 2;
    }
  };

  const double z_lo = 1.0, z_hi = 5.0;
  const int rank_lo = rank(z_lo);
  const int rank_hi = rank(z_hi);
  if (rank_lo != 0 || rank_hi != 2)
    throw std::runtime_error(
        "critical_charges: window endpoints not bound/unbound, scan Z by hand");

  // transition to rank >= threshold, assumed monotone in Z
  auto bisect = [&](int threshold) {
    double lo = z_lo, hi = z_hi;
    while (hi - lo > 0.01) {
      const double mid = 0.5 * (lo + hi);
      if (rank(mid) >= threshold) hi = mid; else lo = mid;
    }
    return 0.5 * (lo + hi);
  };

  CriticalCharges cc;
  cc.z_bound = bisect(1);
  cc.z_critical = bisect(2);
  if (!(cc.z_bound < cc.z_critical))
    throw std::runtime_error("critical_charges: non-monotone classification");
  return cc;
}

}  // namespace magnion
