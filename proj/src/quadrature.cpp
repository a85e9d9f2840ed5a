#include "magnion/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace magnion {

namespace {

// Gauss 7 / Kronrod 15 pair, nodes and weights to 20 significant digits.
// Kronrod abscissae on [0, 1]; even indices are the embedded Gauss-7 nodes'
// companions (odd indices 1,3,5,7 carry the Gauss nodes).
constexpr double kXgk[8] = {
    0.99145537112081263921,  //
    0.94910791234275852453,  // Gauss node
    0.86486442335976907279,  //
    0.74153118559939443986,  // Gauss node
    0.58608723546769113029,  //
    0.40584515137739716691,  // Gauss node
    0.20778495500789846760,  //
    0.0};                    // Gauss node
constexpr double kWgk[8] = {
    0.022935322010529224964, 0.063092092629978553291,
    0.10479001032225018384,  0.14065325971552591875,
    0.16900472663926790283,  0.19035057806478540991,
    0.20443294007529889241,  0.20948214108472782801};
constexpr double kWg[4] = {
    0.12948496616886969327, 0.27970539148927666790,
    0.38183005050511894495, 0.41795918367346938776};

struct Segment {
  double lo, hi;
  double value;
  double error;
};

Segment gk15(const Integrand1D& f, double lo, double hi) {
  const double c = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);
  double kron = kWgk[7] * f(c);
  double gauss = kWg[3] * f(c);
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kXgk[i];
    const double fsum = f(c - dx) + f(c + dx);
    kron += kWgk[i] * fsum;
    if (i % 2 == 1) gauss += kWg[i / 2] * fsum;
  }
  Segment s;
  s.lo = lo;
  s.hi = hi;
  s.value = kron * h;
  s.error = std::fabs((kron - gauss) * h);
  return s;
}

}  // namespace

QuadResult integrate(const Integrand1D& f, double lo, double hi,
                     const QuadTols& tols, std::span<const double> breakpoints) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
    throw std::invalid_argument("integrate: need finite lo < hi");

  std::vector<double> edges{lo};
  for (double b : breakpoints)
    if (b > lo && b < hi) edges.push_back(b);
  edges.push_back(hi);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::vector<Segment> segs;
  segs.reserve(64);
  for (size_t i = 0; i + 1 < edges.size(); ++i)
    segs.push_back(gk15(f, edges[i], edges[i + 1]));

  auto total = [&segs] {
    double v = 0.0, e = 0.0;
    for (const Segment& s : segs) {
      v += s.value;
      e += s.error;
    }
    return std::pair{v, e};
  };

  for (;;) {
    auto [value, error] = total();
    const double bound = std::fmax(tols.abs_tol, tols.rel_tol * std::fabs(value));
    if (error <= bound) {
      return {value, error, static_cast<int>(segs.size())};
    }
    if (static_cast<int>(segs.size()) >= tols.max_subdivisions) {
      throw QuadConvergenceError(
          "integrate: subdivision cap reached before tolerance",
          {value, error, static_cast<int>(segs.size())});
    }
    auto worst = std::max_element(
        segs.begin(), segs.end(),
        [](const Segment& a, const Segment& b) { return a.error < b.error; });
    const Segment old = *worst;
    const double mid = 0.5 * (old.lo + old.hi);
    if (mid <= old.lo || mid >= old.hi) {
      // interval no longer splittable in double precision
      auto [v2, e2] = total();
      return {v2, e2, static_cast<int>(segs.size())};
    }
    *worst = gk15(f, old.lo, mid);
    segs.push_back(gk15(f, mid, old.hi));
  }
}

QuadResult integrate_semi_infinite(const Integrand1D& f, double lo,
                                   double decay_rate, const QuadTols& tols,
                                   std::span<const double> breakpoints) {
  if (!(decay_rate > 0.0))
    throw std::invalid_argument("integrate_semi_infinite: decay_rate must be > 0");
  double origin = lo;
  for (double b : breakpoints) origin = std::fmax(origin, b);
  // exp(-37) < 1e-16
  const double cut = origin + 37.0 / decay_rate;
  return integrate(f, lo, cut, tols, breakpoints);
}

QuadResult integrate2d(const Integrand2D& f, const QuadAxis& x_axis,
                       const QuadAxis& y_axis, const QuadTols& tols,
                       bool split_at_diagonal) {
  auto resolve_hi = [](const QuadAxis& ax) {
    if (ax.decay_rate > 0.0) {
      double origin = ax.lo;
      for (double b : ax.breakpoints) origin = std::fmax(origin, b);
      return origin + 37.0 / ax.decay_rate;
    }
    return ax.hi;
  };
  const double x_hi = resolve_hi(x_axis);
  const double y_hi = resolve_hi(y_axis);

  QuadTols outer_tols = tols;
  outer_tols.abs_tol *= 10.0;
  outer_tols.rel_tol *= 10.0;

  double inner_error_max = 0.0;
  Integrand1D outer = [&](double x) {
    std::vector<double> ybreaks(y_axis.breakpoints);
    if (split_at_diagonal && x > y_axis.lo && x < y_hi) ybreaks.push_back(x);
    Integrand1D inner = [&f, x](double y) { return f(x, y); };
    QuadResult r = integrate(inner, y_axis.lo, y_hi, tols, ybreaks);
    inner_error_max = std::fmax(inner_error_max, r.error_estimate);
    return r.value;
  };

  QuadResult r = integrate(outer, x_axis.lo, x_hi, outer_tols,
                           x_axis.breakpoints);
  r.error_estimate += inner_error_max * (x_hi - x_axis.lo);
  return r;
}

}  // namespace magnion
