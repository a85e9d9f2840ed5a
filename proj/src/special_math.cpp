#include "magnion/special_math.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace magnion {

namespace {

constexpr double kInvSqrtPi = 0.56418958354775628695;

// Rational approximations of W. J. Cody (netlib specfun calerf),
// accurate to full double precision on all three ranges.

// |x| <= 0.46875: erf(x) = x * R1(x^2)
double erf_small(double x) {
  static const double a[5] = {3.16112374387056560e00, 1.13864154151050156e02,
                              3.77485237685302021e02, 3.20937758913846947e03,
                              1.85777706184603153e-1};
  static const double b[4] = {2.36012909523441209e01, 2.44024637934444173e02,
                              1.28261652607737228e03, 2.84423683343917062e03};
  const double z = x * x;
  double num = a[4] * z;
  double den = z;
  for (int i = 0; i < 3; ++i) {
    num = (num + a[i]) * z;
    den = (den + b[i]) * z;
  }
  return x * (num + a[3]) / (den + b[3]);
}

// 0.46875 < x <= 4: erfcx(x) = R2(x)
double erfcx_mid(double y) {
  static const double c[9] = {5.64188496988670089e-1, 8.88314979438837594e00,
                              6.61191906371416295e01, 2.98635138197400131e02,
                              8.81952221241769090e02, 1.71204761263407058e03,
                              2.05107837782607147e03, 1.23033935479799725e03,
                              2.15311535474403846e-8};
  static const double d[8] = {1.57449261107098347e01, 1.17693950891312499e02,
                              5.37181101862009858e02, 1.62138957456669019e03,
                              3.29079923573345963e03, 4.36261909014324716e03,
                              3.43936767414372164e03, 1.23033935480374942e03};
  double num = c[8] * y;
  double den = y;
  for (int i = 0; i < 7; ++i) {
    num = (num + c[i]) * y;
    den = (den + d[i]) * y;
  }
  return (num + c[7]) / (den + d[7]);
}

// x > 4: erfcx(x) = (1/sqrt(pi) - z*R3(z)) / x with z = 1/x^2
double erfcx_large(double y) {
  static const double p[6] = {3.05326634961232344e-1, 3.60344899949804439e-1,
                              1.25781726111229246e-1, 1.60837851487422766e-2,
                              6.58749161529837803e-4, 1.63153871373020978e-2};
  static const double q[5] = {2.56852019228982242e00, 1.87295284992346047e00,
                              5.27905102951428412e-1, 6.05183413124413191e-2,
                              2.33520497626869185e-3};
  const double z = 1.0 / (y * y);
  double num = p[5] * z;
  double den = z;
  for (int i = 0; i < 4; ++i) {
    num = (num + p[i]) * z;
    den = (den + q[i]) * z;
  }
  const double r = z * (num + p[4]) / (den + q[4]);
  return (kInvSqrtPi - r) / y;
}

double erfcx_nonneg(double x) {
  if (x <= 0.46875) return std::exp(x * x) * (1.0 - erf_small(x));
  if (x <= 4.0) return erfcx_mid(x);
  return erfcx_large(x);
}

void require_finite(double x, const char* who) {
  if (!std::isfinite(x)) throw std::domain_error(std::string(who) + ": non-finite argument");
}

}  // namespace

double erfc(double x) {
  require_finite(x, "erfc");
  const double y = std::fabs(x);
  double r;
  if (y <= 0.46875) {
    r = 1.0 - erf_small(y);
  } else {
    r = std::exp(-y * y) * erfcx_nonneg(y);
  }
  return x >= 0.0 ? r : 2.0 - r;
}

double erfcx(double x) {
  require_finite(x, "erfcx");
  if (x >= 0.0) return erfcx_nonneg(x);
  // erfcx(-x) = 2 exp(x^2) - erfcx(x); overflows for x << -27, as does the
  // true value.
  return 2.0 * std::exp(x * x) - erfcx_nonneg(-x);
}

double lambert_w0(double x) {
  require_finite(x, "lambert_w0");
  const double branch_point = -std::exp(-1.0);
  if (x < branch_point) throw std::domain_error("lambert_w0: x < -1/e");
  if (x == 0.0) return 0.0;

  double w;
  if (x < -0.25) {
    // series around the branch point, p = sqrt(2(ex+1))
    double p2 = 2.0 * (std::exp(1.0) * x + 1.0);
    if (p2 < 0.0) p2 = 0.0;  // rounding below -1/e guard
    const double p = std::sqrt(p2);
    w = -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0)));
  } else if (x < 3.0) {
    w = std::log1p(x);
  } else {
    const double l1 = std::log(x);
    const double l2 = std::log(l1);
    w = l1 - l2 + l2 / l1;
  }

  const double tol = 1e-15 * std::fmax(1.0, std::fabs(x));
  for (int i = 0; i < 50; ++i) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    if (std::fabs(f) <= tol) break;
    // Halley step
    const double wp1 = w + 1.0;
    const double den = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    w -= f / den;
  }

  const double resid = std::fabs(w * std::exp(w) - x);
  if (resid > 1e-14 * std::fmax(1.0, std::fabs(x)))
    throw std::runtime_error("lambert_w0: iteration failed to converge");
  return w;
}

}  // namespace magnion
