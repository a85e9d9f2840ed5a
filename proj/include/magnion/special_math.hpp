#pragma once

namespace magnion {

/// Principal branch W0 of the Lambert function, defined for x >= -1/e.
/// Satisfies w * exp(w) = x with relative residual <= 1e-14 * max(1, |x|).
/// Throws std::domain_error for x < -1/e or non-finite input.
double lambert_w0(double x);

/// Complementary error function, 1 - erf(x).
double erfc(double x);

/// Scaled complementary error function exp(x^2) * erfc(x).
/// Overflow-free for large positive x (erfcx(x) ~ 1/(x sqrt(pi))).
double erfcx(double x);

}  // namespace magnion
