#include "magnion/effective_potential.hpp"

#include <cmath>

#include "magnion/special_math.hpp"

namespace magnion {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

double offset(const ScaledModel& m, double z, WellSign sign) {
  return sign == WellSign::minus ? z - m.half_sep : z + m.half_sep;
}

}  // namespace

double v_half(const ScaledModel& m, double z, WellSign sign) {
  const double c = offset(m, z, sign) / m.scale;
  const double root = std::sqrt(0.5 * m.b_au);
  return kSqrtPi * root / m.charge *
         erfcx(std::fabs(c) * root / m.charge);
}

double v_half_quadrature(const ScaledModel& m, double z, WellSign sign,
                         const QuadTols& tols) {
  const double c = offset(m, z, sign) / m.scale;
  const double c2 = c * c;
  const double mag = 2.0 * m.charge * m.charge / m.b_au;
  Integrand1D f = [c2, mag](double u) {
    return std::exp(-u) / std::sqrt(c2 + mag * u);
  };
  return integrate_semi_infinite(f, 0.0, 1.0, tols).value;
}

double v_total(const ScaledModel& m, double z) {
  return v_half(m, z, WellSign::minus) + v_half(m, z, WellSign::plus);
}

double v_total_quadrature(const ScaledModel& m, double z, const QuadTols& tols) {
  return v_half_quadrature(m, z, WellSign::minus, tols) +
         v_half_quadrature(m, z, WellSign::plus, tols);
}

}  // namespace magnion
