#include "magnion/scaling.hpp"

#include <cmath>
#include <stdexcept>

#include "magnion/special_math.hpp"

namespace magnion {

ScaledModel build_scaled_model(const ModelInput& input) {
  if (!(input.b_gauss > 0.0) || !std::isfinite(input.b_gauss))
    throw std::invalid_argument("build_scaled_model: field must be positive");
  if (!(input.distance > 0.0) || !std::isfinite(input.distance))
    throw std::invalid_argument("build_scaled_model: distance must be positive");
  if (!(input.charge >= 1.0) || !(input.charge <= input.charge_cap))
    throw std::invalid_argument("build_scaled_model: charge out of range");

  ScaledModel m;
  m.b_au = input.b_gauss / kFieldUnitGauss;
  m.scale = 2.0 * lambert_w0(0.5 * std::sqrt(m.b_au));
  m.charge = input.charge;
  m.distance = input.distance;
  m.half_sep = 0.5 * input.charge * input.distance * m.scale;
  return m;
}

}  // namespace magnion
