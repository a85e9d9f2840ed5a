#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "magnion/scaling.hpp"
#include "magnion/special_math.hpp"

using namespace magnion;

TEST_CASE("reference field maps to unit dimensionless strength") {
  auto m = build_scaled_model({kFieldUnitGauss, 1.0});
  CHECK(m.b_au == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(m.scale == 2.0 * lambert_w0(0.5));
  CHECK(m.scale == doctest::Approx(0.7034674224983917).epsilon(1e-14));
}

TEST_CASE("scale solves its defining equation") {
  // L = 2 W(sqrt(b)/2)  <=>  (L/2) exp(L/2) = sqrt(b)/2
  for (double b : {1e9, 2.35e9, 1e10, 1e12, 4.7e12, 1e14, 5e14, 1e16}) {
    CAPTURE(b);
    auto m = build_scaled_model({b, 0.3});
    double half = 0.5 * m.scale;
    double target = 0.5 * std::sqrt(m.b_au);
    CHECK(std::fabs(half * std::exp(half) - target) <=
          1e-13 * std::max(1.0, target));
  }
}

TEST_CASE("scale grows monotonically with the field") {
  double prev = 0.0;
  for (double t = 9.0; t <= 16.0; t += 0.25) {
    auto m = build_scaled_model({std::pow(10.0, t), 1.0});
    CHECK(m.scale > prev);
    prev = m.scale;
  }
}

TEST_CASE("half separation is Z R L / 2 to rounding") {
  for (double b : {1e10, 1e12, 1e14}) {
    for (double r : {0.05, 0.291, 1.494}) {
      for (double z : {1.0, 2.0, 3.7}) {
        CAPTURE(b);
        CAPTURE(r);
        CAPTURE(z);
        auto m = build_scaled_model({b, r, z});
        CHECK(std::fabs(m.half_sep / (z * r * m.scale) - 0.5) <= 1e-16);
      }
    }
  }
}

TEST_CASE("weak-field limit: L ~ sqrt(b_au)") {
  auto m = build_scaled_model({2.35e3, 1.0});  // b_au = 1e-6
  CHECK(m.scale == doctest::Approx(std::sqrt(m.b_au)).epsilon(1e-3));
  CHECK(m.scale > 0.0);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(build_scaled_model({0.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(build_scaled_model({-1e12, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(build_scaled_model({1e12, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(build_scaled_model({1e12, -0.3}), std::invalid_argument);
  CHECK_THROWS_AS(build_scaled_model({1e12, 1.0, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(build_scaled_model({1e12, 1.0, 11.0}), std::invalid_argument);
  CHECK_THROWS_AS(build_scaled_model({std::nan(""), 1.0}), std::invalid_argument);
}
