#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "magnion/delta_model.hpp"
#include "magnion/perturbation.hpp"
#include "magnion/quadrature.hpp"
#include "magnion/scaling.hpp"

using namespace magnion;

TEST_CASE("zero perturbation leaves only the delta-delta trace") {
  auto g = solve_ground(1.0);
  Potential1D zero = [](double) { return 0.0; };
  CHECK(first_order_term(g, zero) == doctest::Approx(g.peak * g.peak).epsilon(1e-13));
  EnergyBreakdown pieces;
  double so = second_order_term(g, zero, {}, &pieces);
  ReducedResolvent rr(g);
  CHECK(so == doctest::Approx(g.peak * g.peak * rr.at_center()).epsilon(1e-12));
  CHECK(pieces.so_cross == 0.0);
  CHECK(pieces.so_double == 0.0);
}

TEST_CASE("narrow surrogate for the delta well cancels the first order") {
  // W -> delta(z - a) makes tr(P0 dV P0) vanish identically. psi0^2 has a
  // corner at a, so a normalized Gaussian of width sigma leaves an O(sigma)
  // residual; check the linear vanishing as the surrogate narrows.
  auto g = solve_ground(1.0);
  auto fo_for = [&](double sigma) {
    Potential1D nearly_delta = [=](double z) {
      double u = (z - 1.0) / sigma;
      return std::exp(-0.5 * u * u) / (sigma * std::sqrt(2.0 * M_PI));
    };
    return first_order_term(g, nearly_delta, {1e-11, 1e-10, 4000});
  };
  double f4 = fo_for(0.04), f2 = fo_for(0.02), f1 = fo_for(0.01);
  CHECK(std::fabs(f1) < std::fabs(f2));
  CHECK(std::fabs(f2) < std::fabs(f4));
  CHECK(std::fabs(f1) <= 0.02);
  double ratio = f1 / f4;  // ~1/4 for linear decay
  CHECK(ratio > 0.15);
  CHECK(ratio < 0.35);
}

TEST_CASE("breakdown identity and error budget") {
  for (double b : {1e12, 1e14}) {
    CAPTURE(b);
    auto m = build_scaled_model({b, 0.291});
    auto bd = e2_breakdown(m);
    CHECK(bd.e2 == bd.e0 + bd.first_order - bd.second_order);
    CHECK(bd.second_order ==
          doctest::Approx(bd.so_delta_delta + bd.so_cross + bd.so_double)
              .epsilon(1e-12));
    CHECK(bd.second_order >= 0.0);
    CHECK(bd.quadrature_error <= 1e-6);
    CHECK(bd.quadrature_error >= 0.0);
  }
}

TEST_CASE("first order is a small correction at the reference point") {
  auto m = build_scaled_model({1e12, 0.291});
  auto bd = e2_breakdown(m);
  CHECK(std::fabs(bd.first_order) < 0.3 * std::fabs(bd.e0));
}

TEST_CASE("first order fades at fixed separation as the field grows") {
  double prev = 1e9;
  for (double b : {1e14, 1e16, 1e18}) {
    CAPTURE(b);
    ModelInput in{b, 1.0, 1.0};
    in.distance = 1.4 / build_scaled_model(in).scale;  // fix a = 0.7
    auto m = build_scaled_model(in);
    double fo = std::fabs(first_order_term(solve_ground(m.half_sep), m));
    CHECK(fo < prev);
    prev = fo;
  }
}

TEST_CASE("double-trace integrand is symmetric under axis swap") {
  auto m = build_scaled_model({1e12, 0.291});
  auto g = solve_ground(m.half_sep);
  auto w = scaled_potential(m);
  ReducedResolvent rr(g);
  auto f = [&](double x, double y) {
    return psi0(g, x) * w(x) * rr(x, y) * w(y) * psi0(g, y);
  };
  QuadAxis ax{0.0, 0.0, 2.0 * g.decay, {m.half_sep}};
  auto q = integrate2d(f, ax, ax, {1e-9, 1e-8, 2000}, true);
  auto qt = integrate2d([&](double x, double y) { return f(y, x); }, ax, ax,
                        {1e-9, 1e-8, 2000}, true);
  CHECK(std::fabs(q.value - qt.value) <=
        q.error_estimate + qt.error_estimate + 1e-12);
}

TEST_CASE("tightening tolerances moves the answer within the estimate") {
  auto m = build_scaled_model({1e13, 0.148});
  PerturbOptions loose;
  loose.tols = {1e-8, 1e-7, 2000};
  auto bl = e2_breakdown(m, loose);
  PerturbOptions tight;
  tight.tols = {1e-10, 1e-9, 2000};
  auto bt = e2_breakdown(m, tight);
  CHECK(std::fabs(bl.e2 - bt.e2) <= 10.0 * bl.quadrature_error + 1e-10);
  CHECK(bt.quadrature_error <= bl.quadrature_error + 1e-12);
}

TEST_CASE("reference quadrature potential path agrees with the closed form") {
  auto m = build_scaled_model({1e12, 0.291});
  PerturbOptions ref;
  ref.quadrature_potential = true;
  auto b_closed = e2_breakdown(m);
  auto b_ref = e2_breakdown(m, ref);
  CHECK(b_closed.e2 == doctest::Approx(b_ref.e2).epsilon(1e-7));
}

TEST_CASE("second-order regression at the reference point") {
  auto m = build_scaled_model({1e12, 0.291});
  auto bd = e2_breakdown(m);
  CHECK(bd.second_order == doctest::Approx(0.1829065745).epsilon(1e-7));
  CHECK(bd.so_delta_delta == doctest::Approx(0.3595792364).epsilon(1e-7));
  CHECK(bd.so_cross == doctest::Approx(-0.2403828252).epsilon(1e-6));
  CHECK(bd.so_double == doctest::Approx(0.0637101633).epsilon(1e-6));
  CHECK(bd.e2 == doctest::Approx(-0.9865238327).epsilon(1e-8));
}
