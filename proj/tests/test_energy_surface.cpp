#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "magnion/energy_surface.hpp"

using namespace magnion;

namespace {
// loose quadrature is plenty for surface-level checks and much faster
PerturbOptions scan_opts() {
  PerturbOptions o;
  o.tols = {1e-8, 1e-7, 2000};
  return o;
}
}  // namespace

TEST_CASE("spot energies reproduce published values") {
  CHECK(total_energy(1e12, 0.291) == doctest::Approx(-8.86).epsilon(0.01));
  CHECK(total_energy(4.7e12, 0.183) == doctest::Approx(-14.62).epsilon(0.01));
  CHECK(total_energy(1e13, 0.227, 2.0) == doctest::Approx(-37.26).epsilon(0.015));
}

TEST_CASE("energy point carries a consistent breakdown") {
  auto p = evaluate_energy(1e12, 0.291);
  double z2 = p.model.charge * p.model.charge;
  double rebuilt = z2 * (p.model.scale * p.model.scale * p.breakdown.e2 +
                         1.0 / p.model.distance);
  CHECK(p.energy == doctest::Approx(rebuilt).epsilon(1e-14));
}

TEST_CASE("equilibrium search brackets and refines") {
  auto eq = minimize_over_r(1e10, 1.0, {}, scan_opts());
  CHECK(eq.r_eq == doctest::Approx(1.494).epsilon(0.007));
  CHECK(eq.e_min == doctest::Approx(-1.49).epsilon(0.015));
  CHECK(eq.bracket_lo < eq.r_eq);
  CHECK(eq.r_eq < eq.bracket_hi);
  CHECK(eq.bracket_hi - eq.bracket_lo <= 1e-3);
  CHECK(eq.iterations > 0);
  // the reported minimum really is lower than its neighborhood
  double up = total_energy(1e10, eq.r_eq * 1.05, 1.0, scan_opts());
  double dn = total_energy(1e10, eq.r_eq * 0.95, 1.0, scan_opts());
  CHECK(eq.e_min <= up);
  CHECK(eq.e_min <= dn);
}

TEST_CASE("equilibrium trends with the field") {
  auto lo = minimize_over_r(1e10, 1.0, {}, scan_opts());
  auto mid = minimize_over_r(1e12, 1.0, {}, scan_opts());
  auto hi = minimize_over_r(1e14, 1.0, {}, scan_opts());
  CHECK(mid.r_eq < lo.r_eq);
  CHECK(hi.r_eq < mid.r_eq);
  CHECK(mid.e_min < lo.e_min);
  CHECK(hi.e_min < mid.e_min);
}

TEST_CASE("no minimum raises") {
  CHECK_THROWS_AS(minimize_over_r(1e10, 5.0, {}, scan_opts()), NoMinimumError);
}

TEST_CASE("stability classification at hydrogen-like charge") {
  auto rep = classify_stability(1e10, 1.0, {}, scan_opts());
  CHECK(rep.classification == Stability::bound);
  REQUIRE(rep.minimum.has_value());
  CHECK(rep.minimum->e_min < rep.e_dissoc);
  CHECK(to_string(Stability::bound) == std::string("bound"));
  CHECK(to_string(Stability::resonance) == std::string("resonance"));
  CHECK(to_string(Stability::unbound) == std::string("unbound"));
}

TEST_CASE("large charge destabilizes") {
  auto rep = classify_stability(1e10, 4.0, {}, scan_opts());
  CHECK(rep.classification == Stability::unbound);
}

TEST_CASE("critical charges are ordered and bracket the transition") {
  auto cc = critical_charges(1e10, {}, scan_opts());
  CHECK(cc.z_bound > 1.0);
  CHECK(cc.z_bound < cc.z_critical);
  CHECK(cc.z_critical < 5.0);
  // the classification really flips across each threshold
  auto below = classify_stability(1e10, cc.z_bound - 0.05, {}, scan_opts());
  auto above = classify_stability(1e10, cc.z_critical + 0.05, {}, scan_opts());
  CHECK(below.classification == Stability::bound);
  CHECK(above.classification == Stability::unbound);
}
