#include <doctest.h>

#include <cmath>
#include <numbers>

#include "csdr/action.hpp"

using namespace csdr;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("frozen pairing scale matches a fresh calibration") {
  CHECK(std::abs(calibrate_pairing_scale() - ActionConfig::kCalibratedPairingScale) <
        1e-12);
}

TEST_CASE("action scan over the real axis") {
  ActionConfig cfg;
  const double expected[] = {kPi / 2.0, 9.0 * kPi / 32.0, 0.0, 25.0 * kPi / 32.0,
                             4.5 * kPi};
  const double moduli[] = {0.0, 0.5, 1.0, 1.5, 2.0};
  for (int k = 0; k < 5; ++k) {
    const double s = action_value(cfg, Complex{moduli[k], 0.0});
    CHECK(std::abs(s - expected[k]) < 1e-10);
  }
}

TEST_CASE("action agrees with the closed form off the real axis") {
  ActionConfig cfg;
  for (Complex f : {Complex{0.3, 0.4}, Complex{-1.1, 0.6}, Complex{0.0, 1.7}}) {
    const double s = action_value(cfg, f);
    const double a = analytic_action(cfg, f);
    CHECK(std::abs(s - a) / std::max(1.0, a) < 1e-10);
  }
}

TEST_CASE("action scales as 1 / (e R)^2") {
  for (double radius : {0.5, 2.0}) {
    for (double coupling : {0.5, 2.0}) {
      ActionConfig cfg;
      cfg.radius = radius;
      cfg.coupling = coupling;
      const Complex f{1.4, -0.2};
      const double expected = analytic_action(cfg, f);
      CHECK(std::abs(action_value(cfg, f) - expected) / std::max(1.0, expected) < 1e-10);
    }
  }
}

TEST_CASE("abelian members have f-independent action") {
  ActionConfig cfg;
  cfg.n = 2;
  const double a = action_value(cfg, Complex{0, 0});
  const double b = action_value(cfg, Complex{0.9, 0.4});
  CHECK(std::abs(a - b) < 1e-12);
  // charge-2 monopole: 4x the unit-monopole action
  CHECK(std::abs(a - 4.0 * kPi / 2.0) < 1e-10);
}

TEST_CASE("n = 0 is flat with zero action") {
  ActionConfig cfg;
  cfg.n = 0;
  CHECK(std::abs(action_value(cfg, Complex{0.7, 0.1})) < 1e-12);
}

TEST_CASE("scan interface") {
  ActionConfig cfg;
  const auto rows = action_scan(cfg, {Complex{0, 0}, Complex{1, 0}});
  REQUIRE(rows.size() == 2);
  CHECK(std::abs(rows[0].action - kPi / 2.0) < 1e-10);
  CHECK(std::abs(rows[1].action) < 1e-10);
  CHECK_THROWS_AS((void)action_scan(cfg, {}), std::invalid_argument);
}

TEST_CASE("descent reaches the unit circle of minima") {
  ActionConfig cfg;
  cfg.quad_order = 16;
  for (Complex seed : {Complex{0.4, 0.2}, Complex{1.6, -0.5}, Complex{0.0, 1.8}}) {
    const Extremum e = find_extremum(cfg, seed, /*ascend=*/false);
    CHECK(std::abs(std::abs(e.f) - 1.0) < 1e-6);
    CHECK(e.action < 1e-10);
    CHECK(e.kind == ExtremumKind::minimum);
  }
}

TEST_CASE("ascent from near the origin reaches the central maximum") {
  ActionConfig cfg;
  cfg.quad_order = 16;
  const Extremum e = find_extremum(cfg, Complex{0.05, -0.02}, /*ascend=*/true);
  CHECK(std::abs(e.f) < 1e-6);
  CHECK(std::abs(e.action - kPi / 2.0) / (kPi / 2.0) < 1e-8);
  CHECK(e.kind == ExtremumKind::maximum);
}

TEST_CASE("find_extrema runs descent per seed") {
  ActionConfig cfg;
  cfg.quad_order = 16;
  const auto es = find_extrema(cfg, {Complex{0.5, 0.0}, Complex{-1.2, 0.3}});
  REQUIRE(es.size() == 2);
  for (const Extremum& e : es) {
    CHECK(std::abs(std::abs(e.f) - 1.0) < 1e-6);
  }
}

TEST_CASE("numeric gradient matches the closed form") {
  ActionConfig cfg;
  for (Complex f : {Complex{0.5, 0.0}, Complex{1.3, 0.7}, Complex{-0.2, -1.1}}) {
    CHECK(gradient_check(cfg, f) < 1e-5);
  }
}

TEST_CASE("invalid tolerance throws") {
  ActionConfig cfg;
  CHECK_THROWS_AS((void)find_extremum(cfg, Complex{0.5, 0.0}, false, 0.0),
                  std::invalid_argument);
}
