#include <doctest.h>

#include <random>

#include "test_helpers.hpp"
#include "wass1d/errors.hpp"
#include "wass1d/front_tracker.hpp"

using namespace wass1d;

namespace {
const ConvexFlux kBurgers = burgers_flux();
const StepFunction kTwoJumps({0.25, 0.5}, {2.0, 1.0, 0.0});
}  // namespace

TEST_CASE("Rankine-Hugoniot speeds for the Burgers benchmark") {
  CHECK(shock_speed(2.0, 1.0, kBurgers) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(shock_speed(1.0, 0.0, kBurgers) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(shock_speed(2.0, 0.0, kBurgers) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(shock_speed(0.0, 1.0, kBurgers), Error);
}

TEST_CASE("first interaction of the two-jump data is at 0.25") {
  const FrontState st = FrontState::from_step_function(kTwoJumps, kBurgers);
  REQUIRE(first_interaction_time(st).has_value());
  CHECK(*first_interaction_time(st) == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("a single shock never interacts") {
  const FrontState st =
      FrontState::from_step_function(StepFunction::heaviside(1.0, 0.0, 0.0), kBurgers);
  CHECK_FALSE(first_interaction_time(st).has_value());
}

TEST_CASE("three-shock collision time by pairwise enumeration") {
  // speeds 2.5, 1.5, 0.5; both adjacent pairs close at rate 1 over gap 0.1
  const StepFunction u({0.0, 0.1, 0.2}, {3.0, 2.0, 1.0, 0.0});
  const FrontState st = FrontState::from_step_function(u, kBurgers);
  CHECK(*first_interaction_time(st) == doctest::Approx(0.1).epsilon(1e-14));
}

TEST_CASE("evolution before the interaction keeps two fronts") {
  const StepFunction u = evolve(kTwoJumps, kBurgers, 0.15);
  REQUIRE(u.jump_count() == 2);
  CHECK(u.breakpoints()[0] == doctest::Approx(0.475).epsilon(1e-14));
  CHECK(u.breakpoints()[1] == doctest::Approx(0.575).epsilon(1e-14));
  CHECK(u.values() == std::vector<double>{2.0, 1.0, 0.0});
}

TEST_CASE("evolution after the interaction is a single front") {
  const StepFunction u = evolve(kTwoJumps, kBurgers, 0.3);
  REQUIRE(u.jump_count() == 1);
  CHECK(u.breakpoints()[0] == doctest::Approx(3.0 / 8.0 + 0.3).epsilon(1e-14));
  CHECK(u.values() == std::vector<double>{2.0, 0.0});
}

TEST_CASE("zero time returns the data unchanged") {
  const StepFunction u = evolve(kTwoJumps, kBurgers, 0.0);
  CHECK(u.breakpoints() == kTwoJumps.breakpoints());
  CHECK(u.values() == kTwoJumps.values());
}

TEST_CASE("simultaneous triple collision merges in one event") {
  const StepFunction u({0.0, 0.1, 0.2}, {3.0, 2.0, 1.0, 0.0});
  const StepFunction after = evolve(u, kBurgers, 0.1);
  REQUIRE(after.jump_count() == 1);
  CHECK(after.breakpoints()[0] == doctest::Approx(0.25).epsilon(1e-13));
  CHECK(after.values() == std::vector<double>{3.0, 0.0});
  // merged front then travels at speed (f(3)-f(0))/3 = 1.5
  const StepFunction later = evolve(u, kBurgers, 0.2);
  CHECK(later.breakpoints()[0] == doctest::Approx(0.25 + 1.5 * 0.1).epsilon(1e-13));
}

TEST_CASE("total variation is conserved by pure shock merging") {
  CHECK(tv(kTwoJumps) == 2.0);
  CHECK(tv(evolve(kTwoJumps, kBurgers, 0.15)) == 2.0);
  CHECK(tv(evolve(kTwoJumps, kBurgers, 0.3)) == 2.0);
  CHECK(tv(StepFunction(1.0)) == 0.0);
}

TEST_CASE("window mass obeys the flux balance") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const StepFunction u0 = testing::random_decreasing_steps(rng, 4, 0.0, 1.0, 3.0, -1.0);
    const double t = 0.05 + 0.2 * (trial % 5);
    const StepFunction ut = evolve(u0, kBurgers, t);
    const double lo = -10.0, hi = 10.0;  // window containing all fronts at both times
    const double gained = ut.integrate(lo, hi) - u0.integrate(lo, hi);
    CHECK(gained ==
          doctest::Approx(t * (kBurgers(u0.far_left()) - kBurgers(u0.far_right())))
              .epsilon(1e-12));
  }
}

TEST_CASE("evolution is a semigroup") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    const StepFunction u0 = testing::random_decreasing_steps(rng, 4, 0.0, 1.0);
    const StepFunction direct = evolve(u0, kBurgers, 0.4);
    const StepFunction chained = evolve(evolve(u0, kBurgers, 0.17), kBurgers, 0.23);
    REQUIRE(direct.jump_count() == chained.jump_count());
    for (std::size_t k = 0; k < direct.jump_count(); ++k) {
      CHECK(direct.breakpoints()[k] ==
            doctest::Approx(chained.breakpoints()[k]).epsilon(1e-14));
      CHECK(direct.values()[k] == doctest::Approx(chained.values()[k]).epsilon(1e-14));
    }
  }
}

TEST_CASE("front count never grows and states stay admissible") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const StepFunction u0 = testing::random_decreasing_steps(rng, 5, 0.0, 1.0);
    std::size_t prev = u0.jump_count();
    for (double t : {0.05, 0.1, 0.2, 0.4, 0.8, 1.6}) {
      const StepFunction ut = evolve(u0, kBurgers, t);
      CHECK(ut.jump_count() <= prev);
      prev = ut.jump_count();
      CHECK(FrontState::from_step_function(ut, kBurgers, t).lax_admissible(kBurgers));
    }
    CHECK(evolve(u0, kBurgers, 100.0).jump_count() == 1);
  }
}

TEST_CASE("non-decreasing data is rejected") {
  CHECK_THROWS_AS(evolve(StepFunction({0.0}, {0.0, 1.0}), kBurgers, 1.0), Error);
}
