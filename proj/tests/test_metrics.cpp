#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "test_helpers.hpp"
#include "wass1d/errors.hpp"
#include "wass1d/metrics.hpp"

using namespace wass1d;

namespace {

// Independent oracle: midpoint Riemann sum of |primitive| over the hull.
double w1_quadrature(const StepFunction& u, const StepFunction& v, std::size_t points) {
  const PiecewiseLinear prim = primitive_of_difference(u, v);
  const double lo = prim.xs.front();
  const double hi = prim.xs.back();
  const double h = (hi - lo) / static_cast<double>(points);
  double total = 0.0;
  for (std::size_t k = 0; k < points; ++k)
    total += std::abs(prim.eval(lo + (static_cast<double>(k) + 0.5) * h));
  return total * h;
}

}  // namespace

TEST_CASE("w1 of identical functions vanishes") {
  StepFunction u({0.25, 0.5}, {2.0, 1.0, 0.0});
  CHECK(w1(u, u) == 0.0);
}

TEST_CASE("w1 of a transported block is mass times distance") {
  // one unit of mass moved from [0, 0.1] to [0.9, 1.0]: distance 0.9 each way
  StepFunction a({0.0, 1.0}, {2.0, 1.0, 0.0});
  StepFunction b({0.1, 0.9}, {2.0, 1.0, 0.0});
  CHECK(w1(a, b) == doctest::Approx(0.09).epsilon(1e-14));

  // a plain shift has unequal masses: the transport metric is undefined and
  // the area metric sees the rectangle
  StepFunction h0 = StepFunction::heaviside(2.0, 0.0, 0.0);
  StepFunction h1 = StepFunction::heaviside(2.0, 0.0, 0.1);
  CHECK(l1_distance(h0, h1) == doctest::Approx(0.2).epsilon(1e-14));
  CHECK_THROWS_AS((void)w1(h0, h1), Error);
}

TEST_CASE("w1 refuses far-state and mass mismatches") {
  StepFunction a = StepFunction::heaviside(2.0, 0.0, 0.0);
  CHECK_THROWS_AS((void)w1(a, StepFunction::heaviside(2.0, 0.5, 0.0)), Error);
  CHECK_THROWS_AS((void)w1(a, StepFunction({0.0, 1.0}, {2.0, 1.0, 0.0})), Error);
}

TEST_CASE("closed form matches the quadrature oracle to 1e-9") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 8; ++trial) {
    StepFunction u = testing::random_steps(rng, 6, -1.0, 1.0);
    // Zero the net mass by adjusting one interior plateau of a copy.
    StepFunction v = testing::random_steps(rng, 5, -1.0, 1.0);
    // Force far states and mass to match: build v from u's far states.
    std::vector<double> vals = v.values();
    vals.front() = u.far_left();
    vals.back() = u.far_right();
    StepFunction v2(v.breakpoints(), vals);
    const double hull_lo = std::min(u.breakpoints().front(), v2.breakpoints().front());
    const double hull_hi = std::max(u.breakpoints().back(), v2.breakpoints().back());
    const double defect = u.integrate(hull_lo, hull_hi) - v2.integrate(hull_lo, hull_hi);
    // Absorb the defect in a width-0.5 patch plateau past the hull.
    std::vector<double> xs = v2.breakpoints();
    std::vector<double> vv = v2.values();
    xs.push_back(hull_hi + 0.25);
    xs.push_back(hull_hi + 0.75);
    vv.push_back(vv.back() + 2.0 * defect);
    vv.push_back(u.far_right());
    StepFunction w(xs, vv);
    CHECK(std::abs(w1(u, w) - w1_quadrature(u, w, 1000000)) <= 1e-9);
  }
}

TEST_CASE("discrete distance moves cell mass by whole cells") {
  Grid grid(0.0, 1.0, 8);
  std::vector<double> a(8, 0.0), b(8, 0.0);
  a[1] += 1.0;
  b[4] += 1.0;  // one unit of cell mass moved three cells
  CHECK(w1_discrete(GridFunction(grid, a, 0.0, 0.0), GridFunction(grid, b, 0.0, 0.0)) ==
        doctest::Approx(3.0).epsilon(1e-14));
  GridFunction same(grid, a, 0.0, 0.0);
  CHECK(w1_discrete(same, same) == 0.0);
}

TEST_CASE("discrete distance rejects incompatible pairs") {
  Grid a(0.0, 0.5, 4);
  Grid b(0.0, 0.25, 4);
  GridFunction u(a, {1.0, -1.0, 0.0, 0.0}, 0.0, 0.0);
  CHECK_THROWS_AS((void)w1_discrete(u, GridFunction(b, {1.0, -1.0, 0.0, 0.0}, 0.0, 0.0)),
                  Error);
  CHECK_THROWS_AS((void)w1_discrete(u, GridFunction(a, {1.0, -1.0, 0.0, 0.0}, 0.0, 0.5)),
                  Error);
  CHECK_THROWS_AS((void)w1_discrete(u, GridFunction(a, {1.0, 1.0, 0.0, 0.0}, 0.0, 0.0)),
                  Error);
}

TEST_CASE("w1 never exceeds the discrete distance") {
  std::mt19937 rng(9);
  Grid grid(0.0, 1.0 / 32.0, 32);
  for (int trial = 0; trial < 100; ++trial) {
    auto [u, v] = testing::random_zero_mass_pair(rng, grid);
    const double cont = w1(u, v);
    const double disc = w1_discrete(u, v);
    CHECK(cont <= disc * (1.0 + 1e-13) + 1e-15);
  }
}

TEST_CASE("single-signed primitives make the two distances equal") {
  std::mt19937 rng(13);
  Grid grid(0.0, 1.0 / 32.0, 32);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    // d = forward difference of a nonnegative bump: prefix sums equal the
    // bump, hence are single-signed.
    std::vector<double> bump(grid.n_cells, 0.0);
    for (std::size_t i = 1; i + 1 < grid.n_cells; ++i) bump[i] = unif(rng);
    std::vector<double> uvals(grid.n_cells, 0.0), vvals(grid.n_cells, 0.0);
    for (std::size_t i = 0; i < grid.n_cells; ++i) {
      const double prev = i == 0 ? 0.0 : bump[i - 1];
      uvals[i] = (bump[i] - prev) / grid.dx;
    }
    GridFunction u(grid, uvals, 0.0, 0.0);
    GridFunction v(grid, vvals, 0.0, 0.0);
    CHECK(w1(u, v) == doctest::Approx(w1_discrete(u, v)).epsilon(1e-12));
  }
}

TEST_CASE("projection error is bounded by TV dx^2") {
  std::mt19937 rng(21);
  Grid grid(0.0, 1.0 / 48.0, 48);
  for (int trial = 0; trial < 100; ++trial) {
    StepFunction v = testing::random_steps(rng, 5, 0.1, 0.9);
    GridFunction p = project(v, grid);
    CHECK(w1(v, p.to_step_function()) <= v.tv() * grid.dx * grid.dx * (1.0 + 1e-12));
  }
}

TEST_CASE("metric axioms on random triples") {
  std::mt19937 rng(29);
  Grid grid(0.0, 1.0 / 24.0, 24);
  for (int trial = 0; trial < 30; ++trial) {
    auto [u, v] = testing::random_zero_mass_pair(rng, grid);
    // third function with the same cell sum: another shuffle of u
    std::vector<double> wvals = u.values();
    std::shuffle(wvals.begin(), wvals.end(), rng);
    GridFunction w(grid, wvals, 0.0, 0.0);
    const double uv = w1(u, v);
    const double vu = w1(v, u);
    CHECK(uv == doctest::Approx(vu).epsilon(1e-13));
    CHECK(uv <= w1(u, w) + w1(w, v) + 1e-12);
  }
}

TEST_CASE("w1 is translation invariant") {
  StepFunction a({0.1, 0.4}, {2.0, 1.0, 0.0});
  StepFunction b({0.2, 0.3}, {2.0, 1.0, 0.0});
  const double base = w1(a, b);
  CHECK(w1(a.translated(5.0), b.translated(5.0)) == doctest::Approx(base).epsilon(1e-13));
}

TEST_CASE("dlip norm reads interior difference quotients") {
  Grid grid(0.0, 1.0, 3);
  GridFunction linear(grid, {0.5, 1.5, 2.5}, 0.5, 2.5);
  CHECK(dlip_norm(linear) == doctest::Approx(1.0));
  GridFunction constant(grid, {4.0, 4.0, 4.0}, 4.0, 4.0);
  CHECK(dlip_norm(constant) == 0.0);
  GridFunction kink(grid, {0.0, 3.0, 3.0}, 0.0, 3.0);
  CHECK(dlip_norm(kink) == doctest::Approx(3.0));
}
