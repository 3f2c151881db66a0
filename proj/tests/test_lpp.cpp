#include <doctest.h>

#include <cmath>

#include "lpplab/error.hpp"
#include "lpplab/lpp.hpp"
#include "oracles.hpp"
#include "random_instances.hpp"

using namespace lpplab;

TEST_SUITE("lpp") {

TEST_CASE("hand-computed chains") {
  const Rect box{0, 10, 0, 10};
  // (1,1) -> (2,3) -> (5,4) weighs 6; (3,2) blocks nothing but is lighter.
  const PointCloud c({{1, 1, 1}, {2, 3, 2}, {3, 2, 1.5}, {5, 4, 3}, {4, 0.5, 10}}, box);
  CHECK(last_passage(c, {0, 0}, {10, 10}) == 10.0 + 3.0);
  CHECK(last_passage(c, {0, 0.6}, {10, 10}) == 6.0);
  CHECK(last_passage(c, {1, 1}, {10, 10}) == 5.0);  // half-open: (1,1) excluded
  CHECK(last_passage(c, {0, 0}, {0.5, 10}) == 0.0);
}

TEST_CASE("sweep agrees with the quadratic DP") {
  const Rect box{0, 10, 0, 10};
  for (int k = 0; k < 30; ++k) {
    RngStream r(101, static_cast<std::uint64_t>(k));
    const auto pts = instances::uniform_points(r, 120, box, false);
    const PointCloud c(pts, box);
    const double px = 3.0 * r.uniform();
    const double pt = 3.0 * r.uniform();
    const double qx = 6.0 + 4.0 * r.uniform();
    const double qt = 6.0 + 4.0 * r.uniform();
    const double want = oracle::lpp_quadratic(pts, px, pt, qx, qt);
    CHECK(last_passage(c, {px, pt}, {qx, qt}) == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("quadratic DP agrees with subset enumeration") {
  const Rect box{0, 1, 0, 1};
  for (int k = 0; k < 30; ++k) {
    RngStream r(102, static_cast<std::uint64_t>(k));
    const auto pts = instances::uniform_points(r, 12, box, true);
    CHECK(oracle::lpp_quadratic(pts, 0, 0, 1, 1) == oracle::lpp_subsets(pts, 0, 0, 1, 1));
  }
}

TEST_CASE("lattice DP agrees with path enumeration") {
  for (int k = 0; k < 20; ++k) {
    // Integer weights keep every path sum exact whatever the summation order.
    RngStream r(103, static_cast<std::uint64_t>(k));
    std::vector<double> ws;
    for (int s = 0; s < 25; ++s) ws.push_back(1.0 + static_cast<double>(r.next() % 9));
    const WeightGrid g(5, 5, ws);
    auto w = [&](std::int64_t i, std::int64_t j) { return g.at(i, j); };
    CHECK(lattice_last_passage(g, {0, 0}, {5, 5}) == oracle::lattice_paths(w, 1, 1, 5, 5));
    CHECK(lattice_last_passage(g, {1, 2}, {4, 5}) == oracle::lattice_paths(w, 2, 3, 4, 5));
  }
  const WeightGrid g(1, 1, {2.0});
  CHECK(lattice_last_passage(g, {0, 0}, {0, 1}) == 0.0);
  CHECK_THROWS_AS(lattice_last_passage(g, {1, 1}, {0, 0}), ArgumentError);
}

TEST_CASE("boundary solver agrees with chain x candidate enumeration") {
  for (int k = 0; k < 40; ++k) {
    RngStream r(104, static_cast<std::uint64_t>(k));
    const double wl = -4.0 + 2.0 * r.uniform();
    const Rect box{wl, 5, 0, 5};
    const auto nu = instances::uniform_measure(r, 1 + static_cast<int>(r.next() % 6), wl, 5.0);
    const auto pts = instances::uniform_points(r, 1 + static_cast<int>(r.next() % 8), box, k % 2);
    const PointCloud c(pts, box);
    const double x = wl + (5.0 - wl) * r.uniform();
    const double t = 5.0 * r.uniform();
    const auto got = last_passage_with_boundary(nu, c, x, t);
    const auto want = oracle::boundary_brute(nu, pts, x, t);
    CHECK(got.value == doctest::Approx(want.value).epsilon(1e-12));
    CHECK(got.exit_point == want.exit);
  }
}

TEST_CASE("lattice boundary solver agrees with path enumeration") {
  for (int k = 0; k < 30; ++k) {
    RngStream r(105, static_cast<std::uint64_t>(k));
    const std::int64_t origin = -2 + static_cast<std::int64_t>(r.next() % 3);
    std::vector<double> inc;
    for (int s = 0; s < 6; ++s) inc.push_back(r.exponential(1.0));
    const LatticeBoundary nu(origin, inc);
    const std::int64_t t = static_cast<std::int64_t>(r.next() % 4);
    const WeightGrid g = sample_lattice_grid(7, 4, 1.0, r, origin - 1, 1);
    const std::int64_t x = nu.window_left() + static_cast<std::int64_t>(r.next() % 7);
    const auto got = lattice_last_passage_with_boundary(nu, g, x, t);
    const auto want = oracle::lattice_boundary_brute(inc, origin, g, x, t);
    CHECK(got.value == doctest::Approx(want.value).epsilon(1e-12));
    CHECK(got.exit_point == want.exit);
  }
}

TEST_CASE("boundary solver errors") {
  const AtomicMeasure nu({{1.0, 1.0}}, 0.0, 5.0);
  const PointCloud c({{2, 1, 1}}, Rect{0, 5, 0, 3});
  CHECK_THROWS_AS(last_passage_with_boundary(nu, c, -1.0, 1.0), WindowError);
  CHECK_THROWS_AS(last_passage_with_boundary(nu, c, 6.0, 1.0), CoverageError);
  CHECK_THROWS_AS(last_passage_with_boundary(nu, c, 3.0, 4.0), CoverageError);
  const auto r = last_passage_with_boundary(nu, c, 3.0, 2.0);
  CHECK(r.value == 2.0);
  CHECK(r.exit_point == 1.0);
}

TEST_CASE("shape function") {
  CHECK(shape_function(ShapeModel::Lattice, 1, 1) == 4.0);
  CHECK(shape_function(ShapeModel::Continuum, 4, 9) == 12.0);
  CHECK(shape_function(ShapeModel::Continuum, 4, 9, 1.5) == 9.0);
  CHECK_THROWS_AS(shape_function(ShapeModel::Lattice, -1, 1), ArgumentError);
}

TEST_CASE("shape estimates grow towards the limit") {
  const std::vector<std::int64_t> ns{20, 80};
  const auto est = estimate_gamma(WeightDistribution::dirac(1.0), ns, 50, 3, 1);
  REQUIRE(est.estimates.size() == 2);
  CHECK(est.estimates[0].per_unit.estimate < 2.0);
  CHECK(est.estimates[1].per_unit.estimate < 2.0);
  CHECK(est.estimates[1].per_unit.estimate > 1.5);
  CHECK(est.nondecreasing);
  const auto lat = estimate_lattice_shape(ns, 30, 3, 1);
  CHECK(lat.estimates[1].per_unit.estimate == doctest::Approx(4.0).epsilon(0.15));
}

}
