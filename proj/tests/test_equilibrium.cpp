#include <doctest.h>

#include <cmath>

#include "lpplab/equilibrium.hpp"
#include "lpplab/error.hpp"
#include "lpplab/stationary.hpp"

using namespace lpplab;

TEST_SUITE("equilibrium") {

TEST_CASE("continuum constants") {
  const auto s = make_spec(Model::ContinuumClassical, 2.0);
  CHECK(s.V == doctest::Approx(0.25));
  CHECK(s.psi == doctest::Approx(1.0));
  CHECK(sigma_squared(s, 0.25) == 0.0);
  CHECK(sigma_squared(make_spec(Model::ContinuumClassical, 1.0), 2.0) == doctest::Approx(1.0));
  CHECK(clt_centering(s, 3.0, 4.0) == doctest::Approx(8.0));
}

TEST_CASE("lattice constants") {
  const auto s = make_spec(Model::LatticeExponential, 0.5);
  CHECK(s.V == doctest::Approx(1.0));
  CHECK(s.psi == doctest::Approx(4.0));
  CHECK(sigma_squared(s, 4.0) == doctest::Approx(12.0));
  CHECK(sigma_squared(s, 1.0) == 0.0);
  CHECK(clt_centering(s, 2.0, 1.0) == doctest::Approx(6.0));
  CHECK_THROWS_AS(make_spec(Model::LatticeExponential, 1.0), ParameterError);
  CHECK_THROWS_AS(make_spec(Model::ContinuumClassical, 0.0), ParameterError);
}

TEST_CASE("equilibrium exists only for the two exactly solvable laws") {
  CHECK_NOTHROW(equilibrium_spec_for(Model::ContinuumClassical, WeightDistribution::dirac(1), 1));
  CHECK_NOTHROW(
      equilibrium_spec_for(Model::LatticeExponential, WeightDistribution::exponential(1), 0.3));
  CHECK_THROWS_AS(
      equilibrium_spec_for(Model::ContinuumClassical, WeightDistribution::exponential(1), 1),
      UnsupportedModelError);
  CHECK_THROWS_AS(
      equilibrium_spec_for(Model::ContinuumClassical, WeightDistribution::dirac(2), 1),
      UnsupportedModelError);
  CHECK(parse_model("lattice") == Model::LatticeExponential);
  CHECK_THROWS_AS(parse_model("torus"), ParameterError);
}

TEST_CASE("equilibrium measure statistics") {
  const auto s = make_spec(Model::ContinuumClassical, 1.5);
  const int reps = 400;
  double total = 0.0;
  for (int k = 0; k < reps; ++k) {
    RngStream r(301, static_cast<std::uint64_t>(k));
    const auto m = sample_equilibrium_measure(s, -5.0, 5.0, r);
    total += m.total_mass();
    for (const auto& a : m.atoms()) CHECK(a.mass == 1.0);
  }
  CHECK(std::abs(total / reps - 15.0) < 4.0 * std::sqrt(15.0 / reps));

  const auto l = make_spec(Model::LatticeExponential, 0.25);
  double inc = 0.0;
  int count = 0;
  for (int k = 0; k < 100; ++k) {
    RngStream r(302, static_cast<std::uint64_t>(k));
    const auto b = sample_equilibrium_increments(l, -10, 10, r);
    CHECK(b.window_left() == -10);
    CHECK(b.window_right() == 10);
    for (double v : b.increments()) inc += v, ++count;
  }
  // Exp(rho) increments have mean 1 / rho = 4 and sd 4.
  CHECK(std::abs(inc / count - 4.0) < 4.0 * 4.0 / std::sqrt(count));
}

TEST_CASE("window growth does not resample the realization") {
  for (auto model : {Model::ContinuumClassical, Model::LatticeExponential}) {
    const auto s = make_spec(model, 0.5);
    StationaryRealization real(s, 10.0, 20.0, RngStream(5, 1));
    const double a = real.nu(-3.0);
    const double b = real.nu(15.0);
    const double before = real.solve_on_window(15.0, real.window_left()).value;
    real.extend_to(real.window_left() - 100.0);
    CHECK(real.nu(-3.0) == doctest::Approx(a).epsilon(1e-12));
    CHECK(real.nu(15.0) == doctest::Approx(b).epsilon(1e-12));
    CHECK(real.solve_on_window(15.0, real.window_left()).value >= before - 1e-9);
    CHECK(real.nu(0.0) == 0.0);
  }
}

TEST_CASE("adaptive solve reaches an interior exit") {
  const auto s = make_spec(Model::ContinuumClassical, 1.0);
  StationaryRealization real(s, 30.0, 30.0, RngStream(6, 1));
  const auto r = real.solve(30.0);
  CHECK(r.interior);
  CHECK(r.value > 0.0);
  CHECK_THROWS_AS(real.solve(31.0), CoverageError);
}

}
