#include <doctest.h>

#include <cmath>

#include "lpplab/error.hpp"
#include "lpplab/stats.hpp"

using namespace lpplab;

TEST_SUITE("stats") {

TEST_CASE("summaries") {
  const std::vector<double> v{1, 2, 3, 4};
  const auto s = summarize(v);
  CHECK(s.estimate == 2.5);
  CHECK(s.std_error == doctest::Approx(std::sqrt(5.0 / 3.0 / 4.0)));
  CHECK(s.ci95.lo == doctest::Approx(2.5 - kZ95 * s.std_error));
  CHECK(s.n == 4);
  const auto var = summarize_variance(v);
  CHECK(var.estimate == doctest::Approx(5.0 / 3.0));
  CHECK_THROWS_AS(summarize(std::vector<double>{1}), SampleSizeError);

  CompensatedSum c;
  c.add(1e16);
  for (int k = 0; k < 10; ++k) c.add(1.0);
  c.add(-1e16);
  CHECK(c.value() == 10.0);
}

TEST_CASE("Kolmogorov tail") {
  CHECK(kolmogorov_tail(1.63) == doctest::Approx(0.0098).epsilon(0.02));
  CHECK(kolmogorov_tail(1.36) == doctest::Approx(0.0495).epsilon(0.02));
  CHECK(kolmogorov_tail(0.0) == 1.0);
}

TEST_CASE("two-sample KS") {
  std::vector<double> a;
  std::vector<double> b;
  std::vector<double> shifted;
  RngStream r(401, 0);
  for (int k = 0; k < 500; ++k) {
    a.push_back(r.normal());
    b.push_back(r.normal());
    shifted.push_back(r.normal() + 0.5);
  }
  const auto same = ks_two_sample(a, b);
  CHECK_FALSE(same.reject_at_1pct);
  CHECK(ks_two_sample(a, a).statistic == 0.0);
  CHECK(ks_two_sample(a, shifted).reject_at_1pct);
  CHECK_FALSE(ks_normal(a).reject_at_1pct);
  CHECK(ks_normal(shifted).reject_at_1pct);
  CHECK_THROWS_AS(ks_normal(std::vector<double>(10, 0.0)), SampleSizeError);

  // Ties: identical integer samples must give D = 0.
  std::vector<double> ints;
  for (int k = 0; k < 100; ++k) ints.push_back(static_cast<double>(k % 5));
  CHECK(ks_two_sample(ints, ints).statistic == 0.0);
}

TEST_CASE("log-log slope of an exact power law") {
  const std::vector<double> ts{50, 100, 200, 400};
  std::vector<StatReport> vars;
  for (double t : ts) vars.push_back(make_report(3.0 * std::pow(t, 2.0 / 3.0), 0.01, 1000));
  const auto fit = fit_log_log_slope(ts, vars);
  CHECK(fit.slope == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(fit.ci.contains(2.0 / 3.0));
  CHECK(fit.strictly_decreasing);
  const std::vector<double> narrow{100, 120, 140, 160};
  CHECK_THROWS_AS(fit_log_log_slope(narrow, vars), ArgumentError);
  CHECK_THROWS_AS(fit_log_log_slope(std::vector<double>{50, 100, 400}, vars), ArgumentError);
}

TEST_CASE("config validation") {
  McConfig c;
  c.spec = make_spec(Model::ContinuumClassical, 1.0);
  c.t = 10;
  c.replicas = 10;
  CHECK_THROWS_AS(c.validate(), ArgumentError);
  c.a = 2.0;
  c.x = 1.0;
  CHECK_THROWS_AS(c.validate(), ArgumentError);
  c.x.reset();
  CHECK_NOTHROW(c.validate());
  CHECK(c.position() == 20.0);
  c.replicas = 1;
  CHECK_THROWS_AS(c.validate(), ArgumentError);
}

TEST_CASE("experiments are thread-count invariant") {
  McConfig c;
  c.spec = make_spec(Model::ContinuumClassical, 1.0);
  c.t = 8;
  c.a = 2.0;
  c.replicas = 60;
  c.master_seed = 9;
  c.threads = 1;
  const auto one = mc_l2_identity(c);
  c.threads = 3;
  const auto three = mc_l2_identity(c);
  CHECK(one.lhs.estimate == three.lhs.estimate);
  CHECK(one.rhs.estimate == three.rhs.estimate);
  CHECK(one.rhs.std_error == three.rhs.std_error);
}

TEST_CASE("clt refuses normality along the characteristic") {
  McConfig c;
  c.spec = make_spec(Model::ContinuumClassical, 1.0);
  c.t = 5;
  c.a = 1.0;
  c.replicas = 60;
  CHECK_THROWS_AS(mc_clt(c, true), CharacteristicDirectionError);
  const auto r = mc_clt(c, false);
  CHECK_FALSE(r.normality.has_value());
  CHECK(r.sigma2 == 0.0);
}

TEST_CASE("stationary mean on a short horizon") {
  McConfig c;
  c.spec = make_spec(Model::LatticeExponential, 0.5);
  c.t = 10;
  c.x = 0.0;
  c.replicas = 400;
  c.master_seed = 4;
  const auto s = mc_stationary_mean(c, c.spec.V);
  CHECK(std::abs(s.estimate) < 4.0 * s.std_error);
  CHECK(s.interior_failures == 0);
}

}
