#include <doctest.h>

#include <cmath>

#include "lpplab/error.hpp"
#include "lpplab/fluid.hpp"
#include "random_instances.hpp"

using namespace lpplab;

namespace {

std::vector<double> masses(const FluidState& s) {
  std::vector<double> m;
  for (const auto& a : s.measure.atoms()) m.push_back(a.mass);
  return m;
}

std::vector<double> positions(const FluidState& s) {
  std::vector<double> p;
  for (const auto& a : s.measure.atoms()) p.push_back(a.position);
  return p;
}

}  // namespace

TEST_SUITE("fluid") {

TEST_CASE("worked example trajectory") {
  const auto ex = worked_example();
  const auto s = fluid_evolve(ex.initial, ex.events, ex.horizon);
  REQUIRE(s.size() == 4);
  CHECK(masses(s[0]) == std::vector<double>{1, 3, 7});
  CHECK(masses(s[1]) == std::vector<double>{1, 4, 6});
  CHECK(positions(s[1]) == std::vector<double>{2, 4, 8});
  CHECK(masses(s[2]) == std::vector<double>{5});
  CHECK(masses(s[3]) == std::vector<double>{7});
  CHECK(positions(s[3]) == std::vector<double>{6});
  CHECK(s[3].exited_left == 10.0);
  CHECK(s[3].entered_right == 2.0);
  CHECK(s[3].time == 8.0);
}

TEST_CASE("single step rules") {
  const FluidState start{AtomicMeasure({{2, 5}, {5, 3}}, 0, 10), 0.0, 0.0, 0.0};
  SUBCASE("event inside takes from the right") {
    const auto s = fluid_step(start, {3, 1, 2});
    CHECK(positions(s) == std::vector<double>{2, 3, 5});
    CHECK(masses(s) == std::vector<double>{5, 2, 1});
    CHECK(s.entered_right == 0.0);
  }
  SUBCASE("shortfall enters from the right edge") {
    const auto s = fluid_step(start, {4, 1, 4});
    CHECK(masses(s) == std::vector<double>{5, 4});
    CHECK(s.entered_right == 1.0);
  }
  SUBCASE("event at an atom merges") {
    const auto s = fluid_step(start, {2, 1, 2});
    CHECK(positions(s) == std::vector<double>{2, 5});
    CHECK(masses(s) == std::vector<double>{7, 1});
  }
  SUBCASE("event left of the window drains the left edge") {
    const auto s = fluid_step(start, {-1, 1, 6});
    CHECK(masses(s) == std::vector<double>{2});
    CHECK(s.exited_left == 6.0);
  }
  SUBCASE("event right of the window is ignored") {
    const auto s = fluid_step(start, {11, 1, 6});
    CHECK(s.measure == start.measure);
    CHECK(s.time == 1.0);
  }
  CHECK_THROWS_AS(fluid_step(FluidState{start.measure, 2.0, 0, 0}, {3, 1, 1}), OrderingError);
  CHECK_THROWS_AS(fluid_step(start, {3, 1, 0}), ArgumentError);
}

TEST_CASE("mass balance") {
  for (int k = 0; k < 50; ++k) {
    RngStream r(201, static_cast<std::uint64_t>(k));
    const auto nu = instances::uniform_measure(r, 1 + static_cast<int>(r.next() % 6), 0, 10);
    std::vector<FluidEvent> ev;
    double time = 0.0;
    for (int e = 0; e < 10; ++e) {
      time += r.exponential(1.0);
      ev.push_back({-2.0 + 14.0 * r.uniform(), time, r.exponential(0.5)});
    }
    for (const auto& s : fluid_evolve(nu, ev, time + 1.0))
      CHECK(s.measure.total_mass() + s.exited_left ==
            doctest::Approx(nu.total_mass() + s.entered_right));
  }
}

TEST_CASE("ledger is monotone and horizon state is appended") {
  const auto ex = worked_example();
  const auto s = fluid_evolve(ex.initial, ex.events, 9.0);
  REQUIRE(s.size() == 5);
  CHECK(s[4].time == 9.0);
  CHECK(s[4].measure == s[3].measure);
  for (std::size_t k = 1; k < s.size(); ++k) {
    CHECK(s[k].exited_left >= s[k - 1].exited_left);
    CHECK(s[k].entered_right >= s[k - 1].entered_right);
  }
  const auto none = fluid_evolve(ex.initial, {}, 3.0);
  REQUIRE(none.size() == 1);
  CHECK(none[0].measure == ex.initial);
}

TEST_CASE("locality: an event only moves mass to its right") {
  const AtomicMeasure nu({{1, 2}, {4, 2}, {7, 2}}, 0, 10);
  const auto s = fluid_step({nu, 0, 0, 0}, {5, 1, 1});
  CHECK(s.measure.mass_between(0, 4.5) == 4.0);
}

TEST_CASE("fluid and boundary last passage agree") {
  for (int k = 0; k < 30; ++k) {
    RngStream r(202, static_cast<std::uint64_t>(k));
    const double t = 1.0 + 4.0 * r.uniform();
    const Rect box{0, 10, 0, t};
    const auto nu = instances::uniform_measure(r, 1 + static_cast<int>(r.next() % 6), 0, 10);
    const auto pts = instances::uniform_points(r, 1 + static_cast<int>(r.next() % 10), box, k % 2);
    const PointCloud c(pts, box);
    std::vector<double> probes;
    for (int p = 0; p <= 20; ++p) probes.push_back(0.5 * p);
    const auto states = fluid_evolve(nu, events_from_cloud(c, t), t);
    const auto direct = interval_masses(states.back().measure, probes);
    const auto via_lpp = fluid_from_lpp(nu, c, t, probes);
    REQUIRE(direct.size() == via_lpp.size());
    for (std::size_t i = 0; i < direct.size(); ++i)
      CHECK(std::abs(direct[i] - via_lpp[i]) <= 1e-9);
  }
}

TEST_CASE("unsorted events are rejected") {
  const auto ex = worked_example();
  std::vector<FluidEvent> ev{{1, 2, 1}, {1, 1, 1}};
  CHECK_THROWS_AS(fluid_evolve(ex.initial, ev, 5), OrderingError);
  CHECK_THROWS_AS(fluid_evolve(ex.initial, ex.events, 7), OrderingError);
}

TEST_CASE("left density stand-in") {
  CHECK(has_left_density(AtomicMeasure({{1, 1}}, 0, 10)));
  CHECK_FALSE(has_left_density(AtomicMeasure({{9, 1}}, 0, 10)));
}

}
