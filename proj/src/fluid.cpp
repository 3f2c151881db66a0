#include "lpplab/fluid.hpp"

#include <algorithm>

#include "lpplab/error.hpp"
#include "lpplab/lpp.hpp"

namespace lpplab {

namespace {

// Removes `amount` from atoms[from..] left to right; returns the shortfall.
double consume(std::vector<Atom>& atoms, std::size_t from, double amount) {
  std::size_t k = from;
  while (amount > 0.0 && k < atoms.size()) {
    if (atoms[k].mass <= amount) {
      amount -= atoms[k].mass;
      atoms[k].mass = 0.0;
    } else {
      atoms[k].mass -= amount;
      amount = 0.0;
    }
    ++k;
  }
  std::erase_if(atoms, [](const Atom& a) { return a.mass <= 0.0; });
  return amount;
}

}  // namespace

FluidState fluid_step(const FluidState& state, const FluidEvent& ev) {
  if (ev.time < state.time) throw OrderingError("fluid_step: event time precedes state time");
  if (!(ev.w > 0.0)) throw ArgumentError("fluid_step: event weight must be positive");

  const double wl = state.measure.window_left();
  const double wr = state.measure.window_right();
  std::vector<Atom> atoms(state.measure.atoms().begin(), state.measure.atoms().end());
  FluidState next = state;
  next.time = ev.time;

  if (ev.x0 < wl) {
    const double shortfall = consume(atoms, 0, ev.w);
    next.exited_left += ev.w;
    next.entered_right += shortfall;
  } else if (ev.x0 <= wr) {
    auto it = std::lower_bound(atoms.begin(), atoms.end(), ev.x0,
                               [](const Atom& a, double v) { return a.position < v; });
    std::size_t k = static_cast<std::size_t>(it - atoms.begin());
    if (it != atoms.end() && it->position == ev.x0) {
      it->mass += ev.w;
    } else {
      atoms.insert(it, Atom{ev.x0, ev.w});
    }
    next.entered_right += consume(atoms, k + 1, ev.w);
  }
  next.measure = AtomicMeasure(std::move(atoms), wl, wr);
  return next;
}

std::vector<FluidState> fluid_evolve(const AtomicMeasure& nu,
                                     std::span<const FluidEvent> events,
                                     double horizon) {
  for (std::size_t i = 1; i < events.size(); ++i) {
    if (events[i].time < events[i - 1].time)
      throw OrderingError("fluid_evolve: events are not sorted by time");
  }
  if (!events.empty() && (events.front().time < 0.0 || events.back().time > horizon))
    throw OrderingError("fluid_evolve: event times must lie in [0, horizon]");

  std::vector<FluidState> trajectory;
  trajectory.reserve(events.size() + 1);
  FluidState state{nu, 0.0, 0.0, 0.0};
  for (const auto& ev : events) {
    state = fluid_step(state, ev);
    trajectory.push_back(state);
  }
  if (trajectory.empty() || horizon > state.time) {
    state.time = std::max(state.time, horizon);
    trajectory.push_back(state);
  }
  return trajectory;
}

std::vector<FluidEvent> events_from_cloud(const PointCloud& cloud, double horizon) {
  std::vector<FluidEvent> events;
  for (const auto& p : cloud.points()) {
    if (p.t > 0.0 && p.t <= horizon) events.push_back({p.x, p.t, p.w});
  }
  std::sort(events.begin(), events.end(),
            [](const FluidEvent& a, const FluidEvent& b) { return a.time < b.time; });
  return events;
}

std::vector<double> fluid_from_lpp(const AtomicMeasure& nu, const PointCloud& cloud,
                                   double t, std::span<const double> probes) {
  if (!std::is_sorted(probes.begin(), probes.end()))
    throw ArgumentError("fluid_from_lpp: probes must be sorted");
  std::vector<double> values;
  values.reserve(probes.size());
  for (double p : probes) values.push_back(last_passage_with_boundary(nu, cloud, p, t).value);
  std::vector<double> masses;
  for (std::size_t k = 1; k < values.size(); ++k) masses.push_back(values[k] - values[k - 1]);
  return masses;
}

std::vector<double> interval_masses(const AtomicMeasure& measure,
                                    std::span<const double> probes) {
  std::vector<double> masses;
  for (std::size_t k = 1; k < probes.size(); ++k)
    masses.push_back(measure.mass_between(probes[k - 1], probes[k]));
  return masses;
}

bool has_left_density(const AtomicMeasure& nu) {
  const double quarter = nu.window_left() + 0.25 * (nu.window_right() - nu.window_left());
  return !nu.empty() && nu.atoms().front().position <= quarter;
}

WorkedExample worked_example() {
  WorkedExample ex;
  ex.initial = AtomicMeasure({{2.0, 5.0}, {5.0, 3.0}, {8.0, 7.0}}, 0.0, 10.0);
  ex.events = {{-1.0, 1.5, 4.0}, {4.0, 3.0, 4.0}, {-1.0, 6.0, 6.0}, {6.0, 8.0, 7.0}};
  ex.horizon = 8.0;
  return ex;
}

}  // namespace lpplab
