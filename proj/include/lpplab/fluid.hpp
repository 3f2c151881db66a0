#pragma once

#include <span>
#include <vector>

#include "lpplab/environment.hpp"
#include "lpplab/measure.hpp"

namespace lpplab {

/// A space-time point of weight w acting on the fluid. Events with x0 left
/// of the state's window stand for points outside it and drain mass through
/// the left edge.
struct FluidEvent {
  double x0 = 0.0;
  double time = 0.0;
  double w = 1.0;
};

/// Fluid mass distribution at `time` on a fixed window, with a ledger of
/// mass that left through the left edge and mass drawn in from beyond the
/// right edge.
struct FluidState {
  AtomicMeasure measure;
  double time = 0.0;
  double exited_left = 0.0;
  double entered_right = 0.0;
};

/// Applies one event: mass w is created at x0 (merged into an atom already
/// there) and the same mass is removed from the first fluid strictly right
/// of x0, left to right; whatever the window cannot supply is counted in
/// entered_right. An event left of the window removes w from the window's
/// atoms starting at the left edge and adds it to exited_left. Events right
/// of the window do not touch it. Throws OrderingError if ev.time <
/// state.time.
FluidState fluid_step(const FluidState& state, const FluidEvent& ev);

/// Left fold of fluid_step over time-sorted events, starting from `nu` at
/// time 0. Returns the state after every event, followed by a state at
/// `horizon` when the horizon lies beyond the last event (or there are no
/// events). Throws OrderingError on unsorted events or events past the
/// horizon.
std::vector<FluidState> fluid_evolve(const AtomicMeasure& nu,
                                     std::span<const FluidEvent> events,
                                     double horizon);

/// Events for every cloud point with 0 < t <= horizon, sorted by time.
std::vector<FluidEvent> events_from_cloud(const PointCloud& cloud, double horizon);

/// Interval masses M_t((p_k, p_{k+1}]) = L_nu(p_{k+1}, t) - L_nu(p_k, t),
/// computed only from the boundary last-passage solver. Probes must be
/// sorted and lie inside the measure's window.
std::vector<double> fluid_from_lpp(const AtomicMeasure& nu, const PointCloud& cloud,
                                   double t, std::span<const double> probes);

/// Masses of consecutive probe intervals read directly off a measure.
std::vector<double> interval_masses(const AtomicMeasure& measure,
                                    std::span<const double> probes);

/// Window stand-in for the asymptotic admissibility condition
/// liminf_{y -> -inf} nu(y)/y > 0: the leftmost quarter of the window must
/// carry positive mass. This cannot certify the condition itself.
bool has_left_density(const AtomicMeasure& nu);

/// Three-atom, two-point worked example on the box [0, 10] x [0, 10]:
/// atoms of mass 5, 3, 7 at x = 2, 5, 8; points of weight 4 at (4, 3) and 7
/// at (6, 8); points left of the box drain 4 at time 1.5 and 6 at time 6.
/// The masses and ledger totals are exact in double arithmetic.
struct WorkedExample {
  AtomicMeasure initial;
  std::vector<FluidEvent> events;
  double horizon = 0.0;
};
WorkedExample worked_example();

}  // namespace lpplab
