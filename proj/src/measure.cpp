#include "lpplab/measure.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lpplab/error.hpp"

namespace lpplab {

AtomicMeasure::AtomicMeasure(std::vector<Atom> atoms, double window_left,
                             double window_right)
    : atoms_(std::move(atoms)),
      window_left_(window_left),
      window_right_(window_right) {
  if (!(window_left_ <= window_right_))
    throw ArgumentError("AtomicMeasure: window bounds out of order");
  prefix_.reserve(atoms_.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    const Atom& a = atoms_[i];
    if (!(a.mass > 0.0) || !std::isfinite(a.mass))
      throw ArgumentError("AtomicMeasure: atom masses must be positive");
    if (a.position < window_left_ || a.position > window_right_)
      throw ArgumentError("AtomicMeasure: atom outside window");
    if (i > 0 && !(atoms_[i - 1].position < a.position))
      throw ArgumentError("AtomicMeasure: positions must be strictly increasing");
    acc += a.mass;
    prefix_.push_back(acc);
  }
}

void AtomicMeasure::check_window(double x) const {
  if (!(x >= window_left_ && x <= window_right_))
    throw WindowError("cumulative: x = " + std::to_string(x) +
                      " outside measure window [" + std::to_string(window_left_) +
                      ", " + std::to_string(window_right_) + "]");
}

double AtomicMeasure::mass_upto(double x, bool strict) const {
  auto it = strict ? std::lower_bound(atoms_.begin(), atoms_.end(), x,
                                      [](const Atom& a, double v) { return a.position < v; })
                   : std::upper_bound(atoms_.begin(), atoms_.end(), x,
                                      [](double v, const Atom& a) { return v < a.position; });
  const auto k = it - atoms_.begin();
  return k == 0 ? 0.0 : prefix_[static_cast<std::size_t>(k - 1)];
}

double AtomicMeasure::cumulative(double x) const {
  check_window(x);
  // A window that excludes the origin is treated as carrying no mass
  // between the origin and the window.
  return mass_upto(x, false) - mass_upto(0.0, false);
}

double AtomicMeasure::cumulative_left(double x) const {
  check_window(x);
  return mass_upto(x, true) - mass_upto(0.0, false);
}

double AtomicMeasure::mass_between(double a, double b) const {
  if (b < a) throw ArgumentError("mass_between: b < a");
  return mass_upto(b, false) - mass_upto(a, false);
}

double AtomicMeasure::last_atom_before(double x) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), x,
                             [](const Atom& a, double v) { return a.position < v; });
  if (it == atoms_.begin()) return window_left_;
  return std::prev(it)->position;
}

}  // namespace lpplab
