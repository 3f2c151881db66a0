#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace lpplab {

struct Atom {
  double position = 0.0;
  double mass = 0.0;

  bool operator==(const Atom&) const = default;
};

/// Locally finite positive measure on a window, stored as sorted atoms.
///
/// cumulative(x) is the signed distribution function anchored at the origin:
/// the mass of (0, x] for x >= 0 and minus the mass of (x, 0] for x < 0. It
/// is right-continuous and nondecreasing, with cumulative(0) == 0.
class AtomicMeasure {
 public:
  AtomicMeasure() = default;
  /// Throws ArgumentError unless positions are strictly increasing, masses
  /// are positive and every atom lies in [window_left, window_right].
  AtomicMeasure(std::vector<Atom> atoms, double window_left,
                double window_right);

  std::span<const Atom> atoms() const { return atoms_; }
  double window_left() const { return window_left_; }
  double window_right() const { return window_right_; }
  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }
  double total_mass() const { return prefix_.empty() ? 0.0 : prefix_.back(); }

  /// Throws WindowError if x lies outside [window_left, window_right].
  double cumulative(double x) const;
  /// lim_{z -> x-} cumulative(z), i.e. cumulative(x) minus any atom at x.
  double cumulative_left(double x) const;
  /// Mass of (a, b]; a <= b.
  double mass_between(double a, double b) const;
  /// Position of the largest atom strictly left of x, or window_left when
  /// there is none.
  double last_atom_before(double x) const;

  bool operator==(const AtomicMeasure& other) const {
    return atoms_ == other.atoms_ && window_left_ == other.window_left_ &&
           window_right_ == other.window_right_;
  }

 private:
  // Mass of atoms with position <= x (or < x when strict), relative to the
  // window's left edge.
  double mass_upto(double x, bool strict) const;
  void check_window(double x) const;

  std::vector<Atom> atoms_;
  std::vector<double> prefix_;  // prefix_[k] = mass of atoms_[0..k]
  double window_left_ = 0.0;
  double window_right_ = 0.0;
};

}  // namespace lpplab
