#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "lpplab/environment.hpp"
#include "lpplab/lpp.hpp"
#include "lpplab/measure.hpp"
#include "lpplab/rng.hpp"

namespace lpplab {

enum class Model { ContinuumClassical, LatticeExponential };

std::string to_string(Model model);
/// "continuum" or "lattice".
Model parse_model(const std::string& name);

/// Equilibrium family with its characteristic constants.
///
/// ContinuumClassical (unit marks, Poisson(lambda) initial atoms):
///   gamma = 2, V = 1/lambda^2, psi = 2/lambda.
/// LatticeExponential (Exp(1) weights, Exp(rho) increments, 0 < rho < 1):
///   V = rho^2/(1-rho)^2, psi = 1/(1-rho)^2; gamma is unused and set to 1.
struct EquilibriumSpec {
  Model model = Model::ContinuumClassical;
  double param = 1.0;
  double gamma = 2.0;
  double V = 1.0;
  double psi = 2.0;

  bool lattice() const { return model == Model::LatticeExponential; }
  /// Mark distribution of the bulk environment.
  WeightDistribution bulk_weights() const;
  /// Mean boundary mass per unit length: lambda, or 1/rho.
  double boundary_density() const;
  /// Mean mass crossing the left side per unit time: 1/lambda, or 1/(1-rho).
  double left_flux() const;
};

/// Throws ParameterError for param <= 0 or (lattice) param >= 1.
EquilibriumSpec make_spec(Model model, double param);

/// Maps a (model, bulk weight law) request to one of the two exactly
/// solvable families; any other law throws UnsupportedModelError, because
/// no equilibrium measure can be sampled for it.
EquilibriumSpec equilibrium_spec_for(Model model, const WeightDistribution& bulk,
                                     double param);

/// Continuum: unit atoms at Poisson(lambda) positions in [lo, hi].
AtomicMeasure sample_equilibrium_measure(const EquilibriumSpec& spec, double lo,
                                         double hi, RngStream& rng);
/// Lattice: i.i.d. Exp(rho) increments for sites lo+1..hi, so the
/// cumulative is defined on [lo, hi].
LatticeBoundary sample_equilibrium_increments(const EquilibriumSpec& spec,
                                              std::int64_t lo, std::int64_t hi,
                                              RngStream& rng);

using EquilibriumSample = std::variant<AtomicMeasure, LatticeBoundary>;
/// Dispatches on the spec's model; the lattice window is [floor(lo), floor(hi)].
EquilibriumSample sample_equilibrium(const EquilibriumSpec& spec, double lo,
                                     double hi, RngStream& rng);

/// Variance slope lim Var(L(a t, t)) / t along direction a >= 0:
///   continuum |a lambda - 1/lambda|,
///   lattice   |a (1-rho)^2 - rho^2| / (rho^2 (1-rho)^2).
double sigma_squared(const EquilibriumSpec& spec, double a);

/// Gaussian centering: lambda z + t/lambda, or z/rho + t/(1-rho).
/// At z = V t both reduce to psi t.
double clt_centering(const EquilibriumSpec& spec, double z, double t);

}  // namespace lpplab
