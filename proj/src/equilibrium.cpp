#include "lpplab/equilibrium.hpp"

#include <cmath>

#include "lpplab/error.hpp"

namespace lpplab {

std::string to_string(Model model) {
  return model == Model::ContinuumClassical ? "continuum" : "lattice";
}

Model parse_model(const std::string& name) {
  if (name == "continuum") return Model::ContinuumClassical;
  if (name == "lattice") return Model::LatticeExponential;
  throw ParameterError("unknown model '" + name + "' (expected continuum|lattice)");
}

WeightDistribution EquilibriumSpec::bulk_weights() const {
  return lattice() ? WeightDistribution::exponential(1.0) : WeightDistribution::dirac(1.0);
}

double EquilibriumSpec::boundary_density() const {
  return lattice() ? 1.0 / param : param;
}

double EquilibriumSpec::left_flux() const {
  return lattice() ? 1.0 / (1.0 - param) : 1.0 / param;
}

EquilibriumSpec make_spec(Model model, double param) {
  if (!(param > 0.0) || !std::isfinite(param))
    throw ParameterError("equilibrium parameter must be positive");
  EquilibriumSpec s;
  s.model = model;
  s.param = param;
  if (model == Model::ContinuumClassical) {
    s.gamma = 2.0;
    const double half = s.gamma / (2.0 * param);
    s.V = half * half;
    s.psi = s.gamma * s.gamma / (2.0 * param);
  } else {
    if (!(param < 1.0)) throw ParameterError("lattice density rho must lie in (0, 1)");
    const double q = 1.0 - param;
    s.gamma = 1.0;
    s.V = (param * param) / (q * q);
    s.psi = 1.0 / (q * q);
  }
  return s;
}

EquilibriumSpec equilibrium_spec_for(Model model, const WeightDistribution& bulk,
                                     double param) {
  const auto expected = model == Model::ContinuumClassical ? WeightDistribution::dirac(1.0)
                                                           : WeightDistribution::exponential(1.0);
  if (!(bulk == expected))
    throw UnsupportedModelError("no sampleable equilibrium measure for " + to_string(model) +
                                " model with weights " + bulk.to_string() + " (supported: " +
                                expected.to_string() + ")");
  return make_spec(model, param);
}

AtomicMeasure sample_equilibrium_measure(const EquilibriumSpec& spec, double lo,
                                         double hi, RngStream& rng) {
  if (spec.lattice()) throw UnsupportedModelError("continuum measure requested for lattice spec");
  if (!(lo <= hi)) throw ArgumentError("equilibrium window bounds out of order");
  std::vector<Atom> atoms;
  double x = lo;
  for (;;) {
    const double gap = rng.exponential(spec.param);
    if (gap <= 0.0) continue;
    x += gap;
    if (x > hi) break;
    atoms.push_back({x, 1.0});
  }
  return AtomicMeasure(std::move(atoms), lo, hi);
}

LatticeBoundary sample_equilibrium_increments(const EquilibriumSpec& spec,
                                              std::int64_t lo, std::int64_t hi,
                                              RngStream& rng) {
  if (!spec.lattice()) throw UnsupportedModelError("lattice increments requested for continuum spec");
  if (lo > hi) throw ArgumentError("equilibrium window bounds out of order");
  std::vector<double> inc(static_cast<std::size_t>(hi - lo));
  for (auto& v : inc) v = rng.exponential(spec.param);
  return LatticeBoundary(lo + 1, std::move(inc));
}

EquilibriumSample sample_equilibrium(const EquilibriumSpec& spec, double lo,
                                     double hi, RngStream& rng) {
  if (spec.lattice())
    return sample_equilibrium_increments(spec, static_cast<std::int64_t>(std::floor(lo)),
                                         static_cast<std::int64_t>(std::floor(hi)), rng);
  return sample_equilibrium_measure(spec, lo, hi, rng);
}

double sigma_squared(const EquilibriumSpec& spec, double a) {
  if (a < 0.0) throw ArgumentError("sigma_squared: direction must be >= 0");
  if (a == spec.V) return 0.0;  // exact zero along the characteristic
  const double p = spec.param;
  if (!spec.lattice()) return std::abs(a * p - 1.0 / p);
  const double q = 1.0 - p;
  return std::abs(a * q * q - p * p) / (p * p * q * q);
}

double clt_centering(const EquilibriumSpec& spec, double z, double t) {
  if (t < 0.0) throw ArgumentError("clt_centering: negative t");
  const double p = spec.param;
  if (!spec.lattice()) return p * z + t / p;
  return z / p + t / (1.0 - p);
}

}  // namespace lpplab
