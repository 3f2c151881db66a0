#include "lpplab/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "lpplab/environment.hpp"
#include "lpplab/equilibrium.hpp"
#include "lpplab/error.hpp"
#include "lpplab/fluid.hpp"
#include "lpplab/lpp.hpp"
#include "lpplab/report.hpp"
#include "lpplab/stats.hpp"

namespace lpplab {

namespace {

const std::vector<std::string> kSubcommands = {
    "simulate-lpp", "simulate-fluid", "replay-figure1", "verify-l2", "verify-translation",
    "verify-mean",  "clt",            "cube-root",      "shape"};

struct RunConfig {
  std::string subcommand;
  std::string model = "continuum";
  std::optional<double> lambda;
  std::optional<double> rho;
  std::optional<double> t;
  std::optional<double> a;
  std::optional<double> x;
  std::optional<double> V;
  std::optional<std::size_t> replicas;
  std::optional<std::uint64_t> seed;
  unsigned threads = 0;
  std::string format = "csv";
  std::string out;
  std::string plot_out;
  std::string weights;
  std::string n_list;
  std::string t_list;
  double gamma = 2.0;
  double width = 10.0;
  bool corrupt = false;
  bool no_normality = false;
  std::string config;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError("bad number '" + item + "' in list '" + text + "'");
    }
  }
  if (out.empty()) throw ConfigError("empty list");
  return out;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string opt_text(const std::optional<double>& v) { return v ? format_double(*v) : "-"; }

// Everything that determines the results, and nothing that does not
// (threads, output paths).
std::string canonical(const RunConfig& c) {
  std::ostringstream os;
  os << c.subcommand << "|" << c.model << "|" << opt_text(c.lambda) << "|" << opt_text(c.rho)
     << "|" << opt_text(c.t) << "|" << opt_text(c.a) << "|" << opt_text(c.x) << "|"
     << opt_text(c.V) << "|" << (c.replicas ? std::to_string(*c.replicas) : "-") << "|"
     << (c.seed ? std::to_string(*c.seed) : "-") << "|" << c.weights << "|" << c.n_list << "|"
     << c.t_list << "|" << format_double(c.gamma) << "|" << format_double(c.width) << "|"
     << c.corrupt << c.no_normality;
  return os.str();
}

class Runner {
 public:
  Runner(RunConfig cfg, std::ostream& out, std::ostream& err)
      : cfg_(std::move(cfg)), out_(out), err_(err), format_(parse_format(cfg_.format)) {
    run_id_ = hex(fnv1a(canonical(cfg_)));
  }

  int dispatch() {
    const std::string& s = cfg_.subcommand;
    if (s == "shape") return shape();
    if (s == "replay-figure1") return replay();
    if (s == "simulate-fluid") return simulate_fluid();
    if (s == "simulate-lpp") return simulate_lpp();
    if (s == "verify-l2") return verify_l2();
    if (s == "verify-translation") return verify_translation();
    if (s == "verify-mean") return verify_mean();
    if (s == "clt") return clt();
    if (s == "cube-root") return cube_root();
    throw ConfigError("unknown subcommand '" + s + "'");
  }

 private:
  Model model() const { return parse_model(cfg_.model); }

  double param() const {
    if (model() == Model::LatticeExponential) {
      if (cfg_.lambda) throw ConfigError("--lambda applies to the continuum model; use --rho");
      return cfg_.rho.value_or(0.5);
    }
    if (cfg_.rho) throw ConfigError("--rho applies to the lattice model; use --lambda");
    return cfg_.lambda.value_or(1.0);
  }

  WeightDistribution weights() const {
    if (!cfg_.weights.empty()) return WeightDistribution::parse(cfg_.weights);
    return model() == Model::LatticeExponential ? WeightDistribution::exponential(1.0)
                                                : WeightDistribution::dirac(1.0);
  }

  EquilibriumSpec spec() const {
    const WeightDistribution w = weights();
    if (!check_exp_moment(w))
      err_ << "warning: weight law " << w.to_string() << " has no finite exponential moment\n";
    return equilibrium_spec_for(model(), w, param());
  }

  std::uint64_t seed() const { return cfg_.seed.value_or(1); }

  McConfig mc(double default_t, std::size_t default_replicas,
              std::optional<double> default_a,
              std::optional<double> default_x = std::nullopt) const {
    McConfig c;
    c.spec = spec();
    c.t = cfg_.t.value_or(default_t);
    if (cfg_.x) {
      if (cfg_.a) throw ConfigError("give either --a or --x, not both");
      c.x = cfg_.x;
    } else if (cfg_.a || default_a) {
      c.a = cfg_.a ? cfg_.a : default_a;
    } else {
      c.x = default_x;
    }
    c.replicas = cfg_.replicas.value_or(default_replicas);
    c.master_seed = seed();
    c.threads = cfg_.threads;
    c.validate();
    return c;
  }

  Record base(const std::string& tag) const {
    Record r;
    r.run_id = tag.empty() ? run_id_ : run_id_ + ":" + tag;
    r.subcommand = cfg_.subcommand;
    r.model = cfg_.model;
    r.seed = seed();
    return r;
  }

  Record from_stat(const std::string& tag, const McConfig& c, const StatReport& s) const {
    Record r = base(tag);
    r.param = c.spec.param;
    r.t = c.t;
    r.a_or_x = c.a ? *c.a : *c.x;
    r.estimate = s.estimate;
    r.std_error = s.std_error;
    r.ci_lo = s.ci95.lo;
    r.ci_hi = s.ci95.hi;
    r.n = s.n;
    return r;
  }

  void write(const std::vector<Record>& records) {
    const std::string text = render_records(records, format_);
    if (cfg_.out.empty() || cfg_.out == "-")
      out_ << text;
    else
      write_text(cfg_.out, text);
  }

  void write_curves(const std::vector<CurvePoint>& points) {
    if (!cfg_.plot_out.empty()) write_text(cfg_.plot_out, render_curves(points));
  }

  int invalid_if_truncated(std::size_t failures) {
    if (failures == 0) return kExitOk;
    err_ << "invalid run: " << failures
         << " replica(s) exhausted the truncation window doubling\n";
    return kExitError;
  }

  int shape() {
    const double xx = cfg_.x.value_or(1.0);
    const double tt = cfg_.t.value_or(1.0);
    const ShapeModel sm =
        model() == Model::LatticeExponential ? ShapeModel::Lattice : ShapeModel::Continuum;
    const double v = shape_function(sm, xx, tt, cfg_.gamma);
    if (!cfg_.out.empty()) {
      Record r = base("");
      r.t = tt;
      r.a_or_x = xx;
      r.estimate = v;
      write_text(cfg_.out, render_records(std::vector<Record>{r}, format_));
    }
    out_ << format_double(v) << "\n";
    return kExitOk;
  }

  void write_trajectory(const std::vector<FluidState>& states) {
    const std::string text = render_trajectory(states, format_);
    if (cfg_.out.empty() || cfg_.out == "-")
      out_ << text;
    else
      write_text(cfg_.out, text);
  }

  int replay() {
    const WorkedExample ex = worked_example();
    const auto states = fluid_evolve(ex.initial, ex.events, ex.horizon);
    write_trajectory(states);
    auto masses = [](const FluidState& s) {
      std::vector<double> m;
      for (const auto& a : s.measure.atoms()) m.push_back(a.mass);
      return m;
    };
    const bool ok = states.size() == 4 && masses(states[1]) == std::vector<double>{1, 4, 6} &&
                    masses(states[3]) == std::vector<double>{7} &&
                    states[3].exited_left == 10.0 && states[3].entered_right == 2.0;
    if (!ok) {
      err_ << "replay-figure1: trajectory does not reproduce the expected masses\n";
      return kExitError;
    }
    err_ << "replay-figure1: intermediate atoms 1,4,6; final atom 7; exited_left 10; "
            "entered_right 2\n";
    return kExitOk;
  }

  int simulate_fluid() {
    const double lam = param();
    if (model() != Model::ContinuumClassical)
      throw UnsupportedModelError("simulate-fluid runs the continuum fluid only");
    const double tt = cfg_.t.value_or(10.0);
    const double w = cfg_.width;
    RngStream rng(seed(), 0, 0);
    RngStream nu_rng = rng.fork(1);
    RngStream cloud_rng = rng.fork(2);
    const EquilibriumSpec sp = make_spec(Model::ContinuumClassical, lam);
    const AtomicMeasure nu = sample_equilibrium_measure(sp, 0.0, w, nu_rng);
    const PointCloud cloud = sample_poisson_rect(Rect{0.0, w, 0.0, tt}, 1.0, weights(), cloud_rng);
    const auto events = events_from_cloud(cloud, tt);
    const auto states = fluid_evolve(nu, events, tt);
    write_trajectory(states);

    std::vector<double> probes;
    for (int k = 0; k <= 20; ++k) probes.push_back(w * k / 20.0);
    const auto from_lpp = fluid_from_lpp(nu, cloud, tt, probes);
    const auto direct = interval_masses(states.back().measure, probes);
    double worst = 0.0;
    for (std::size_t k = 0; k < direct.size(); ++k)
      worst = std::max(worst, std::abs(direct[k] - from_lpp[k]));
    err_ << "simulate-fluid: " << events.size() << " events, max |fluid - lpp| on probes = "
         << format_double(worst) << "\n";
    return worst <= 1e-9 ? kExitOk : kExitError;
  }

  int simulate_lpp() {
    std::vector<std::int64_t> ns;
    for (double v : parse_number_list(cfg_.n_list.empty() ? "100,300,1000" : cfg_.n_list))
      ns.push_back(static_cast<std::int64_t>(v));
    const std::size_t reps = cfg_.replicas.value_or(200);
    const WeightDistribution w = weights();
    if (!check_exp_moment(w))
      err_ << "warning: weight law " << w.to_string() << " has no finite exponential moment\n";
    const GammaEstimates est = model() == Model::LatticeExponential
                                   ? estimate_lattice_shape(ns, reps, seed(), cfg_.threads)
                                   : estimate_gamma(w, ns, reps, seed(), cfg_.threads);
    std::vector<Record> records;
    std::vector<CurvePoint> curve;
    for (const auto& e : est.estimates) {
      Record r = base("n" + std::to_string(e.n));
      r.t = static_cast<double>(e.n);
      r.a_or_x = static_cast<double>(e.n);
      r.estimate = e.per_unit.estimate;
      r.std_error = e.per_unit.std_error;
      r.ci_lo = e.per_unit.ci95.lo;
      r.ci_hi = e.per_unit.ci95.hi;
      r.n = e.per_unit.n;
      records.push_back(r);
      curve.push_back({"per_unit", static_cast<double>(e.n), e.per_unit.estimate});
      err_ << "simulate-lpp: n=" << e.n << " E L/n = " << format_double(e.per_unit.estimate)
           << " +- " << format_double(e.per_unit.std_error) << "\n";
    }
    write(records);
    write_curves(curve);
    if (!est.nondecreasing) err_ << "note: estimates are not nondecreasing in n within 2 SE\n";
    return kExitOk;
  }

  int verify_l2() {
    const McConfig c = mc(25.0, 2000, 2.0);
    const L2IdentityResult res = mc_l2_identity(c);
    Record compat = base("compatible");
    compat.param = c.spec.param;
    compat.t = c.t;
    compat.a_or_x = c.a ? *c.a : *c.x;
    const double se = std::hypot(res.lhs.std_error, res.rhs.std_error);
    compat.statistic = se > 0.0 ? (res.lhs.estimate - res.rhs.estimate) / se : 0.0;
    compat.reject = !res.compatible;
    compat.n = res.lhs.n + res.rhs.n;
    write({from_stat("lhs", c, res.lhs), from_stat("rhs", c, res.rhs), compat});
    err_ << "verify-l2: lhs " << format_double(res.lhs.estimate) << " +- "
         << format_double(res.lhs.std_error) << ", rhs " << format_double(res.rhs.estimate)
         << " +- " << format_double(res.rhs.std_error)
         << (res.compatible ? " (compatible)\n" : " (INCOMPATIBLE)\n");
    if (const int e = invalid_if_truncated(res.lhs.interior_failures + res.rhs.interior_failures))
      return e;
    return res.compatible ? kExitOk : kExitRejected;
  }

  int verify_translation() {
    const McConfig c = mc(20.0, 2000, std::nullopt, 1.0);
    const double V = cfg_.V.value_or(0.0);
    const TranslationResult res = mc_translation_identity(c, V, cfg_.corrupt);
    Record r = base(cfg_.corrupt ? "corrupted" : "");
    r.param = c.spec.param;
    r.t = c.t;
    r.a_or_x = c.a ? *c.a : *c.x;
    r.estimate = res.rhs_mean.estimate - res.lhs_mean.estimate;
    r.std_error = std::hypot(res.lhs_mean.std_error, res.rhs_mean.std_error);
    r.statistic = res.test.statistic;
    r.reject = res.test.reject_at_1pct;
    r.n = res.test.n;
    write({r});
    err_ << "verify-translation: KS D = " << format_double(res.test.statistic)
         << ", p <= " << format_double(res.test.p_value_bound)
         << (res.test.reject_at_1pct ? " (rejected at 1%)\n" : " (not rejected)\n");
    if (const int e = invalid_if_truncated(res.lhs_mean.interior_failures +
                                           res.rhs_mean.interior_failures))
      return e;
    return res.test.reject_at_1pct ? kExitRejected : kExitOk;
  }

  int verify_mean() {
    const McConfig c = mc(50.0, 2000, std::nullopt, 0.0);
    const double V = cfg_.V.value_or(c.spec.V);
    const StatReport s = mc_stationary_mean(c, V);
    Record r = from_stat("", c, s);
    r.a_or_x = V;
    r.statistic = s.std_error > 0.0 ? s.estimate / s.std_error : 0.0;
    const bool reject = std::abs(s.estimate) > 3.0 * s.std_error;
    r.reject = reject;
    write({r});
    err_ << "verify-mean: V = " << format_double(V) << ", discrepancy "
         << format_double(s.estimate) << " +- " << format_double(s.std_error)
         << (reject ? " (outside 3 SE)\n" : " (within 3 SE)\n");
    if (const int e = invalid_if_truncated(s.interior_failures)) return e;
    return reject ? kExitRejected : kExitOk;
  }

  int clt() {
    const McConfig c = mc(100.0, 1000, 2.0);
    bool normality = !cfg_.no_normality;
    const double dir = c.a ? *c.a : c.position() / c.t;
    if (normality && dir == c.spec.V) {
      err_ << "warning: direction equals the characteristic speed; skipping normality\n";
      normality = false;
    }
    const CltResult res = mc_clt(c, normality);
    Record slope = from_stat("var_slope", c, res.var_slope);
    slope.statistic = res.sigma2;
    std::vector<Record> records{slope};
    if (res.normality) {
      Record r = base("normality");
      r.param = c.spec.param;
      r.t = c.t;
      r.a_or_x = slope.a_or_x;
      r.statistic = res.normality->statistic;
      r.reject = res.normality->reject_at_1pct;
      r.n = res.normality->n;
      records.push_back(r);
    }
    write(records);
    err_ << "clt: Var/t = " << format_double(res.var_slope.estimate) << " +- "
         << format_double(res.var_slope.std_error) << " (sigma^2 = " << format_double(res.sigma2)
         << ")";
    if (res.normality)
      err_ << ", KS D = " << format_double(res.normality->statistic)
           << (res.normality->reject_at_1pct ? " rejected" : " not rejected");
    err_ << "\nnote: no finite-t error rate is known; the variance band is an engineering "
            "tolerance\n";
    return invalid_if_truncated(res.var_slope.interior_failures);
  }

  int cube_root() {
    const EquilibriumSpec sp = spec();
    const auto ts = parse_number_list(cfg_.t_list.empty() ? "50,100,200,400" : cfg_.t_list);
    const std::size_t reps = cfg_.replicas.value_or(1000);
    const ExponentFit fit = fit_variance_exponent(sp, ts, reps, seed(), cfg_.threads);
    std::vector<Record> records;
    std::vector<CurvePoint> curve;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      Record r = base("t" + format_double(ts[i]));
      r.param = sp.param;
      r.t = ts[i];
      r.a_or_x = sp.V;
      r.estimate = fit.variance[i].estimate;
      r.std_error = fit.variance[i].std_error;
      r.ci_lo = fit.variance[i].ci95.lo;
      r.ci_hi = fit.variance[i].ci95.hi;
      r.statistic = fit.var_over_t[i];
      r.n = fit.variance[i].n;
      records.push_back(r);
      curve.push_back({"log_var", std::log(ts[i]), std::log(fit.variance[i].estimate)});
      curve.push_back({"var_over_t", ts[i], fit.var_over_t[i]});
    }
    Record s = base("slope");
    s.param = sp.param;
    s.a_or_x = sp.V;
    s.estimate = fit.slope;
    s.ci_lo = fit.ci.lo;
    s.ci_hi = fit.ci.hi;
    s.statistic = fit.max_var_over_t;
    s.reject = !fit.strictly_decreasing;
    s.n = ts.size();
    records.push_back(s);
    write(records);
    write_curves(curve);
    err_ << "cube-root: slope " << format_double(fit.slope) << " [" << format_double(fit.ci.lo)
         << ", " << format_double(fit.ci.hi) << "], Var/t "
         << (fit.strictly_decreasing ? "strictly decreasing" : "NOT strictly decreasing")
         << "\nnote: no finite-t error rate is known; the slope band is an engineering "
            "tolerance\n";
    return invalid_if_truncated(fit.interior_failures);
  }

  RunConfig cfg_;
  std::ostream& out_;
  std::ostream& err_;
  OutputFormat format_;
  std::string run_id_;
};

std::string json_scalar(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return format_double(v.get<double>());
  throw ConfigError("config values must be scalars");
}

}  // namespace

std::vector<std::pair<std::string, std::string>> load_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  const std::string text = buf.str();
  std::vector<std::pair<std::string, std::string>> pairs;
  if (trim(text).starts_with("{")) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("malformed JSON config: " + std::string(e.what()));
    }
    if (!j.is_object()) throw ConfigError("JSON config must be an object");
    for (const auto& [k, v] : j.items()) pairs.emplace_back(k, json_scalar(v));
    return pairs;
  }
  std::istringstream lines(text);
  std::string line;
  int lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
    pairs.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return pairs;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"lpplab: last-passage percolation simulation and verification"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.add_option("subcommand", cfg.subcommand, "One of: simulate-lpp simulate-fluid "
                 "replay-figure1 verify-l2 verify-translation verify-mean clt cube-root shape")
      ->required()
      ->check(CLI::IsMember(kSubcommands));
  app.add_option("--model", cfg.model, "continuum | lattice")
      ->check(CLI::IsMember({"continuum", "lattice"}));
  app.add_option("--lambda", cfg.lambda, "Continuum equilibrium intensity");
  app.add_option("--rho", cfg.rho, "Lattice equilibrium parameter in (0,1)");
  app.add_option("--t", cfg.t, "Time horizon");
  app.add_option("--a", cfg.a, "Direction: evaluate at x = a t");
  app.add_option("--x", cfg.x, "Explicit evaluation point");
  app.add_option("--V", cfg.V, "Speed for verify-translation / verify-mean");
  app.add_option("--replicas", cfg.replicas, "Monte Carlo replicas (per side)");
  app.add_option("--seed", cfg.seed, "Master seed (default: $LPPLAB_SEED, else 1)");
  app.add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
  app.add_option("--format", cfg.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", cfg.out, "Output file (default: stdout)");
  app.add_option("--plot-out", cfg.plot_out, "Curve data file (curve,x,y)");
  app.add_option("--weights", cfg.weights, "Mark law: dirac:c | exp:rate | table:v1,..:p1,..");
  app.add_option("--n", cfg.n_list, "simulate-lpp box sizes, comma separated");
  app.add_option("--t-list", cfg.t_list, "cube-root times, comma separated");
  app.add_option("--gamma", cfg.gamma, "Shape constant for the continuum shape function");
  app.add_option("--width", cfg.width, "simulate-fluid window width");
  app.add_flag("--corrupt", cfg.corrupt, "verify-translation: drop the boundary correction");
  app.add_flag("--no-normality", cfg.no_normality, "clt: skip the normality test");
  app.add_option("--config", cfg.config, "key=value or JSON config file; flags override it");

  std::vector<std::string> argv;
  try {
    // Config entries go first so that explicit flags (parsed later, last
    // value wins) override them.
    std::vector<std::string> file_args;
    for (std::size_t i = 1; i < args.size(); ++i) {
      std::string path;
      if (args[i] == "--config" && i + 1 < args.size())
        path = args[i + 1];
      else if (args[i].starts_with("--config="))
        path = args[i].substr(9);
      if (path.empty()) continue;
      for (const auto& [k, v] : load_config_file(path)) {
        if (k == "config") throw ConfigError("nested config files are not supported");
        if (k == "subcommand") throw ConfigError("the subcommand must be given on the command line");
        file_args.push_back("--" + k + "=" + v);
      }
    }
    argv.push_back(args.empty() ? "lpplab" : args[0]);
    std::size_t first = 1;
    if (args.size() > 1 && !args[1].starts_with("-")) {
      argv.push_back(args[1]);
      first = 2;
    }
    argv.insert(argv.end(), file_args.begin(), file_args.end());
    argv.insert(argv.end(), args.begin() + static_cast<std::ptrdiff_t>(first), args.end());

    std::vector<const char*> cargv;
    for (const auto& s : argv) cargv.push_back(s.c_str());
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }

  if (!cfg.seed) {
    if (const char* env = std::getenv("LPPLAB_SEED")) {
      try {
        cfg.seed = std::stoull(env);
      } catch (const std::exception&) {
        err << "error: LPPLAB_SEED is not an unsigned integer\n";
        return kExitError;
      }
    }
  }

  try {
    Runner runner(cfg, out, err);
    return runner.dispatch();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace lpplab
