#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "extrema/diophantine.hpp"
#include "extrema/envelope.hpp"
#include "extrema/errors.hpp"
#include "extrema/hunter.hpp"
#include "extrema/lfunc.hpp"
#include "extrema/numeric.hpp"
#include "extrema/primes.hpp"
#include "extrema/report_io.hpp"
#include "extrema/resonator.hpp"
#include "extrema/spec_io.hpp"

namespace extrema::cli {

namespace {

// Bad flag values or unreadable inputs: exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string out;
  unsigned threads = 0;
  std::uint64_t seed = 0;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--out", c.out, "Output CSV path (default: stdout)");
  sub->add_option("--threads", c.threads, "Worker threads (default: EXTREMA_THREADS or 1)")
      ->check(CLI::Range(1u, 256u));
  sub->add_option("--seed", c.seed, "Random seed")->capture_default_str();
}

Workers workers_for(const Common& c) { return c.threads ? Workers{c.threads} : Workers::from_env(); }

const CLI::Validator kStripSigma(
    [](std::string& s) -> std::string {
      try {
        const double v = parse_double(s, "sigma");
        if (v >= 0.5 && v < 1.0) return {};
      } catch (const Error&) {
      }
      return "sigma must lie in [0.5, 1)";
    },
    "in [0.5, 1)");

const CLI::Validator kHeight(
    [](std::string& s) -> std::string {
      try {
        const double v = parse_double(s, "T");
        if (v >= 100.0 && std::isfinite(v)) return {};
      } catch (const Error&) {
      }
      return "T must be a finite number >= 100";
    },
    ">= 100");

LFunctionSpec spec_from(const std::string& path) {
  try {
    return load_spec(path);
  } catch (const Error& e) {
    throw UsageError(std::string("--spec: ") + e.what());
  }
}

std::uint64_t count_flag(const std::string& text, const char* flag) {
  try {
    return parse_count(text, flag);
  } catch (const ParseError& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

void emit(const Common& c, std::ostream& out, const std::string& text) {
  if (c.out.empty()) {
    out << text;
  } else {
    write_file(c.out, text);
  }
}

void emit_report(const Common& c, std::ostream& out, const HuntReport& report) {
  std::ostringstream csv;
  write_report_csv(csv, {report});
  emit(c, out, csv.str());
  if (!c.out.empty()) {
    std::ostringstream diag;
    write_diagnostics(diag, report);
    write_file(c.out + ".diag", diag.str());
  }
}

void dump_plan(const std::string& path, const ResonatorPlan& plan, const LFunctionSpec& spec) {
  if (path.empty()) return;
  std::ostringstream csv;
  write_plan_csv(csv, plan);
  write_file(path, csv.str());
  std::ostringstream recipe;
  write_recipe(recipe, plan.recipe(), resonance_constant(spec, plan.sigma()));
  write_file(path + ".recipe", recipe.str());
}

// "lo:hi:log10" gives one sample per decade; "lo:hi:k" gives k log-spaced samples.
std::vector<double> parse_t_grid(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ':')) parts.push_back(part);
  if (parts.size() != 3) throw UsageError("--t-grid: expected lo:hi:log10 or lo:hi:count");
  double lo = 0.0;
  double hi = 0.0;
  try {
    lo = parse_double(parts[0], "--t-grid lower end");
    hi = parse_double(parts[1], "--t-grid upper end");
  } catch (const ParseError& e) {
    throw UsageError(std::string("--t-grid: ") + e.what());
  }
  if (!(lo >= 100.0 && hi >= lo && std::isfinite(hi))) {
    throw UsageError("--t-grid: need 100 <= lo <= hi");
  }
  std::vector<double> ts;
  if (parts[2] == "log10") {
    const double decades = std::log10(hi / lo);
    const auto steps = static_cast<long>(std::floor(decades + 1e-9));
    for (long i = 0; i <= steps; ++i) ts.push_back(lo * std::pow(10.0, static_cast<double>(i)));
    return ts;
  }
  const std::uint64_t k = count_flag(parts[2], "--t-grid");
  if (k < 1 || k > 1'000'000) throw UsageError("--t-grid: sample count must lie in [1, 1e6]");
  if (k == 1) return {lo};
  for (std::uint64_t i = 0; i < k; ++i) {
    const double f = static_cast<double>(i) / static_cast<double>(k - 1);
    ts.push_back(lo * std::pow(hi / lo, f));
  }
  return ts;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Large values of L-functions: resonance and Diophantine hunts"};
  app.name("extrema");
  app.require_subcommand(1);

  Common common;
  std::string spec_path;
  double sigma = 0.75;
  double T = 0.0;
  std::string n_text;
  double B = 0.0;
  int M = 4;
  double theta = 0.0;
  double eta = 0.1;
  double mu = 0.05;
  std::optional<double> grid_step;
  std::size_t top_k = 64;
  std::string budget_text;
  std::string plan_out;
  std::vector<std::uint64_t> primes;
  std::size_t trials = 50;
  double window_factor = 200.0;
  std::string kind_text;
  double kappa = 1.0;
  double c_const = 1.0;
  std::optional<double> theta_override;
  double x = 0.0;
  int power = 2;
  std::string t_grid;

  auto* hr = app.add_subcommand("hunt-resonance", "Resonator-guided search for large |L| on [T, 2T]");
  hr->add_option("--spec", spec_path, "L-function spec file")->required();
  hr->add_option("--sigma", sigma, "Real part sigma in [1/2, 1)")->required()->check(kStripSigma);
  hr->add_option("--t", T, "Height T")->required()->check(kHeight);
  hr->add_option("--n", n_text, "Resonator length N")->required();
  hr->add_option("--grid-step", grid_step, "Scan step for |R|^2 (default pi/log N)")
      ->check(CLI::PositiveNumber);
  hr->add_option("--top-k", top_k, "Peaks evaluated")->capture_default_str()->check(CLI::Range(1, 100000));
  hr->add_option("--budget", budget_text, "Resonator term budget (default 1e6)");
  hr->add_option("--plan-out", plan_out, "Write the plan CSV here and the recipe next to it");
  add_common(hr, common);

  auto* hd = app.add_subcommand("hunt-dio", "Diophantine hunt with the tent-weighted prime sum");
  hd->add_option("--spec", spec_path, "L-function spec file")->required();
  hd->add_option("--sigma", sigma, "Real part sigma in [1/2, 1)")->required()->check(kStripSigma);
  hd->add_option("--t", T, "Height T")->required()->check(kHeight);
  hd->add_option("--b", B, "x = B log T")->required()->check(CLI::PositiveNumber);
  hd->add_option("--m", M, "Box bound M")->capture_default_str()->check(CLI::Range(1, 64));
  hd->add_option("--theta", theta, "Target phase")->capture_default_str();
  hd->add_option("--mu", mu, "Block exponent: block length T^mu")->capture_default_str()
      ->check(CLI::Range(1e-9, 1.0));
  hd->add_option("--eta", eta, "Zero-density exponent (recorded)")->capture_default_str()
      ->check(CLI::PositiveNumber);
  hd->add_option("--budget", budget_text, "Enumeration budget for the exact linear-form minimum");
  add_common(hd, common);

  auto* h3 = app.add_subcommand("hunt-thm3", "Hunt near sigma = 1 + log 2 / log x");
  h3->add_option("--spec", spec_path, "L-function spec file")->required();
  h3->add_option("--t", T, "Height T")->required()->check(kHeight);
  h3->add_option("--theta", theta, "Target phase")->capture_default_str();
  h3->add_option("--grid-step", grid_step, "Scan step (default 1/(4 max lambda))")
      ->check(CLI::PositiveNumber);
  h3->add_option("--budget", budget_text, "Window cap (default 1e7)");
  add_common(h3, common);

  auto* cv = app.add_subcommand("chen-verify", "Randomised check of the approximation bound");
  cv->add_option("--primes", primes, "Comma-separated distinct primes")->required()->delimiter(',');
  cv->add_option("--m", M, "Box bound M")->required()->check(CLI::Range(1, 64));
  cv->add_option("--trials", trials, "Number of instances")->capture_default_str()
      ->check(CLI::Range(1, 1000000));
  cv->add_option("--window-factor", window_factor, "Window length in units of M^n/(4 pi Lambda)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cv->add_option("--budget", budget_text, "Grid point budget per search");
  add_common(cv, common);

  auto* rr = app.add_subcommand("resonator-ratio", "Diagonal ratio of the resonator in both forms");
  rr->add_option("--spec", spec_path, "L-function spec file")->required();
  rr->add_option("--sigma", sigma, "Real part sigma in [1/2, 1)")->required()->check(kStripSigma);
  rr->add_option("--n", n_text, "Resonator length N")->required();
  rr->add_option("--budget", budget_text, "Resonator term budget (default 1e6)");
  rr->add_option("--plan-out", plan_out, "Write the plan CSV here and the recipe next to it");
  add_common(rr, common);

  auto* ps = app.add_subcommand("prime-stats", "sum over p <= x of |a(p)|^power");
  ps->add_option("--spec", spec_path, "L-function spec file")->required();
  ps->add_option("--x", x, "Upper limit x >= 2")->required()->check(CLI::Range(2.0, 1.6e10));
  ps->add_option("--power", power, "1 or 2")->capture_default_str()->check(CLI::IsMember({1, 2}));
  add_common(ps, common);

  auto* ev = app.add_subcommand("envelope", "Sample a closed-form envelope curve");
  ev->add_option("--kind", kind_text, "lower-thm1 | lower-thm2 | upper-prop1-strip | upper-prop1-line1")
      ->required()
      ->check(CLI::IsMember({"lower-thm1", "lower-thm2", "upper-prop1-strip", "upper-prop1-line1"}));
  ev->add_option("--kappa", kappa, "kappa")->capture_default_str()->check(CLI::PositiveNumber);
  ev->add_option("--m", M, "Euler degree m")->check(CLI::Range(1, 64));
  ev->add_option("--eta", eta, "eta")->capture_default_str()->check(CLI::PositiveNumber);
  ev->add_option("--sigma", sigma, "sigma")->capture_default_str();
  ev->add_option("--c", c_const, "Strip upper-bound constant")->capture_default_str()
      ->check(CLI::PositiveNumber);
  ev->add_option("--theta", theta_override, "Replace theta(sigma) in lower-thm1");
  ev->add_option("--t-grid", t_grid, "lo:hi:log10 or lo:hi:count")->required();
  add_common(ev, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    const Workers workers = workers_for(common);
    const auto budget_or = [&](std::uint64_t fallback) {
      return budget_text.empty() ? fallback : count_flag(budget_text, "--budget");
    };

    if (*hr) {
      const LFunctionSpec spec = spec_from(spec_path);
      const std::uint64_t N = count_flag(n_text, "--n");
      if (N < 1000) throw UsageError("--n: N must be >= 1000");
      ResonanceHuntOptions opts;
      opts.grid_step = grid_step;
      opts.top_k = top_k;
      opts.term_budget = budget_or(1'000'000);
      opts.workers = workers;
      if (opts.term_budget < 1) throw UsageError("--budget: must be >= 1");
      if (static_cast<double>(N) > std::pow(T, 0.95)) {
        throw UsageError("--n: N = " + std::to_string(N) + " exceeds T^0.95 = " +
                         format_double(std::pow(T, 0.95)));
      }
      const WeightRecipe recipe = plan_weights(spec, sigma, N);
      const ResonatorPlan plan = expand(spec, recipe, N, opts.term_budget);
      dump_plan(plan_out, plan, spec);
      const HuntReport report = hunt_resonance(spec, sigma, T, N, opts);
      emit_report(common, out, report);
      return 0;
    }

    if (*hd) {
      const LFunctionSpec spec = spec_from(spec_path);
      DiophantineHuntOptions opts;
      opts.eta = eta;
      opts.lambda_budget = budget_or(10'000'000);
      opts.workers = workers;
      emit_report(common, out, hunt_diophantine(spec, sigma, T, B, M, theta, mu, opts));
      return 0;
    }

    if (*h3) {
      const LFunctionSpec spec = spec_from(spec_path);
      Theorem3HuntOptions opts;
      opts.grid_step = grid_step;
      opts.window_cap = static_cast<double>(budget_or(10'000'000));
      if (!(opts.window_cap > 0.0)) throw UsageError("--budget: window cap must be positive");
      opts.workers = workers;
      emit_report(common, out, hunt_theorem3(spec, T, theta, opts));
      return 0;
    }

    if (*cv) {
      for (std::uint64_t p : primes) {
        if (!is_prime(p)) throw UsageError("--primes: " + std::to_string(p) + " is not prime");
      }
      SearchOptions so;
      so.workers = workers;
      so.max_points = budget_or(200'000'000);
      std::mt19937_64 rng(common.seed);
      std::ostringstream csv;
      csv << "trial,M,lambda,bound,value,t,pass\n";
      std::size_t passed = 0;
      for (std::size_t i = 0; i < trials; ++i) {
        const ChenTrial tr = chen_trial(primes, M, window_factor, rng, so);
        passed += tr.pass ? 1 : 0;
        csv << i << ',' << tr.M << ',' << format_double(tr.lambda) << ',' << format_double(tr.bound)
            << ',' << format_double(tr.value) << ',' << format_double(tr.t) << ','
            << (tr.pass ? "pass" : "FAIL") << '\n';
      }
      emit(common, out, csv.str());
      (common.out.empty() ? err : out) << "pass count " << passed << '/' << trials << '\n';
      return passed == trials ? 0 : 1;
    }

    if (*rr) {
      const LFunctionSpec spec = spec_from(spec_path);
      const std::uint64_t N = count_flag(n_text, "--n");
      if (N < 1000) throw UsageError("--n: N must be >= 1000");
      const std::uint64_t budget = budget_or(1'000'000);
      if (budget < 1) throw UsageError("--budget: must be >= 1");
      const WeightRecipe recipe = plan_weights(spec, sigma, N);
      const ResonatorPlan plan = expand(spec, recipe, N, budget);
      dump_plan(plan_out, plan, spec);
      const DiagonalRatio dr = diagonal_ratio(spec, plan);
      const ResonanceConstant k = resonance_constant(spec, sigma);
      const double log_n = std::log(static_cast<double>(N));
      const double scale = std::pow(log_n, 1.0 - sigma) / std::pow(std::log(log_n), k.theta);
      std::ostringstream csv;
      csv << "sigma,N,terms,truncated,ratio,factored,growth,C_L\n"
          << format_double(sigma) << ',' << N << ',' << plan.terms().size() << ','
          << (dr.inexact ? 1 : 0) << ',' << format_double(dr.value) << ','
          << format_double(dr.factored) << ',' << format_double(std::log(dr.value) / scale) << ','
          << format_double(k.C_L) << '\n';
      emit(common, out, csv.str());
      return 0;
    }

    if (*ps) {
      const LFunctionSpec spec = spec_from(spec_path);
      const double sum = prime_sum_stats(spec, x, power);
      const double ref = x / std::log(x);
      std::ostringstream csv;
      csv << "x,power,sum,x_over_log_x,ratio\n"
          << format_double(x) << ',' << power << ',' << format_double(sum) << ','
          << format_double(ref) << ',' << format_double(sum / ref) << '\n';
      emit(common, out, csv.str());
      return 0;
    }

    if (*ev) {
      EnvelopeCurve curve;
      curve.kind = parse_envelope_kind(kind_text);
      curve.kappa = kappa;
      curve.m = M;
      curve.eta = eta;
      curve.sigma = sigma;
      curve.c = c_const;
      curve.theta = theta_override;
      std::ostringstream csv;
      csv << "kind,T,value\n";
      for (double t : parse_t_grid(t_grid)) {
        double v = 0.0;
        try {
          v = envelope(curve, t);
        } catch (const RangeError& e) {
          throw UsageError(std::string("--sigma: ") + e.what());
        }
        csv << kind_text << ',' << format_double(t) << ',' << format_double(v) << '\n';
      }
      emit(common, out, csv.str());
      return 0;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const DegenerateWindow& e) {
    err << "error: --n: " << e.what() << '\n';
    return 2;
  } catch (const ResonatorTooLong& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const InsufficientEulerData& e) {
    err << "error: --spec: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace extrema::cli
