#include "extrema/hunter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "extrema/diophantine.hpp"
#include "extrema/envelope.hpp"
#include "extrema/errors.hpp"
#include "extrema/primes.hpp"

namespace extrema {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_height(double T) {
  if (!(T >= 100.0) || !std::isfinite(T)) throw RangeError("--t: T must be a finite value >= 100");
}

// sum_j delta_j cos(t log p_j - omega_j + theta), phases reduced in long double.
double phase_sum(const std::vector<std::uint64_t>& primes, const std::vector<double>& deltas,
                 const std::vector<double>& omegas, double t, double theta) {
  constexpr long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  CompensatedSum<double> acc;
  for (std::size_t j = 0; j < primes.size(); ++j) {
    const long double ph = static_cast<long double>(t) * std::log(static_cast<long double>(primes[j]));
    const auto reduced = static_cast<double>(std::fmod(ph, two_pi));
    acc.add(deltas[j] * std::cos(reduced - omegas[j] + theta));
  }
  return acc.value();
}

}  // namespace

std::string to_string(HuntMethod method) {
  switch (method) {
    case HuntMethod::resonance:
      return "resonance";
    case HuntMethod::diophantine:
      return "diophantine";
    case HuntMethod::theorem3:
      return "theorem3";
  }
  return "?";
}

double HuntReport::diag(const std::string& key) const {
  for (const auto& [k, v] : diagnostics) {
    if (k == key) return v;
  }
  throw std::out_of_range("no diagnostic '" + key + "'");
}

// ---------------------------------------------------------------------------
// Resonance

HuntReport hunt_resonance(const LFunctionSpec& spec, double sigma, double T, std::uint64_t N,
                          const ResonanceHuntOptions& opts) {
  check_height(T);
  if (static_cast<double>(N) > std::pow(T, 0.95)) {
    throw ResonatorTooLong("--n: resonator length N = " + std::to_string(N) +
                           " exceeds T^0.95 = " + format_double(std::pow(T, 0.95)));
  }
  const WeightRecipe recipe = plan_weights(spec, sigma, N);
  const ResonatorPlan plan = expand(spec, recipe, N, opts.term_budget);
  HuntReport report = hunt_resonance(spec, plan, T, opts);
  report.add("ell", recipe.ell);
  if (recipe.c) report.add("c", *recipe.c);
  report.add("M_res", recipe.M_res);
  report.add("support_lo", recipe.support_lo);
  report.add("support_hi", recipe.support_hi);
  report.add("wide_window", recipe.wide_window() ? 1.0 : 0.0);
  report.add("rankin_alpha", recipe.rankin_alpha);
  return report;
}

HuntReport hunt_resonance(const LFunctionSpec& spec, const ResonatorPlan& plan, double T,
                          const ResonanceHuntOptions& opts) {
  check_height(T);
  const double sigma = plan.sigma();
  if (!(sigma >= 0.5 && sigma < 1.0)) throw RangeError("--sigma: sigma must lie in [1/2, 1)");
  if (static_cast<double>(plan.N()) > std::pow(T, 0.95)) {
    throw ResonatorTooLong("--n: resonator length N = " + std::to_string(plan.N()) +
                           " exceeds T^0.95 = " + format_double(std::pow(T, 0.95)));
  }
  if (opts.top_k < 1) throw RangeError("--top-k: must be >= 1");
  const double max_step = std::numbers::pi / std::log(std::max<double>(2.0, static_cast<double>(plan.N())));
  const double step = opts.grid_step.value_or(max_step);
  if (!(step > 0.0) || step > max_step * (1.0 + 1e-12)) {
    throw RangeError("--grid-step: must lie in (0, pi/log N = " + format_double(max_step) + "]");
  }

  std::vector<double> candidates;
  std::size_t grid_points = 0;
  if (plan.terms().size() == 1) {
    const std::size_t k = opts.top_k;
    for (std::size_t j = 0; j < k; ++j) {
      candidates.push_back(k == 1 ? T : T + T * static_cast<double>(j) / static_cast<double>(k - 1));
    }
  } else {
    const auto count = static_cast<std::size_t>(std::floor(T / step)) + 1;
    grid_points = count;
    const std::vector<double> power = resonator_power_grid(plan, T, step, count, opts.workers);
    std::vector<std::size_t> peaks;
    for (std::size_t i = 0; i < count; ++i) {
      const bool left = i == 0 || power[i] >= power[i - 1];
      const bool right = i + 1 == count || power[i] >= power[i + 1];
      if (left && right) peaks.push_back(i);
    }
    const std::size_t k = std::min(opts.top_k, peaks.size());
    std::partial_sort(peaks.begin(), peaks.begin() + static_cast<std::ptrdiff_t>(k), peaks.end(),
                      [&](std::size_t a, std::size_t b) {
                        if (power[a] != power[b]) return power[a] > power[b];
                        return a < b;
                      });
    for (std::size_t j = 0; j < k; ++j) {
      candidates.push_back(std::min(2.0 * T, T + step * static_cast<double>(peaks[j])));
    }
  }

  const SmoothingWindow window = SmoothingWindow::for_scale(std::pow(T, spec.degree() + opts.epsilon));
  std::vector<double> values(candidates.size());
  for_each_index(candidates.size(), opts.workers, [&](std::size_t i) {
    values[i] = std::abs(smoothed_value(spec, sigma, candidates[i], window, opts.smoothed));
  });

  HuntReport report;
  report.method = HuntMethod::resonance;
  report.sigma = sigma;
  report.T = T;
  report.best_t = candidates.front();
  report.measured = values.front();
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    if (values[i] > report.measured ||
        (values[i] == report.measured && candidates[i] < report.best_t)) {
      report.measured = values[i];
      report.best_t = candidates[i];
    }
  }
  report.predicted = predicted_lower(spec, sigma, T);
  report.verdict = report.measured >= report.predicted ? "above-envelope" : "below-envelope";

  const ResonanceConstant k = resonance_constant(spec, sigma);
  report.add("N", static_cast<double>(plan.N()));
  report.add("plan_terms", static_cast<double>(plan.terms().size()));
  report.add("support_primes", static_cast<double>(plan.support_primes().size()));
  report.add("truncated", plan.truncated() ? 1.0 : 0.0);
  report.add("grid_step", step);
  report.add("grid_points", static_cast<double>(grid_points));
  report.add("candidates", static_cast<double>(candidates.size()));
  report.add("X", window.X);
  report.add("C_L", k.C_L);
  report.add("theta", k.theta);
  return report;
}

// ---------------------------------------------------------------------------
// Diophantine

HuntReport hunt_diophantine(const LFunctionSpec& spec, double sigma, double T, double B, int M,
                            double theta, double mu, const DiophantineHuntOptions& opts) {
  check_height(T);
  if (!(sigma >= 0.5 && sigma < 1.0)) throw RangeError("--sigma: sigma must lie in [1/2, 1)");
  if (!(B > 0.0)) throw RangeError("--b: B must be positive");
  if (M < 1) throw RangeError("--m: M must be >= 1");
  if (!(mu > 0.0 && mu <= 1.0)) throw RangeError("--mu: mu must lie in (0, 1]");
  if (!(opts.eta > 0.0)) throw RangeError("--eta: eta must be positive");
  if (opts.block < 1) throw RangeError("block index must be >= 1");
  if (!std::isfinite(theta)) throw RangeError("--theta: must be finite");

  const double log_t = std::log(T);
  const double x = B * log_t;
  if (!(x > 2.0)) throw RangeError("--b: x = B log T = " + format_double(x) + " must exceed 2");

  std::vector<std::uint64_t> primes;
  std::vector<double> deltas;
  std::vector<double> omegas;
  for (std::uint64_t p : primes_between(x / std::numbers::e, x * std::numbers::e)) {
    const auto pd = static_cast<double>(p);
    const double dist = std::abs(std::log(pd / x));
    if (dist > 1.0) continue;
    const Complex a = coeff_prime_power(spec, p, 1);
    primes.push_back(p);
    deltas.push_back(std::abs(a) * std::pow(pd, -sigma) * (1.0 - dist));
    omegas.push_back(a == Complex{0.0, 0.0} ? 0.0 : std::arg(a));
  }
  if (primes.empty()) {
    throw RangeError("--b: prime window [x/e, e x] around x = " + format_double(x) + " is empty");
  }
  const std::size_t n = primes.size();

  const double block_len = std::pow(T, mu);
  const double T1 = T + (opts.block - 1) * block_len;
  const double T2 = T1 + block_len;

  double log_lambda = 0.0;
  bool exact = false;
  if (std::pow(2.0 * M + 1.0, static_cast<double>(n)) <= static_cast<double>(opts.lambda_budget)) {
    log_lambda = std::log(lambda_exact(primes, M, opts.lambda_budget).lambda);
    exact = true;
  } else {
    log_lambda = log_lambda_analytic(primes, M);
  }
  // M^n / (4 pi Lambda (T2 - T1)) <= 1/100
  const double log_condition = static_cast<double>(n) * std::log(static_cast<double>(M)) -
                               std::log(4.0 * std::numbers::pi) - log_lambda - std::log(T2 - T1);
  const bool condition_ok = log_condition <= std::log(0.01);

  std::vector<double> betas(n);
  for (std::size_t j = 0; j < n; ++j) betas[j] = (omegas[j] - theta) / kTwoPi;
  const ChenInstance inst = ChenInstance::from_primes(primes, betas, deltas, M, T1, T2);
  SearchOptions so;
  so.max_points = opts.max_points;
  so.refine_cells = opts.refine_cells;
  so.workers = opts.workers;
  const SearchResult found = search_t(inst, 1.0 / (4.0 * inst.max_lambda()), opts.refine_iters, so);

  const TentSum tent = tent_sum(spec, sigma, found.t, x, theta);

  HuntReport report;
  report.method = HuntMethod::diophantine;
  report.sigma = sigma;
  report.T = T;
  report.best_t = found.t;
  report.measured = tent.value;
  report.delta_big = tent.delta_big;
  report.predicted = 0.505 * tent.delta_big;
  report.verdict = condition_ok ? "condition-ok" : "condition-failed";

  const double lambda = std::exp(log_lambda);
  report.add("x", x);
  report.add("B", B);
  report.add("M", M);
  report.add("n", static_cast<double>(n));
  report.add("p_min", static_cast<double>(primes.front()));
  report.add("p_max", static_cast<double>(primes.back()));
  report.add("mu", mu);
  report.add("eta", opts.eta);
  report.add("block", opts.block);
  report.add("T1", T1);
  report.add("T2", T2);
  report.add("Lambda", lambda);
  report.add("log_Lambda", log_lambda);
  report.add("Lambda_exact", exact ? 1.0 : 0.0);
  report.add("log_condition", log_condition);
  report.add("objective", found.value);
  report.add("chen_bound", lambda > 0.0 ? chen_bound(inst, lambda)
                                        : std::numeric_limits<double>::infinity());
  report.add("clears_0.51", tent.value >= 0.51 * tent.delta_big ? 1.0 : 0.0);
  report.add("cos_chain_floor", tent.delta_big - 2.0 * std::numbers::pi * std::numbers::pi * found.value);
  EnvelopeCurve thm2;
  thm2.kind = EnvelopeKind::lower_thm2;
  thm2.kappa = spec.kappa();
  thm2.eta = opts.eta;
  thm2.sigma = sigma;
  report.add("lower_thm2", envelope(thm2, T));
  report.add("c_kappa_eta", thm2_constant(spec.kappa(), opts.eta, sigma));
  const double log_t0 = std::log(found.t);
  report.add("err_shift", 2.0 * x / (log_t0 * log_t0));
  report.add("err_higher_powers",
             std::pow(x, 2.0 * spec.axiom_delta() - 2.0 * sigma + 0.5) * std::log(x));
  if (opts.smoothed_context) {
    try {
      const SmoothingWindow window =
          SmoothingWindow::for_scale(std::pow(T, spec.degree() + opts.epsilon));
      report.add("smoothed_abs_L", std::abs(smoothed_value(spec, sigma, found.t, window)));
    } catch (const BudgetExceeded&) {
      // Too high for the series budget; the prime sum stands alone.
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// sigma -> 1+

Theorem3Params theorem3_params(double T) {
  if (!(T >= 1e6) || !std::isfinite(T)) throw RangeError("--t: T must be a finite number >= 1e6");
  Theorem3Params p;
  const double log_t = std::log(T);
  const double ll = std::log(log_t);
  if (!(ll > 1.0)) throw RangeError("--t: log log log T must be positive");
  p.lll = std::log(ll);
  p.M = static_cast<int>(std::ceil(std::sqrt(p.lll)));
  p.B = 1.0 / (2.0 * p.M);
  p.x = log_t / (2.0 * std::sqrt(p.lll));
  if (!(p.x > 2.0)) throw RangeError("--t: x = " + format_double(p.x) + " must exceed 2");
  p.sigma = 1.0 + std::log(2.0) / std::log(p.x);
  p.primes = primes_up_to(static_cast<std::uint64_t>(std::floor(p.x)));
  return p;
}

HuntReport hunt_theorem3(const LFunctionSpec& spec, double T, double theta,
                         const Theorem3HuntOptions& opts) {
  const Theorem3Params par = theorem3_params(T);
  if (!std::isfinite(theta)) throw RangeError("--theta: must be finite");
  if (!(opts.window_cap > 0.0)) throw RangeError("window cap must be positive");

  const std::size_t n = par.primes.size();
  std::vector<double> deltas(n);
  std::vector<double> omegas(n);
  std::vector<double> betas(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Complex a = coeff_prime_power(spec, par.primes[j], 1);
    deltas[j] = std::abs(a) * std::pow(static_cast<double>(par.primes[j]), -par.sigma);
    omegas[j] = a == Complex{0.0, 0.0} ? 0.0 : std::arg(a);
    betas[j] = (omegas[j] - theta) / kTwoPi;
  }
  const double length = std::min(T, opts.window_cap);
  const ChenInstance inst = ChenInstance::from_primes(par.primes, betas, deltas, par.M, T, T + length);
  const double max_step = 1.0 / (4.0 * inst.max_lambda());
  const double step = opts.grid_step.value_or(max_step);
  SearchOptions so;
  so.max_points = opts.max_points;
  so.refine_cells = opts.refine_cells;
  so.workers = opts.workers;
  const SearchResult found = search_t(inst, step, opts.refine_iters, so);

  HuntReport report;
  report.method = HuntMethod::theorem3;
  report.sigma = par.sigma;
  report.T = T;
  report.best_t = found.t;
  report.measured = phase_sum(par.primes, deltas, omegas, found.t, theta);
  report.delta_big = inst.delta_big();
  report.predicted = spec.kappa() * par.lll;
  report.verdict = report.measured >= report.predicted ? "above-envelope" : "below-envelope";

  report.add("lll", par.lll);
  report.add("M", par.M);
  report.add("B", par.B);
  report.add("x", par.x);
  report.add("n", static_cast<double>(n));
  report.add("window", length);
  report.add("grid_step", step);
  report.add("objective", found.value);
  report.add("tail_bound", std::pow(par.x, 1.0 - par.sigma) / ((par.sigma - 1.0) * std::log(par.x)));
  return report;
}

double li_series(double xi, double C, int terms) {
  if (!(xi > 0.0 && xi < 1.0)) throw RangeError("li_series: xi must lie in (0, 1)");
  if (terms < 0) throw RangeError("li_series: terms must be >= 0");
  const double l = std::log(xi);
  double power = 1.0;
  double fact = 1.0;
  double sum = 0.0;
  for (int j = 1; j <= terms; ++j) {
    power *= l;
    fact *= j;
    sum += power / (fact * j);
  }
  return C + std::log(-l) + sum;
}

}  // namespace extrema
