#include "extrema/resonator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <unordered_map>

#include "extrema/errors.hpp"
#include "extrema/primes.hpp"

namespace extrema {

namespace {

constexpr std::size_t kGridBlock = 4096;

bool on_line(double sigma) { return std::abs(sigma - 0.5) < 1e-12; }

void check_sigma(double sigma, const char* what) {
  if (!(sigma >= 0.5 && sigma < 1.0)) {
    throw RangeError(std::string(what) + ": sigma must lie in [1/2, 1)");
  }
}

bool better(const ResonatorTerm& x, const ResonatorTerm& y) {
  const double ax = std::abs(x.r);
  const double ay = std::abs(y.r);
  if (ax != ay) return ax > ay;
  return x.n < y.n;
}

}  // namespace

double WeightRecipe::weight(double p) const noexcept {
  if (p < support_lo || p > support_hi) return 0.0;
  if (c.has_value()) return std::pow(ell / p, sigma);
  return std::sqrt(ell) / (std::sqrt(p) * std::log(p));
}

WeightRecipe plan_weights(const LFunctionSpec& spec, double sigma, std::uint64_t N) {
  check_sigma(sigma, "plan_weights");
  if (N < 1000) throw RangeError("plan_weights: N must be >= 1000");
  WeightRecipe w;
  w.sigma = sigma;
  w.kappa = spec.kappa();
  w.m = spec.m();
  w.N = N;
  const double log_n = std::log(static_cast<double>(N));
  const double m = spec.m();
  if (on_line(sigma)) {
    w.sigma = 0.5;
    w.ell = log_n * std::log(log_n) / spec.kappa();
    if (!(w.ell > std::numbers::e)) {
      throw DegenerateWindow("resonator window degenerate: ell = " + format_double(w.ell) +
                             " is too small; increase N");
    }
    w.M_res = w.ell * std::log(w.ell);
    w.support_lo = w.ell;
  } else {
    const double c = std::pow(m * m * (3.0 - 2.0 * sigma) / (2.0 * sigma - 1.0), 1.0 / (2.0 * sigma));
    w.c = c;
    w.ell = (2.0 * sigma - 1.0) * std::pow(c, 2.0 * sigma - 1.0) * log_n / spec.kappa();
    if (!(w.ell > std::numbers::e)) {
      throw DegenerateWindow("resonator window degenerate: ell = " + format_double(w.ell) +
                             " is too small; increase N");
    }
    const double g = std::log(w.ell) / std::log(std::log(w.ell));
    w.M_res = w.ell * std::pow(g, 1.0 / (2.0 * sigma - 1.0));
    w.support_lo = c * w.ell;
  }
  w.support_hi = w.M_res;
  w.rankin_alpha = std::pow(std::log(w.ell), -3.0);
  if (!(w.support_lo < w.support_hi)) {
    throw DegenerateWindow("resonator window degenerate: [" + format_double(w.support_lo) + ", " +
                           format_double(w.support_hi) + "] is empty; increase N");
  }
  return w;
}

ResonanceConstant resonance_constant(double kappa, int m, double sigma) {
  check_sigma(sigma, "resonance_constant");
  if (!(kappa > 0.0)) throw RangeError("resonance_constant: kappa must be positive");
  if (m < 1) throw RangeError("resonance_constant: m must be >= 1");
  if (on_line(sigma)) return {std::sqrt(kappa), 0.5};
  const double cl = std::pow(kappa, sigma) * std::pow(static_cast<double>(m), 1.0 - 2.0 * sigma) *
                    std::pow(3.0 - 2.0 * sigma, 1.5 - sigma) / (2.0 * std::sqrt(2.0 * sigma - 1.0));
  return {cl, 1.0};
}

ResonanceConstant resonance_constant(const LFunctionSpec& spec, double sigma) {
  return resonance_constant(spec.kappa(), spec.m(), sigma);
}

double predicted_lower(double kappa, int m, double sigma, double T,
                       std::optional<double> theta_override) {
  if (!(T >= 100.0)) throw RangeError("predicted_lower: T must be >= 100");
  const ResonanceConstant k = resonance_constant(kappa, m, sigma);
  const double theta = theta_override.value_or(k.theta);
  const double log_t = std::log(T);
  return std::exp(k.C_L * std::pow(log_t, 1.0 - sigma) / std::pow(std::log(log_t), theta));
}

double predicted_lower(const LFunctionSpec& spec, double sigma, double T,
                       std::optional<double> theta_override) {
  return predicted_lower(spec.kappa(), spec.m(), sigma, T, theta_override);
}

// ---------------------------------------------------------------------------

ResonatorPlan ResonatorPlan::trivial(double sigma, std::uint64_t N) {
  ResonatorPlan plan;
  plan.recipe_.sigma = sigma;
  plan.recipe_.N = N;
  plan.N_ = N;
  plan.terms_.push_back(ResonatorTerm{});
  return plan;
}

double ResonatorPlan::sum_sq() const {
  CompensatedSum<double> acc;
  for (const auto& term : terms_) acc.add(std::norm(term.r));
  return acc.value();
}

std::optional<std::size_t> ResonatorPlan::find(std::uint64_t n) const {
  const auto it = std::lower_bound(terms_.begin(), terms_.end(), n,
                                   [](const ResonatorTerm& x, std::uint64_t v) { return x.n < v; });
  if (it == terms_.end() || it->n != n) return std::nullopt;
  return static_cast<std::size_t>(it - terms_.begin());
}

ResonatorPlan expand_weighted(const LFunctionSpec& spec, double sigma,
                              std::vector<std::uint64_t> primes,
                              const std::function<double(std::uint64_t)>& f, std::uint64_t N,
                              std::size_t term_budget) {
  if (term_budget < 1) throw RangeError("expand: term budget must be >= 1");
  if (N < 1) throw RangeError("expand: N must be >= 1");
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  if (primes.empty()) throw DegenerateWindow("resonator support is empty");
  for (std::uint64_t p : primes) {
    if (!is_prime(p)) throw RangeError("expand: support entry " + std::to_string(p) + " is not prime");
  }

  ResonatorPlan plan;
  plan.recipe_.sigma = sigma;
  plan.recipe_.kappa = spec.kappa();
  plan.recipe_.m = spec.m();
  plan.recipe_.N = N;
  plan.recipe_.support_lo = static_cast<double>(primes.front());
  plan.recipe_.support_hi = static_cast<double>(primes.back());
  plan.N_ = N;

  std::vector<double> fp;
  std::vector<Complex> ap;
  for (std::uint64_t p : primes) {
    if (p > N) break;
    const double w = f(p);
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw RangeError("expand: weight f(" + std::to_string(p) + ") must be finite and >= 0");
    }
    plan.primes_.push_back(p);
    fp.push_back(w);
    ap.push_back(coeff_prime_power(spec, p, 1));
  }

  // Min-heap on quality once the budget is reached.
  std::vector<ResonatorTerm> kept;
  std::uint64_t count = 0;
  auto offer = [&](const ResonatorTerm& term) {
    ++count;
    if (kept.size() < term_budget) {
      kept.push_back(term);
      if (kept.size() == term_budget) std::make_heap(kept.begin(), kept.end(), better);
      return;
    }
    if (better(term, kept.front())) {
      std::pop_heap(kept.begin(), kept.end(), better);
      kept.back() = term;
      std::push_heap(kept.begin(), kept.end(), better);
    }
  };

  struct Frame {
    std::size_t next;
    ResonatorTerm term;
  };
  std::vector<Frame> stack;
  offer(ResonatorTerm{});
  stack.push_back({0, ResonatorTerm{}});
  const std::size_t np = plan.primes_.size();
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next >= np) {
      stack.pop_back();
      continue;
    }
    const std::size_t i = top.next++;
    const std::uint64_t p = plan.primes_[i];
    if (top.term.n > N / p) {
      // Primes are ascending, so no later prime fits either.
      top.next = np;
      continue;
    }
    ResonatorTerm child;
    child.n = top.term.n * p;
    child.f = top.term.f * fp[i];
    child.a = top.term.a * ap[i];
    child.r = child.a * child.f;
    offer(child);
    stack.push_back({i + 1, child});
  }

  plan.enumerated_ = count;
  plan.truncated_ = count > kept.size();
  std::sort(kept.begin(), kept.end(),
            [](const ResonatorTerm& x, const ResonatorTerm& y) { return x.n < y.n; });
  plan.terms_ = std::move(kept);
  return plan;
}

ResonatorPlan expand(const LFunctionSpec& spec, const WeightRecipe& recipe, std::uint64_t N,
                     std::size_t term_budget) {
  const double hi = std::min(recipe.support_hi, static_cast<double>(N));
  auto primes = primes_between(recipe.support_lo, hi);
  if (primes.empty()) {
    throw DegenerateWindow("resonator support is empty: no primes in [" +
                           format_double(recipe.support_lo) + ", " + format_double(hi) + "]");
  }
  ResonatorPlan plan = expand_weighted(
      spec, recipe.sigma, std::move(primes),
      [&recipe](std::uint64_t p) { return recipe.weight(static_cast<double>(p)); }, N,
      term_budget);
  plan.recipe_ = recipe;
  plan.recipe_.N = N;
  return plan;
}

// ---------------------------------------------------------------------------

DiagonalRatio diagonal_ratio(const LFunctionSpec& spec, const ResonatorPlan& plan) {
  const double sigma = plan.sigma();
  const auto& terms = plan.terms();
  const auto& primes = plan.support_primes();

  std::unordered_map<std::uint64_t, Complex> ap;
  for (std::uint64_t p : primes) ap.emplace(p, coeff_prime_power(spec, p, 1));

  // Double sum over n in the plan and its divisors m in the plan, k = n/m.
  CompensatedSum<Complex> num;
  std::vector<std::uint64_t> factors;
  for (const ResonatorTerm& tn : terms) {
    factors.clear();
    std::uint64_t rest = tn.n;
    for (std::uint64_t p : primes) {
      if (rest == 1) break;
      if (rest % p == 0) {
        factors.push_back(p);
        rest /= p;
      }
    }
    const std::size_t w = factors.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << w); ++mask) {
      std::uint64_t k = 1;
      Complex ak{1.0, 0.0};
      for (std::size_t j = 0; j < w; ++j) {
        if (mask >> j & 1) {
          k *= factors[j];
          ak *= ap.at(factors[j]);
        }
      }
      const auto mi = plan.find(tn.n / k);
      if (!mi) continue;
      const Complex term = ak * terms[*mi].r * std::conj(tn.r) *
                           std::exp(-sigma * std::log(static_cast<double>(k)));
      num.add(term);
    }
  }

  // Factored form over coprime pairs (k, m) of plan members with mk <= N.
  CompensatedSum<double> fac;
  const std::uint64_t N = plan.N();
  for (const ResonatorTerm& tk : terms) {
    const double wk = tk.f * std::norm(tk.a) * std::exp(-sigma * std::log(static_cast<double>(tk.n)));
    CompensatedSum<double> inner;
    const std::uint64_t mmax = N / tk.n;
    for (const ResonatorTerm& tm : terms) {
      if (tm.n > mmax) break;
      if (std::gcd(tm.n, tk.n) != 1) continue;
      inner.add(tm.f * tm.f * std::norm(tm.a));
    }
    fac.add(wk * inner.value());
  }

  DiagonalRatio out;
  const double den = plan.sum_sq();
  const Complex nv = num.value();
  out.value = nv.real() / den;
  out.factored = fac.value() / den;
  out.imag_residue = std::abs(nv) > 0.0 ? std::abs(nv.imag()) / std::abs(nv) : 0.0;
  out.inexact = plan.truncated();
  return out;
}

double moment1(const ResonatorPlan& plan, double T, const SmoothingBump& phi) {
  if (!(T > 1.0)) throw RangeError("moment1: T must exceed 1");
  if (static_cast<double>(plan.N()) > std::pow(T, 0.95)) {
    throw ResonatorTooLong("resonator length N = " + std::to_string(plan.N()) +
                           " exceeds T^0.95 = " + format_double(std::pow(T, 0.95)));
  }
  return T * phi.hat0() * plan.sum_sq();
}

Complex resonator_value(const ResonatorPlan& plan, double t) {
  CompensatedSum<Complex> acc;
  for (const auto& term : plan.terms()) {
    const double ph = t * std::log(static_cast<double>(term.n));
    acc.add(term.r * Complex{std::cos(ph), -std::sin(ph)});
  }
  return acc.value();
}

std::vector<double> resonator_power_grid(const ResonatorPlan& plan, double t0, double step,
                                         std::size_t count, const Workers& workers) {
  std::vector<double> out(count);
  if (count == 0) return out;
  const auto& terms = plan.terms();
  std::vector<double> logs(terms.size());
  std::vector<double> rot_re(terms.size());
  std::vector<double> rot_im(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    logs[i] = std::log(static_cast<double>(terms[i].n));
    rot_re[i] = std::cos(step * logs[i]);
    rot_im[i] = -std::sin(step * logs[i]);
  }
  const std::size_t blocks = (count + kGridBlock - 1) / kGridBlock;
  for_each_index(blocks, workers, [&](std::size_t b) {
    constexpr long double two_pi = 2.0L * std::numbers::pi_v<long double>;
    const std::size_t first = b * kGridBlock;
    const std::size_t len = std::min(kGridBlock, count - first);
    const long double tb = static_cast<long double>(t0) +
                           static_cast<long double>(step) * static_cast<long double>(first);
    std::vector<double> re(len, 0.0);
    std::vector<double> im(len, 0.0);
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const auto ph = static_cast<double>(
          std::fmod(tb * std::log(static_cast<long double>(terms[i].n)), two_pi));
      const Complex z0 = terms[i].r * Complex{std::cos(ph), -std::sin(ph)};
      double zr = z0.real();
      double zi = z0.imag();
      const double wr = rot_re[i];
      const double wi = rot_im[i];
      for (std::size_t j = 0; j < len; ++j) {
        re[j] += zr;
        im[j] += zi;
        const double nr = zr * wr - zi * wi;
        zi = zr * wi + zi * wr;
        zr = nr;
      }
    }
    for (std::size_t j = 0; j < len; ++j) out[first + j] = re[j] * re[j] + im[j] * im[j];
  });
  return out;
}

}  // namespace extrema
