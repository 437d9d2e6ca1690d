#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "extrema/lfunc.hpp"
#include "extrema/parallel.hpp"
#include "extrema/resonator.hpp"

namespace extrema {

enum class HuntMethod { resonance, diophantine, theorem3 };

std::string to_string(HuntMethod method);

struct HuntReport {
  HuntMethod method = HuntMethod::resonance;
  double sigma = 0.0;
  double T = 0.0;
  double best_t = 0.0;
  /// |L| for resonance hunts, the prime-sum surrogate otherwise.
  double measured = 0.0;
  double predicted = 0.0;
  double delta_big = 0.0;
  std::string verdict;
  /// Derived constants in insertion order.
  std::vector<std::pair<std::string, double>> diagnostics;

  void add(std::string key, double value) { diagnostics.emplace_back(std::move(key), value); }
  /// Throws std::out_of_range if absent.
  double diag(const std::string& key) const;
};

struct ResonanceHuntOptions {
  /// Defaults to pi / log N.
  std::optional<double> grid_step;
  std::size_t top_k = 64;
  /// X = T^(dL + epsilon)
  double epsilon = 0.1;
  std::size_t term_budget = 1'000'000;
  SmoothedOptions smoothed{};
  Workers workers{};
};

/// Builds the resonator for (sigma, N), scans |R(t)|^2 over [T, 2T], and
/// evaluates |L| by the smoothed series at the top_k highest local peaks.
HuntReport hunt_resonance(const LFunctionSpec& spec, double sigma, double T, std::uint64_t N,
                          const ResonanceHuntOptions& opts = {});

/// Same with a prebuilt plan. A one-term plan samples top_k evenly spaced points.
HuntReport hunt_resonance(const LFunctionSpec& spec, const ResonatorPlan& plan, double T,
                          const ResonanceHuntOptions& opts = {});

struct DiophantineHuntOptions {
  /// Zero-density exponent, recorded only.
  double eta = 0.1;
  /// Searched block [T + (r-1) T^mu, T + r T^mu).
  int block = 2;
  std::uint64_t lambda_budget = 10'000'000;
  std::size_t refine_cells = 64;
  int refine_iters = 40;
  std::uint64_t max_points = 200'000'000;
  /// When set, |L| from the smoothed series at best_t is added to the
  /// diagnostics if it fits the smoothed term budget.
  bool smoothed_context = true;
  double epsilon = 0.1;
  Workers workers{};
};

/// Tent-weighted prime sum hunt at x = B log T using the approximation lemma
/// inside one block of length T^mu.
HuntReport hunt_diophantine(const LFunctionSpec& spec, double sigma, double T, double B, int M,
                            double theta, double mu, const DiophantineHuntOptions& opts = {});

struct Theorem3HuntOptions {
  /// Searched window [T, T + min(T, window_cap)).
  double window_cap = 1e7;
  /// Defaults to 1/(4 max lambda).
  std::optional<double> grid_step;
  std::size_t refine_cells = 64;
  int refine_iters = 40;
  std::uint64_t max_points = 200'000'000;
  Workers workers{};
};

/// Parameters of the sigma -> 1+ hunt at height T.
struct Theorem3Params {
  double lll = 0.0;  // log log log T
  int M = 1;
  double B = 0.5;
  double x = 0.0;
  double sigma = 1.0;
  std::vector<std::uint64_t> primes;
};
Theorem3Params theorem3_params(double T);

HuntReport hunt_theorem3(const LFunctionSpec& spec, double T, double theta,
                         const Theorem3HuntOptions& opts = {});

/// C + log(-log xi) + sum_{j <= terms} (log xi)^j / (j! j), for 0 < xi < 1.
double li_series(double xi, double C, int terms = 30);

}  // namespace extrema
