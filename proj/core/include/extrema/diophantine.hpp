#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "extrema/parallel.hpp"

namespace extrema {

/// Weighted inhomogeneous approximation problem
///   inf_{t in [T1, T2)} sum_j delta_j ||lambda_j t - beta_j||^2
/// with box bound M on the integer relations.
class ChenInstance {
 public:
  ChenInstance(std::vector<double> lambdas, std::vector<double> betas, std::vector<double> deltas,
               int M, double T1, double T2);

  /// lambda_j = log p_j / (2 pi) for distinct primes.
  static ChenInstance from_primes(const std::vector<std::uint64_t>& primes,
                                  std::vector<double> betas, std::vector<double> deltas, int M,
                                  double T1, double T2);

  const std::vector<double>& lambdas() const noexcept { return lambdas_; }
  const std::vector<double>& betas() const noexcept { return betas_; }
  const std::vector<double>& deltas() const noexcept { return deltas_; }
  int M() const noexcept { return M_; }
  double T1() const noexcept { return T1_; }
  double T2() const noexcept { return T2_; }
  std::size_t n() const noexcept { return lambdas_.size(); }
  /// Delta = sum delta_j
  double delta_big() const noexcept { return delta_big_; }
  double max_lambda() const noexcept;

 private:
  std::vector<double> lambdas_;
  std::vector<double> betas_;
  std::vector<double> deltas_;
  int M_;
  double T1_;
  double T2_;
  double delta_big_ = 0.0;
};

/// (Delta/4) sin^2(pi/(2(M+1))) + Delta M^n / (4 pi Lambda (T2 - T1)).
/// The second term is formed in log space; +inf if it does not fit a double.
double chen_bound(const ChenInstance& inst, double Lambda);

struct LinearFormMin {
  /// min |sum u_j log p_j| / (2 pi) over 0 < max|u_j| <= M
  double lambda = 0.0;
  /// A minimising vector, first nonzero entry positive.
  std::vector<int> u;
};

/// Exact minimum by enumeration of all (2M+1)^n vectors. Candidates are
/// screened in floating point and compared exactly as rationals.
LinearFormMin lambda_exact(const std::vector<std::uint64_t>& primes, int M,
                           std::uint64_t budget = 100'000'000);

/// log(1 + P^-M) / (2 pi), P = prod p_j. A lower bound for lambda_exact.
double lambda_analytic(const std::vector<std::uint64_t>& primes, int M);

/// Natural log of lambda_analytic, finite even when the value underflows.
double log_lambda_analytic(const std::vector<std::uint64_t>& primes, int M);

/// sum_j delta_j ||lambda_j t - beta_j||^2
double objective(const ChenInstance& inst, double t);

struct SearchOptions {
  std::uint64_t max_points = 200'000'000;
  /// Number of best grid cells handed to the refinement.
  std::size_t refine_cells = 1;
  Workers workers{};
};

struct SearchResult {
  double t = 0.0;
  double value = 0.0;
  std::uint64_t evaluations = 0;
};

/// Grid scan of [T1, T2) at grid_step, then golden-section refinement inside
/// the best cell (or the refine_cells best cells). grid_step must not exceed
/// 1/(4 max lambda_j). Ties go to the smaller t; the result does not depend
/// on the worker count.
SearchResult search_t(const ChenInstance& inst, double grid_step, int refine_iters,
                      const SearchOptions& opts = {});

/// 1 - 2 pi^2 ||y / (2 pi)||^2, a lower bound for cos y.
double cos_floor(double y) noexcept;

struct ChenTrial {
  std::vector<std::uint64_t> primes;
  int M = 1;
  double lambda = 0.0;
  double bound = 0.0;
  double value = 0.0;
  double t = 0.0;
  bool pass = false;
};

/// One randomised check of the approximation bound: beta, delta uniform in
/// (0, 1], T1 uniform in [0, 1000), window length
/// window_factor * M^n / (4 pi lambda_exact). Passes when the search value
/// does not exceed chen_bound + 1e-9.
ChenTrial chen_trial(const std::vector<std::uint64_t>& primes, int M, double window_factor,
                     std::mt19937_64& rng, const SearchOptions& opts = {});

}  // namespace extrema
