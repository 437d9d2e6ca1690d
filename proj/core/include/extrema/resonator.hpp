#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "extrema/bump.hpp"
#include "extrema/lfunc.hpp"
#include "extrema/numeric.hpp"
#include "extrema/parallel.hpp"

namespace extrema {

/// Resonator weights f(p) on a prime window, with the constants they came from.
struct WeightRecipe {
  double sigma = 0.5;
  double kappa = 1.0;
  int m = 1;
  std::uint64_t N = 1;
  double ell = 0.0;
  /// Only for sigma > 1/2.
  std::optional<double> c;
  double support_lo = 0.0;
  double support_hi = 0.0;
  double M_res = 0.0;
  /// Rankin parameter (log ell)^-3, reported only.
  double rankin_alpha = 0.0;

  /// f(p): (ell/p)^sigma, or sqrt(ell)/(sqrt(p) log p) on the line; 0 off the window.
  double weight(double p) const noexcept;

  /// support_hi / support_lo >= 4.
  bool wide_window() const noexcept { return support_hi >= 4.0 * support_lo; }
};

/// Weight recipe for length N. Requires N >= 1000 and sigma in [1/2, 1).
WeightRecipe plan_weights(const LFunctionSpec& spec, double sigma, std::uint64_t N);

/// Theorem constant C_L(sigma) and the loglog exponent theta(sigma).
struct ResonanceConstant {
  double C_L = 0.0;
  double theta = 1.0;
};
ResonanceConstant resonance_constant(double kappa, int m, double sigma);
ResonanceConstant resonance_constant(const LFunctionSpec& spec, double sigma);

/// exp(C_L (log T)^{1-sigma} / (log log T)^theta), T >= 100.
double predicted_lower(double kappa, int m, double sigma, double T,
                       std::optional<double> theta_override = std::nullopt);
double predicted_lower(const LFunctionSpec& spec, double sigma, double T,
                       std::optional<double> theta_override = std::nullopt);

struct ResonatorTerm {
  std::uint64_t n = 1;
  /// f(n) >= 0
  double f = 1.0;
  /// a_L(n)
  Complex a{1.0, 0.0};
  /// r(n) = a_L(n) f(n)
  Complex r{1.0, 0.0};
};

/// An expanded resonator: square-free n <= N over the support primes, ascending.
class ResonatorPlan {
 public:
  /// The plan {1 -> 1}.
  static ResonatorPlan trivial(double sigma, std::uint64_t N);

  const WeightRecipe& recipe() const noexcept { return recipe_; }
  double sigma() const noexcept { return recipe_.sigma; }
  std::uint64_t N() const noexcept { return N_; }
  const std::vector<std::uint64_t>& support_primes() const noexcept { return primes_; }
  const std::vector<ResonatorTerm>& terms() const noexcept { return terms_; }
  bool truncated() const noexcept { return truncated_; }
  /// Number of square-free products found before truncation.
  std::uint64_t enumerated() const noexcept { return enumerated_; }

  /// sum |r(n)|^2
  double sum_sq() const;
  /// Index of n in terms(), if present.
  std::optional<std::size_t> find(std::uint64_t n) const;

 private:
  friend ResonatorPlan expand_weighted(const LFunctionSpec&, double, std::vector<std::uint64_t>,
                                       const std::function<double(std::uint64_t)>&,
                                       std::uint64_t, std::size_t);
  friend ResonatorPlan expand(const LFunctionSpec&, const WeightRecipe&, std::uint64_t,
                              std::size_t);
  WeightRecipe recipe_;
  std::uint64_t N_ = 1;
  std::vector<std::uint64_t> primes_;
  std::vector<ResonatorTerm> terms_;
  bool truncated_ = false;
  std::uint64_t enumerated_ = 1;
};

/// Expands a recipe over the primes of its window that are <= N. If more than
/// term_budget products exist, keeps the term_budget largest |r(n)| (ties to
/// smaller n) and marks the plan truncated.
ResonatorPlan expand(const LFunctionSpec& spec, const WeightRecipe& recipe, std::uint64_t N,
                     std::size_t term_budget);

/// Same expansion with explicit support primes and weights f(p).
ResonatorPlan expand_weighted(const LFunctionSpec& spec, double sigma,
                              std::vector<std::uint64_t> primes,
                              const std::function<double(std::uint64_t)>& f, std::uint64_t N,
                              std::size_t term_budget);

struct DiagonalRatio {
  /// sum_{mk=n} a(k) r(m) conj(r(n)) k^-sigma / sum |r(n)|^2
  double value = 0.0;
  /// sum_k f(k)|a(k)|^2 k^-sigma sum_{m <= N/k, (m,k)=1} f(m)^2 |a(m)|^2 / sum |r(n)|^2
  double factored = 0.0;
  /// Largest |imaginary part| met in the double sum, relative to the numerator.
  double imag_residue = 0.0;
  /// Set when the plan was truncated; both values then miss terms.
  bool inexact = false;
};

DiagonalRatio diagonal_ratio(const LFunctionSpec& spec, const ResonatorPlan& plan);

/// T Phi^(0) sum |r(n)|^2. Requires N <= T^0.95.
double moment1(const ResonatorPlan& plan, double T, const SmoothingBump& phi);

/// R(t) = sum r(n) n^{-it}
Complex resonator_value(const ResonatorPlan& plan, double t);

/// |R(t)|^2 at t0 + i*step, i < count. Phases are reseeded exactly every
/// 4096 points and rotated in between.
std::vector<double> resonator_power_grid(const ResonatorPlan& plan, double t0, double step,
                                         std::size_t count, const Workers& workers = {});

}  // namespace extrema
