#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "extrema/dirichlet_character.hpp"
#include "extrema/numeric.hpp"
#include "extrema/parallel.hpp"

namespace extrema {

enum class CoeffKind { zeta, dirichlet_character, euler_roots };

/// Local roots alpha_1(p), ..., alpha_m(p) keyed by prime.
using EulerRootTable = std::map<std::uint64_t, std::vector<Complex>>;

/// An L-function with polynomial Euler product of degree m.
///
/// Coefficients come from one of three sources: the constant 1 (zeta), a
/// Dirichlet character, or an explicit table of local roots. Root tables
/// cover every prime up to `root_bound()`; asking for a coefficient that
/// needs a larger prime is an error, never a silent zero.
class LFunctionSpec {
 public:
  static LFunctionSpec zeta();
  static LFunctionSpec dirichlet(std::uint64_t modulus, std::uint64_t index, double kappa = 1.0);
  static LFunctionSpec euler_roots(std::string name, EulerRootTable roots,
                                   std::uint64_t root_bound, int m, double degree,
                                   double kappa);

  const std::string& name() const noexcept { return name_; }
  CoeffKind kind() const noexcept { return kind_; }
  double degree() const noexcept { return degree_; }
  double kappa() const noexcept { return kappa_; }
  int m() const noexcept { return m_; }
  /// Exponent delta < 1/2 bounding the log-Euler coefficients b(p^j) << p^{j delta}.
  double axiom_delta() const noexcept { return axiom_delta_; }

  const DirichletCharacter* character() const noexcept {
    return character_ ? &*character_ : nullptr;
  }
  const EulerRootTable& roots() const noexcept { return roots_; }
  std::uint64_t root_bound() const noexcept { return root_bound_; }

  /// Coefficient period: 1 for zeta, q for characters, 0 for root tables.
  std::uint64_t period() const noexcept;

  LFunctionSpec& set_name(std::string name);
  LFunctionSpec& set_kappa(double kappa);
  LFunctionSpec& set_degree(double degree);
  LFunctionSpec& set_axiom_delta(double delta);

 private:
  LFunctionSpec() = default;
  void validate() const;

  std::string name_;
  CoeffKind kind_ = CoeffKind::zeta;
  double degree_ = 1.0;
  double kappa_ = 1.0;
  int m_ = 1;
  double axiom_delta_ = 0.0;
  std::optional<DirichletCharacter> character_;
  EulerRootTable roots_;
  std::uint64_t root_bound_ = 0;
};

/// a_L(n). Multiplicative; at p^k it is the complete homogeneous symmetric
/// polynomial of degree k in the local roots.
Complex coeff(const LFunctionSpec& spec, std::uint64_t n);

/// a_L(p^k) for a prime p.
Complex coeff_prime_power(const LFunctionSpec& spec, std::uint64_t p, int k);

/// omega_p = arg a_L(p), with omega_p = 0 when a_L(p) = 0.
double coeff_phase(const LFunctionSpec& spec, std::uint64_t p);

/// Smoothing scale X and truncation point ceil(X log X).
struct SmoothingWindow {
  double X = 0.0;
  std::uint64_t cutoff = 0;

  static SmoothingWindow for_scale(double X);
};

struct SmoothedOptions {
  /// Maximum number of terms summed one by one.
  std::uint64_t term_budget = 20'000'000;
  /// Euler-Maclaurin correction terms for the tail of periodic coefficients.
  int em_order = 8;
};

/// sum_{n <= cutoff} a_L(n) n^{-sigma-it} e^{-n/X}.
///
/// For periodic coefficients (zeta, characters) the terms past a switch
/// point near q|s|/2 are summed per residue class by Euler-Maclaurin, with
/// the integral done by panelled Gauss-Legendre in log u. Root tables are
/// always summed term by term in ascending n.
Complex smoothed_value(const LFunctionSpec& spec, double sigma, double t,
                       const SmoothingWindow& window, const SmoothedOptions& opts = {});

/// Plain ascending-n summation of the same truncated series.
Complex smoothed_value_direct(const LFunctionSpec& spec, double sigma, double t,
                              const SmoothingWindow& window, const SmoothedOptions& opts = {});

/// zeta(sigma + it) by Euler-Maclaurin summation. sigma in [1/2, 3], |t| <= 1e9.
Complex reference_zeta(double sigma, double t, int order = 8);

/// Main-sum length used by reference_zeta.
std::uint64_t reference_zeta_length(double sigma, double t, int order = 8);

/// reference_zeta at t0, t0 + step, ..., t0 + (count-1) step, sharing one
/// main-sum length (the one required at the largest |t|).
std::vector<Complex> reference_zeta_grid(double sigma, double t0, double step, std::size_t count,
                                         int order = 8, const Workers& workers = {});

/// sum_{p <= x} |a_L(p)|^power, power in {1, 2}.
double prime_sum_stats(const LFunctionSpec& spec, double x, int power);

struct TentSum {
  /// sum |a(p)| p^-sigma cos(t0 log p - omega_p + theta) (1 - |log(p/x)|)
  double value = 0.0;
  /// The same sum with the cosine replaced by 1.
  double delta_big = 0.0;
  std::vector<std::uint64_t> primes;
};

/// Tent-weighted prime sum over |log(p/x)| <= 1. Requires x > 2.
TentSum tent_sum(const LFunctionSpec& spec, double sigma, double t0, double x, double theta = 0.0);

}  // namespace extrema
