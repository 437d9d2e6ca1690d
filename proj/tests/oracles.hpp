#pragma once

// Slow, independent reference computations used to freeze expected values.

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

namespace oracle {

inline bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<std::uint64_t> primes_in(double lo, double hi) {
  std::vector<std::uint64_t> out;
  for (auto p = static_cast<std::uint64_t>(std::max(2.0, std::ceil(lo))); static_cast<double>(p) <= hi; ++p) {
    if (trial_division_prime(p)) out.push_back(p);
  }
  return out;
}

// sum_{n <= cutoff} n^-sigma e^{-n/X} in long double, for real s.
inline long double smoothed_real(double sigma, double X, std::uint64_t cutoff) {
  long double s = 0.0L;
  for (std::uint64_t n = cutoff; n >= 1; --n) {
    s += std::pow(static_cast<long double>(n), -static_cast<long double>(sigma)) *
         std::exp(-static_cast<long double>(n) / X);
  }
  return s;
}

// Minimum of |sum u_j log p_j| / 2pi over nonzero u in [-M, M]^n, long double.
inline long double brute_lambda(const std::vector<std::uint64_t>& primes, int M) {
  const std::size_t n = primes.size();
  std::vector<int> u(n, -M);
  long double best = INFINITY;
  for (;;) {
    bool zero = true;
    long double s = 0.0L;
    for (std::size_t j = 0; j < n; ++j) {
      if (u[j] != 0) zero = false;
      s += u[j] * std::log(static_cast<long double>(primes[j]));
    }
    if (!zero) best = std::min(best, std::fabs(s));
    std::size_t j = 0;
    while (j < n && u[j] == M) u[j++] = -M;
    if (j == n) break;
    ++u[j];
  }
  return best / (2.0L * std::numbers::pi_v<long double>);
}

// li(xi) for 0 < xi < 1, as -int_{-log xi}^inf e^{-w}/w dw.
inline double li_below_one(double xi) {
  boost::math::quadrature::exp_sinh<double> integrator;
  const double a = -std::log(xi);
  return -integrator.integrate([a](double v) { return std::exp(-(a + v)) / (a + v); });
}

// Gauss-Kronrod 61 on [a, b] split into unit-ish panels.
template <class F>
double integrate_panels(F f, double a, double b, double panel) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
  const auto count = static_cast<std::size_t>(std::ceil((b - a) / panel));
  const double h = (b - a) / static_cast<double>(count);
  double total = 0.0;
  for (std::size_t k = 0; k < count; ++k) {
    total += GK::integrate(f, a + h * static_cast<double>(k), a + h * static_cast<double>(k + 1), 0);
  }
  return total;
}

inline double tent_delta(double sigma, double x) {
  double s = 0.0;
  for (std::uint64_t p : primes_in(x / std::numbers::e, std::numbers::e * x)) {
    const double w = 1.0 - std::fabs(std::log(static_cast<double>(p) / x));
    s += std::pow(static_cast<double>(p), -sigma) * w;
  }
  return s;
}

}  // namespace oracle
