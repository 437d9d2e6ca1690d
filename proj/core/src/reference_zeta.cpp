#include <algorithm>
#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/factorials.hpp>
#include <cmath>
#include <numbers>

#include "extrema/errors.hpp"
#include "extrema/lfunc.hpp"

namespace extrema {

namespace {

constexpr double kTargetError = 1e-13;
constexpr std::size_t kGridBlock = 256;

void check_reference_args(double sigma, double t, int order) {
  if (!(sigma >= 0.5 && sigma <= 3.0)) throw RangeError("reference_zeta: sigma must lie in [1/2, 3]");
  if (!(std::abs(t) <= 1e9)) throw RangeError("reference_zeta: |t| must be <= 1e9");
  if (order < 1 || order > 30) throw RangeError("reference_zeta: order must lie in [1, 30]");
  if (std::abs(Complex(sigma - 1.0, t)) < 1e-8) throw RangeError("reference_zeta: s is at the pole s = 1");
}

// n^{-sigma} e^{-it log n}, phase reduced in long double.
inline Complex power_term(double sigma, double t, std::uint64_t n) {
  constexpr long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  const long double logn = std::log(static_cast<long double>(n));
  const auto ph = static_cast<double>(std::fmod(static_cast<long double>(t) * logn, two_pi));
  const double mag = std::exp(-sigma * static_cast<double>(logn));
  return {mag * std::cos(ph), -mag * std::sin(ph)};
}

// N^{1-s}/(s-1) + N^{-s}/2 + sum_k B_2k/(2k)! (s)_{2k-1} N^{-s-2k+1}
Complex em_tail(Complex s, double n, int order) {
  const Complex n_pow = std::exp(-s * std::log(n));
  Complex out = n_pow * n / (s - 1.0) + 0.5 * n_pow;
  Complex rising = s;  // (s)_{2k-1}
  double inv_n_pow = 1.0 / n;  // N^{-(2k-1)}
  for (int k = 1; k <= order; ++k) {
    const double coef = boost::math::bernoulli_b2n<double>(k) /
                        boost::math::factorial<double>(static_cast<unsigned>(2 * k));
    out += coef * rising * n_pow * inv_n_pow;
    rising *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
    inv_n_pow /= n * n;
  }
  return out;
}

}  // namespace

std::uint64_t reference_zeta_length(double sigma, double t, int order) {
  check_reference_args(sigma, t, order);
  const Complex s{sigma, t};
  // First omitted correction: |B_{2K+2}|/(2K+2)! |s(s+1)...(s+2K)| N^{-sigma-2K-1}.
  double log_a = std::log(std::abs(boost::math::bernoulli_b2n<double>(order + 1))) -
                 std::lgamma(2.0 * order + 3.0);
  for (int j = 0; j <= 2 * order; ++j) log_a += std::log(std::abs(s + static_cast<double>(j)));
  const double n_err = std::exp((log_a - std::log(kTargetError)) / (sigma + 2.0 * order + 1.0));
  const double n = std::max({50.0, std::ceil(10.0 * std::sqrt(std::abs(t))), std::ceil(n_err)});
  return static_cast<std::uint64_t>(n);
}

Complex reference_zeta(double sigma, double t, int order) {
  const std::uint64_t n = reference_zeta_length(sigma, t, order);
  CompensatedSum<Complex> acc;
  for (std::uint64_t k = 1; k < n; ++k) acc.add(power_term(sigma, t, k));
  return acc.value() + em_tail(Complex{sigma, t}, static_cast<double>(n), order);
}

std::vector<Complex> reference_zeta_grid(double sigma, double t0, double step, std::size_t count,
                                         int order, const Workers& workers) {
  if (count == 0) return {};
  if (!(step > 0.0)) throw RangeError("reference_zeta_grid: step must be positive");
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < count; ++i) {
    // Length depends only on |s|; checking every point also validates the pole distance.
    n = std::max(n, reference_zeta_length(sigma, t0 + step * static_cast<double>(i), order));
  }

  std::vector<Complex> out(count);
  const std::size_t blocks = (count + kGridBlock - 1) / kGridBlock;
  for_each_index(blocks, workers, [&](std::size_t b) {
    const std::size_t first = b * kGridBlock;
    const std::size_t len = std::min(kGridBlock, count - first);
    const double tb = t0 + step * static_cast<double>(first);
    std::vector<double> re(len, 0.0);
    std::vector<double> im(len, 0.0);
    for (std::uint64_t k = 1; k < n; ++k) {
      const Complex z0 = power_term(sigma, tb, k);
      const double rot = -step * std::log(static_cast<double>(k));
      const double wr = std::cos(rot);
      const double wi = std::sin(rot);
      double zr = z0.real();
      double zi = z0.imag();
      for (std::size_t j = 0; j < len; ++j) {
        re[j] += zr;
        im[j] += zi;
        const double nr = zr * wr - zi * wi;
        zi = zr * wi + zi * wr;
        zr = nr;
      }
    }
    for (std::size_t j = 0; j < len; ++j) {
      const double t = t0 + step * static_cast<double>(first + j);
      out[first + j] = Complex{re[j], im[j]} + em_tail(Complex{sigma, t}, static_cast<double>(n), order);
    }
  });
  return out;
}

}  // namespace extrema
