#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <type_traits>

namespace extrema {

using Complex = std::complex<double>;

/// Neumaier-compensated running sum.
template <class T>
class CompensatedSum {
 public:
  void add(T x) noexcept {
    if constexpr (std::is_same_v<T, Complex>) {
      re_.add(x.real());
      im_.add(x.imag());
    } else {
      const T s = sum_ + x;
      if (std::abs(sum_) >= std::abs(x)) {
        comp_ += (sum_ - s) + x;
      } else {
        comp_ += (x - s) + sum_;
      }
      sum_ = s;
    }
  }

  T value() const noexcept {
    if constexpr (std::is_same_v<T, Complex>) {
      return {re_.value(), im_.value()};
    } else {
      return sum_ + comp_;
    }
  }

 private:
  struct Empty {};
  using Part = std::conditional_t<std::is_same_v<T, Complex>, CompensatedSum<double>, Empty>;
  T sum_{};
  T comp_{};
  [[no_unique_address]] Part re_{};
  [[no_unique_address]] Part im_{};
};

/// ||x||: distance from x to the nearest integer, in [0, 1/2].
inline double dist_to_nearest_int(double x) noexcept { return std::abs(x - std::nearbyint(x)); }

/// Shortest decimal text that round-trips to the same double.
std::string format_double(double x);

/// Parses a double, accepting scientific notation; throws ParseError naming `what`.
double parse_double(const std::string& text, const std::string& what);

/// Parses a non-negative integer that may be written as a double ("1e5").
std::uint64_t parse_count(const std::string& text, const std::string& what);

/// 30-point Gauss-Legendre rule on [a, b] split into `panels` equal panels.
template <class F>
auto integrate_gl(F&& f, double a, double b, std::size_t panels = 1) -> decltype(f(a));

namespace detail {
inline constexpr std::size_t kGaussHalf = 15;
const double* gauss30_abscissa() noexcept;
const double* gauss30_weights() noexcept;
}  // namespace detail

template <class F>
auto integrate_gl(F&& f, double a, double b, std::size_t panels) -> decltype(f(a)) {
  using R = decltype(f(a));
  const double* x = detail::gauss30_abscissa();
  const double* w = detail::gauss30_weights();
  if (panels == 0) panels = 1;
  const double width = (b - a) / static_cast<double>(panels);
  R total{};
  for (std::size_t k = 0; k < panels; ++k) {
    const double lo = a + width * static_cast<double>(k);
    const double mid = lo + 0.5 * width;
    const double half = 0.5 * width;
    R acc{};
    for (std::size_t i = 0; i < detail::kGaussHalf; ++i) {
      acc += w[i] * (f(mid - half * x[i]) + f(mid + half * x[i]));
    }
    total += half * acc;
  }
  return total;
}

}  // namespace extrema
