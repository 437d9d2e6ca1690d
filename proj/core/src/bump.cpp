#include "extrema/bump.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

namespace extrema {

namespace {

constexpr std::size_t kIntervals = 2048;

// exp(-1/(1-u^2)) on (-1, 1).
double mollifier_density(double u) noexcept {
  const double d = 1.0 - u * u;
  if (d <= 0.0) return 0.0;
  return std::exp(-1.0 / d);
}

// Ramp derivative in x in [0, 1], before normalisation: 2 eta(2x - 1).
double ramp_density(double x) noexcept { return 2.0 * mollifier_density(2.0 * x - 1.0); }

}  // namespace

SmoothingBump SmoothingBump::mollifier() {
  SmoothingBump b;
  auto table = std::make_shared<std::vector<double>>(kIntervals + 1, 0.0);
  const double h = 1.0 / static_cast<double>(kIntervals);
  CompensatedSum<double> acc;
  for (std::size_t i = 0; i < kIntervals; ++i) {
    const double lo = h * static_cast<double>(i);
    acc.add(integrate_gl(ramp_density, lo, lo + h));
    (*table)[i + 1] = acc.value();
  }
  b.norm_ = acc.value();
  for (double& v : *table) v /= b.norm_;
  b.table_ = std::move(table);

  using boost::math::quadrature::gauss_kronrod;
  const auto phi = [&b](double t) { return b(t); };
  double err = 0.0;
  b.hat0_ = gauss_kronrod<double, 61>::integrate(phi, 1.0, 1.25, 20, 1e-14, &err) + 0.5 +
            gauss_kronrod<double, 61>::integrate(phi, 1.75, 2.0, 20, 1e-14, &err);
  return b;
}

double SmoothingBump::ramp(double x) const noexcept {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double pos = x * static_cast<double>(kIntervals);
  auto i = static_cast<std::size_t>(pos);
  if (i >= kIntervals) i = kIntervals - 1;
  const double h = 1.0 / static_cast<double>(kIntervals);
  const double s = pos - static_cast<double>(i);
  const double x0 = h * static_cast<double>(i);
  const double y0 = (*table_)[i];
  const double y1 = (*table_)[i + 1];
  const double d0 = ramp_density(x0) / norm_ * h;
  const double d1 = ramp_density(x0 + h) / norm_ * h;
  const double s2 = s * s;
  const double s3 = s2 * s;
  const double v = (2 * s3 - 3 * s2 + 1) * y0 + (s3 - 2 * s2 + s) * d0 + (-2 * s3 + 3 * s2) * y1 +
                   (s3 - s2) * d1;
  return std::clamp(v, 0.0, 1.0);
}

double SmoothingBump::operator()(double t) const noexcept {
  if (t <= 1.0 || t >= 2.0) return 0.0;
  if (t < 1.25) return ramp(4.0 * (t - 1.0));
  if (t <= 1.75) return 1.0;
  return ramp(4.0 * (2.0 - t));
}

Complex SmoothingBump::hat(double y) const {
  if (y == 0.0) return {hat0_, 0.0};
  const auto panels = static_cast<std::size_t>(std::ceil(std::abs(y) / 8.0)) + 16;
  const auto integrand = [&](double t) {
    return (*this)(t) * Complex{std::cos(y * t), -std::sin(y * t)};
  };
  const Complex ramps = integrate_gl(integrand, 1.0, 1.25, panels) +
                        integrate_gl(integrand, 1.75, 2.0, panels);
  // int_{5/4}^{7/4} e^{-iyt} dt
  const Complex e_lo{std::cos(1.25 * y), -std::sin(1.25 * y)};
  const Complex e_hi{std::cos(1.75 * y), -std::sin(1.75 * y)};
  const Complex plateau = (e_lo - e_hi) / Complex{0.0, y};
  return ramps + plateau;
}

}  // namespace extrema
