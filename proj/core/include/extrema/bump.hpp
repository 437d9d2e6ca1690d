#pragma once

#include <memory>
#include <vector>

#include "extrema/numeric.hpp"

namespace extrema {

/// Smooth weight Phi supported on [1, 2], identically 1 on [5/4, 7/4], with
/// 0 <= Phi <= 1. The two ramps are the normalised integral of the mollifier
/// exp(-1/(1-u^2)), tabulated once and interpolated by cubic Hermite splines
/// using the exact derivative.
class SmoothingBump {
 public:
  static SmoothingBump mollifier();

  double operator()(double t) const noexcept;

  /// Integral of Phi, by adaptive Gauss-Kronrod.
  double hat0() const noexcept { return hat0_; }

  /// int Phi(t) e^{-iyt} dt.
  Complex hat(double y) const;

 private:
  SmoothingBump() = default;
  double ramp(double x) const noexcept;

  // Cumulative ramp values on a uniform grid of [0, 1].
  std::shared_ptr<const std::vector<double>> table_;
  double norm_ = 1.0;
  double hat0_ = 0.0;
};

}  // namespace extrema
