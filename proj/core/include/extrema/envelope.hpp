#pragma once

#include <optional>
#include <string>

namespace extrema {

enum class EnvelopeKind { lower_thm1, lower_thm2, upper_prop1_strip, upper_prop1_line1 };

/// "lower-thm1", "lower-thm2", "upper-prop1-strip", "upper-prop1-line1".
EnvelopeKind parse_envelope_kind(const std::string& text);
std::string to_string(EnvelopeKind kind);

/// Closed-form bound for max |L| as a function of T.
struct EnvelopeCurve {
  EnvelopeKind kind = EnvelopeKind::lower_thm1;
  double kappa = 1.0;
  int m = 1;
  double sigma = 0.75;
  double eta = 0.1;
  /// Constant of the strip upper bound.
  double c = 1.0;
  /// Replaces theta(sigma) in lower-thm1.
  std::optional<double> theta;
};

/// (1 - 1/e) kappa / 4 * (eta / (4 sqrt e))^{1 - sigma}
double thm2_constant(double kappa, double eta, double sigma);

/// Envelope value at T >= 100.
///   lower-thm1         exp(C_L (log T)^{1-sigma} / (loglog T)^theta)
///   lower-thm2         exp(c_{kappa,eta} (log T)^{1-sigma} / loglog T)
///   upper-prop1-strip  exp(c (log T)^{2-2 sigma} / loglog T)
///   upper-prop1-line1  (loglog T)^kappa
double envelope(const EnvelopeCurve& curve, double T);

}  // namespace extrema
