#include "extrema/envelope.hpp"

#include <cmath>
#include <numbers>

#include "extrema/errors.hpp"
#include "extrema/resonator.hpp"

namespace extrema {

EnvelopeKind parse_envelope_kind(const std::string& text) {
  if (text == "lower-thm1") return EnvelopeKind::lower_thm1;
  if (text == "lower-thm2") return EnvelopeKind::lower_thm2;
  if (text == "upper-prop1-strip") return EnvelopeKind::upper_prop1_strip;
  if (text == "upper-prop1-line1") return EnvelopeKind::upper_prop1_line1;
  throw ParseError("unknown envelope kind '" + text + "'");
}

std::string to_string(EnvelopeKind kind) {
  switch (kind) {
    case EnvelopeKind::lower_thm1:
      return "lower-thm1";
    case EnvelopeKind::lower_thm2:
      return "lower-thm2";
    case EnvelopeKind::upper_prop1_strip:
      return "upper-prop1-strip";
    case EnvelopeKind::upper_prop1_line1:
      return "upper-prop1-line1";
  }
  return "?";
}

double thm2_constant(double kappa, double eta, double sigma) {
  if (!(kappa > 0.0)) throw RangeError("kappa must be positive");
  if (!(eta > 0.0)) throw RangeError("eta must be positive");
  return (1.0 - std::exp(-1.0)) * kappa / 4.0 *
         std::pow(eta / (4.0 * std::sqrt(std::numbers::e)), 1.0 - sigma);
}

double envelope(const EnvelopeCurve& curve, double T) {
  if (!(T >= 100.0)) throw RangeError("envelope: T must be >= 100");
  const double log_t = std::log(T);
  const double loglog_t = std::log(log_t);
  const double sigma = curve.sigma;
  const bool strip = sigma >= 0.5 && sigma < 1.0;
  switch (curve.kind) {
    case EnvelopeKind::lower_thm1:
      if (!strip) throw RangeError("lower-thm1: sigma must lie in [1/2, 1)");
      return predicted_lower(curve.kappa, curve.m, sigma, T, curve.theta);
    case EnvelopeKind::lower_thm2:
      if (!strip) throw RangeError("lower-thm2: sigma must lie in [1/2, 1)");
      return std::exp(thm2_constant(curve.kappa, curve.eta, sigma) * std::pow(log_t, 1.0 - sigma) /
                      loglog_t);
    case EnvelopeKind::upper_prop1_strip:
      if (!strip) throw RangeError("upper-prop1-strip: sigma must lie in [1/2, 1)");
      if (!(curve.c > 0.0)) throw RangeError("upper-prop1-strip: c must be positive");
      return std::exp(curve.c * std::pow(log_t, 2.0 - 2.0 * sigma) / loglog_t);
    case EnvelopeKind::upper_prop1_line1:
      if (!(curve.kappa > 0.0)) throw RangeError("upper-prop1-line1: kappa must be positive");
      return std::pow(loglog_t, curve.kappa);
  }
  return 0.0;
}

}  // namespace extrema
