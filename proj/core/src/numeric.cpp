#include "extrema/numeric.hpp"

#include <array>
#include <boost/math/quadrature/gauss.hpp>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <system_error>

#include "extrema/errors.hpp"

namespace extrema {

namespace detail {

namespace {
using Rule = boost::math::quadrature::gauss<double, 30>;
}  // namespace

const double* gauss30_abscissa() noexcept { return Rule::abscissa().data(); }
const double* gauss30_weights() noexcept { return Rule::weights().data(); }

}  // namespace detail

std::string format_double(double x) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc{}) return "nan";
  return std::string(buf.data(), ptr);
}

double parse_double(const std::string& text, const std::string& what) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  while (first != last && *first == ' ') ++first;
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  while (ptr != last && (*ptr == ' ' || *ptr == '\r')) ++ptr;
  if (ec != std::errc{} || ptr != last || first == last) {
    throw ParseError("invalid number for " + what + ": '" + text + "'");
  }
  return value;
}

std::uint64_t parse_count(const std::string& text, const std::string& what) {
  const double v = parse_double(text, what);
  if (!(v >= 0.0) || v > 1.8e19 || std::nearbyint(v) != v) {
    throw ParseError("expected a non-negative integer for " + what + ": '" + text + "'");
  }
  return static_cast<std::uint64_t>(v);
}

}  // namespace extrema
