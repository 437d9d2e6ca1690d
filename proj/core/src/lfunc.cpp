#include "extrema/lfunc.hpp"

#include <algorithm>
#include <boost/math/special_functions/bernoulli.hpp>
#include <cmath>
#include <numbers>
#include <unordered_map>

#include "extrema/errors.hpp"
#include "extrema/primes.hpp"

namespace extrema {

namespace {

constexpr double kRootTolerance = 1e-12;

// h_k(alpha_1, ..., alpha_m): coefficient of x^k in prod_j 1/(1 - alpha_j x).
Complex complete_homogeneous(const std::vector<Complex>& alphas, int k) {
  std::vector<Complex> c(static_cast<std::size_t>(k) + 1, Complex{0.0, 0.0});
  c[0] = 1.0;
  for (const Complex& a : alphas) {
    for (int i = 1; i <= k; ++i) c[i] += a * c[i - 1];
  }
  return c[static_cast<std::size_t>(k)];
}

void check_smoothing_args(double sigma, const SmoothingWindow& window) {
  if (!(sigma > 0.0 && sigma <= 3.0)) throw RangeError("smoothed_value: sigma must lie in (0, 3]");
  if (!(window.X >= 16.0)) throw RangeError("smoothed_value: smoothing scale X must be >= 16");
  if (window.cutoff < 1) throw RangeError("smoothed_value: empty window");
}

// Periodic coefficient table: values[n mod q].
std::vector<Complex> periodic_values(const LFunctionSpec& spec) {
  if (spec.kind() == CoeffKind::zeta) return {Complex{1.0, 0.0}};
  return spec.character()->table();
}

// a(n) n^{-sigma - it} e^{-n/X} without the coefficient.
inline Complex smoothed_term(double sigma, double t, double inv_x, double n) {
  const double logn = std::log(n);
  const double mag = std::exp(-sigma * logn - n * inv_x);
  const double ph = t * logn;
  return {mag * std::cos(ph), -mag * std::sin(ph)};
}

Complex periodic_head(const std::vector<Complex>& values, double sigma, double t, double X,
                      std::uint64_t last) {
  const std::uint64_t q = values.size();
  const double inv_x = 1.0 / X;
  CompensatedSum<Complex> acc;
  for (std::uint64_t n = 1; n <= last; ++n) {
    const Complex c = values[n % q];
    if (c == Complex{0.0, 0.0}) continue;
    acc.add(c * smoothed_term(sigma, t, inv_x, static_cast<double>(n)));
  }
  return acc.value();
}

// u^{-s} e^{-u/X}
inline Complex tail_f(Complex s, double inv_x, double u) {
  return std::exp(-s * std::log(u) - u * inv_x);
}

// int_a^b u^{-s} e^{-u/X} du, integrated in v = log u where the phase is linear.
Complex tail_integral(Complex s, double X, double a, double b) {
  if (!(b > a)) return {0.0, 0.0};
  const double va = std::log(a);
  const double vb = std::log(b);
  const double t = std::abs(s.imag());
  const double width = t > 0.0 ? std::min(0.25, 40.0 / t) : 0.25;
  const auto panels = static_cast<std::size_t>(std::ceil((vb - va) / width));
  const Complex one_minus_s = 1.0 - s;
  const double inv_x = 1.0 / X;
  return integrate_gl([&](double v) { return std::exp(one_minus_s * v - std::exp(v) * inv_x); },
                      va, vb, panels);
}

// sum_{j=1}^{J} B_{2j}/(2j)! g^{(2j-1)}(k) for g(k) = f(u0 + k q), evaluated at u.
Complex em_correction(Complex s, double inv_x, double u, double q, int order) {
  const int kmax = 2 * order - 1;
  std::vector<Complex> psi(static_cast<std::size_t>(kmax) + 1);
  const double ratio = q / u;
  double rk = 1.0;
  for (int k = 1; k <= kmax; ++k) {
    rk *= ratio;
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;
    psi[k] = -s * sign * rk / static_cast<double>(k);
  }
  psi[1] -= q * inv_x;
  std::vector<Complex> e(static_cast<std::size_t>(kmax) + 1);
  e[0] = 1.0;
  for (int n = 1; n <= kmax; ++n) {
    Complex acc{0.0, 0.0};
    for (int k = 1; k <= n; ++k) acc += static_cast<double>(k) * psi[k] * e[n - k];
    e[n] = acc / static_cast<double>(n);
  }
  Complex sum{0.0, 0.0};
  for (int j = 1; j <= order; ++j) {
    const double b2j = boost::math::bernoulli_b2n<double>(j);
    sum += (b2j / (2.0 * j)) * e[2 * j - 1];
  }
  return tail_f(s, inv_x, u) * sum;
}

}  // namespace

// ---------------------------------------------------------------------------
// LFunctionSpec

LFunctionSpec LFunctionSpec::zeta() {
  LFunctionSpec s;
  s.name_ = "zeta";
  s.kind_ = CoeffKind::zeta;
  return s;
}

LFunctionSpec LFunctionSpec::dirichlet(std::uint64_t modulus, std::uint64_t index, double kappa) {
  LFunctionSpec s;
  s.name_ = "chi_" + std::to_string(modulus) + "_" + std::to_string(index);
  s.kind_ = CoeffKind::dirichlet_character;
  s.character_.emplace(modulus, index);
  s.kappa_ = kappa;
  s.validate();
  return s;
}

LFunctionSpec LFunctionSpec::euler_roots(std::string name, EulerRootTable roots,
                                         std::uint64_t root_bound, int m, double degree,
                                         double kappa) {
  LFunctionSpec s;
  s.name_ = std::move(name);
  s.kind_ = CoeffKind::euler_roots;
  s.roots_ = std::move(roots);
  s.root_bound_ = root_bound;
  if (s.root_bound_ == 0 && !s.roots_.empty()) s.root_bound_ = s.roots_.rbegin()->first;
  s.m_ = m;
  s.degree_ = degree;
  s.kappa_ = kappa;
  s.validate();
  return s;
}

std::uint64_t LFunctionSpec::period() const noexcept {
  switch (kind_) {
    case CoeffKind::zeta:
      return 1;
    case CoeffKind::dirichlet_character:
      return character_->modulus();
    case CoeffKind::euler_roots:
      break;
  }
  return 0;
}

LFunctionSpec& LFunctionSpec::set_name(std::string name) {
  name_ = std::move(name);
  return *this;
}

LFunctionSpec& LFunctionSpec::set_kappa(double kappa) {
  const double old = kappa_;
  kappa_ = kappa;
  try {
    validate();
  } catch (...) {
    kappa_ = old;
    throw;
  }
  return *this;
}

LFunctionSpec& LFunctionSpec::set_degree(double degree) {
  const double old = degree_;
  degree_ = degree;
  try {
    validate();
  } catch (...) {
    degree_ = old;
    throw;
  }
  return *this;
}

LFunctionSpec& LFunctionSpec::set_axiom_delta(double delta) {
  if (!(delta >= 0.0 && delta < 0.5)) throw RangeError("axiom delta must lie in [0, 1/2)");
  axiom_delta_ = delta;
  return *this;
}

void LFunctionSpec::validate() const {
  if (!(kappa_ > 0.0)) throw RangeError("kappa must be positive");
  if (!(degree_ > 0.0)) throw RangeError("degree dL must be positive");
  if (m_ < 1) throw RangeError("Euler polynomial degree m must be >= 1");
  switch (kind_) {
    case CoeffKind::zeta:
      if (degree_ != 1.0 || kappa_ != 1.0 || m_ != 1) {
        throw RangeError("zeta requires dL = 1, kappa = 1, m = 1");
      }
      return;
    case CoeffKind::dirichlet_character:
      if (m_ != 1 || degree_ != 1.0) throw RangeError("Dirichlet L-functions have m = 1, dL = 1");
      return;
    case CoeffKind::euler_roots:
      break;
  }
  if (roots_.empty()) throw RangeError("euler-roots spec needs at least one root tuple");
  for (const auto& [p, alphas] : roots_) {
    if (!is_prime(p)) throw RangeError("root table key " + std::to_string(p) + " is not prime");
    if (alphas.size() != static_cast<std::size_t>(m_)) {
      throw RangeError("prime " + std::to_string(p) + " has " + std::to_string(alphas.size()) +
                       " roots, expected m = " + std::to_string(m_));
    }
    Complex ap{0.0, 0.0};
    for (const Complex& a : alphas) {
      if (std::abs(a) > 1.0 + kRootTolerance) {
        throw RangeError("root at prime " + std::to_string(p) + " has modulus > 1");
      }
      ap += a;
    }
    if (std::abs(ap) > m_ + kRootTolerance) {
      throw RangeError("|a(" + std::to_string(p) + ")| exceeds m");
    }
  }
  for (std::uint64_t p : primes_up_to(root_bound_)) {
    if (!roots_.contains(p)) throw InsufficientEulerData(p);
  }
}

// ---------------------------------------------------------------------------
// Coefficients

Complex coeff_prime_power(const LFunctionSpec& spec, std::uint64_t p, int k) {
  if (k == 0) return {1.0, 0.0};
  switch (spec.kind()) {
    case CoeffKind::zeta:
      return {1.0, 0.0};
    case CoeffKind::dirichlet_character: {
      const Complex chi = (*spec.character())(p);
      Complex r{1.0, 0.0};
      for (int i = 0; i < k; ++i) r *= chi;
      return r;
    }
    case CoeffKind::euler_roots:
      break;
  }
  if (p > spec.root_bound()) throw InsufficientEulerData(p);
  const auto it = spec.roots().find(p);
  if (it == spec.roots().end()) throw InsufficientEulerData(p);
  return complete_homogeneous(it->second, k);
}

Complex coeff(const LFunctionSpec& spec, std::uint64_t n) {
  if (n == 0) throw RangeError("coeff: n must be >= 1");
  switch (spec.kind()) {
    case CoeffKind::zeta:
      return {1.0, 0.0};
    case CoeffKind::dirichlet_character:
      return (*spec.character())(n);
    case CoeffKind::euler_roots:
      break;
  }
  Complex r{1.0, 0.0};
  for (auto [p, k] : factorize(n)) r *= coeff_prime_power(spec, p, k);
  return r;
}

double coeff_phase(const LFunctionSpec& spec, std::uint64_t p) {
  const Complex a = coeff_prime_power(spec, p, 1);
  if (a == Complex{0.0, 0.0}) return 0.0;
  return std::arg(a);
}

// ---------------------------------------------------------------------------
// Smoothed Dirichlet series

SmoothingWindow SmoothingWindow::for_scale(double X) {
  if (!(X > 1.0) || !std::isfinite(X)) throw RangeError("smoothing scale X must exceed 1");
  const double c = std::ceil(X * std::log(X));
  if (c > 1.8e19) throw RangeError("smoothing cutoff overflows");
  return SmoothingWindow{X, static_cast<std::uint64_t>(c)};
}

Complex smoothed_value_direct(const LFunctionSpec& spec, double sigma, double t,
                              const SmoothingWindow& window, const SmoothedOptions& opts) {
  check_smoothing_args(sigma, window);
  const std::uint64_t cutoff = window.cutoff;
  if (cutoff > opts.term_budget) {
    throw BudgetExceeded("smoothed_value direct summation", cutoff, opts.term_budget);
  }
  if (spec.kind() != CoeffKind::euler_roots) {
    return periodic_head(periodic_values(spec), sigma, t, window.X, cutoff);
  }
  if (cutoff > 0xFFFFFFF0ull) throw RangeError("smoothed_value: cutoff too large for root tables");

  const auto spf = smallest_prime_factors(static_cast<std::uint32_t>(cutoff));
  std::unordered_map<std::uint64_t, std::vector<Complex>> powers;
  auto prime_power = [&](std::uint64_t p, int k) -> Complex {
    auto& v = powers[p];
    while (v.size() <= static_cast<std::size_t>(k)) {
      v.push_back(coeff_prime_power(spec, p, static_cast<int>(v.size())));
    }
    return v[static_cast<std::size_t>(k)];
  };

  const double inv_x = 1.0 / window.X;
  CompensatedSum<Complex> acc;
  acc.add(smoothed_term(sigma, t, inv_x, 1.0));
  for (std::uint64_t n = 2; n <= cutoff; ++n) {
    Complex a{1.0, 0.0};
    std::uint64_t rest = n;
    while (rest > 1) {
      const std::uint64_t p = spf[rest];
      int k = 0;
      while (rest % p == 0) {
        rest /= p;
        ++k;
      }
      a *= prime_power(p, k);
      if (a == Complex{0.0, 0.0}) break;
    }
    if (a == Complex{0.0, 0.0}) continue;
    acc.add(a * smoothed_term(sigma, t, inv_x, static_cast<double>(n)));
  }
  return acc.value();
}

Complex smoothed_value(const LFunctionSpec& spec, double sigma, double t,
                       const SmoothingWindow& window, const SmoothedOptions& opts) {
  check_smoothing_args(sigma, window);
  if (spec.kind() == CoeffKind::euler_roots) {
    return smoothed_value_direct(spec, sigma, t, window, opts);
  }
  if (opts.em_order < 1 || opts.em_order > 30) throw RangeError("em_order must lie in [1, 30]");

  const auto values = periodic_values(spec);
  const std::uint64_t q = values.size();
  const Complex s{sigma, t};
  const double qd = static_cast<double>(q);
  const auto switch_point = static_cast<std::uint64_t>(
      std::max(std::ceil(qd * std::abs(s) / 2.0), 64.0 * qd));
  const std::uint64_t cutoff = window.cutoff;

  if (cutoff <= switch_point + 4 * q) {
    return smoothed_value_direct(spec, sigma, t, window, opts);
  }
  if (switch_point > opts.term_budget) {
    throw BudgetExceeded("smoothed_value head summation", switch_point, opts.term_budget);
  }

  const Complex head = periodic_head(values, sigma, t, window.X, switch_point - 1);

  // Tail n in [switch_point, cutoff], summed per residue class r mod q.
  const double inv_x = 1.0 / window.X;
  const auto n0 = static_cast<double>(switch_point);
  const auto c = static_cast<double>(cutoff);
  const Complex shared_integral = tail_integral(s, window.X, n0, c);
  CompensatedSum<Complex> tail;
  for (std::uint64_t r = 0; r < q; ++r) {
    const Complex cr = values[r];
    if (cr == Complex{0.0, 0.0}) continue;
    const std::uint64_t first = switch_point + (r + q - switch_point % q) % q;
    const std::uint64_t last = cutoff - (cutoff + q - r) % q;
    if (first > last) continue;
    const auto u0 = static_cast<double>(first);
    const auto u1 = static_cast<double>(last);
    auto f = [&](double u) { return tail_f(s, inv_x, u); };
    Complex integral = shared_integral;
    if (u0 > n0) integral -= integrate_gl(f, n0, u0);
    if (u1 < c) integral -= integrate_gl(f, u1, c);
    Complex class_sum = integral / qd + 0.5 * (f(u0) + f(u1));
    class_sum += em_correction(s, inv_x, u1, qd, opts.em_order) -
                 em_correction(s, inv_x, u0, qd, opts.em_order);
    tail.add(cr * class_sum);
  }
  return head + tail.value();
}

// ---------------------------------------------------------------------------
// Prime sums

double prime_sum_stats(const LFunctionSpec& spec, double x, int power) {
  if (!(x >= 2.0)) throw RangeError("prime_sum_stats: x must be >= 2");
  if (power != 1 && power != 2) throw RangeError("prime_sum_stats: power must be 1 or 2");
  CompensatedSum<double> acc;
  for (std::uint64_t p : primes_up_to(static_cast<std::uint64_t>(std::floor(x)))) {
    const double a = std::abs(coeff_prime_power(spec, p, 1));
    acc.add(power == 1 ? a : a * a);
  }
  return acc.value();
}

TentSum tent_sum(const LFunctionSpec& spec, double sigma, double t0, double x, double theta) {
  if (!(x > 2.0)) throw RangeError("tent_sum: x must exceed 2");
  TentSum out;
  CompensatedSum<double> value;
  CompensatedSum<double> delta;
  for (std::uint64_t p : primes_between(x / std::numbers::e, x * std::numbers::e)) {
    const auto pd = static_cast<double>(p);
    const double dist = std::abs(std::log(pd / x));
    if (dist > 1.0) continue;
    const Complex a = coeff_prime_power(spec, p, 1);
    const double w = std::abs(a) * std::pow(pd, -sigma) * (1.0 - dist);
    const double omega = (a == Complex{0.0, 0.0}) ? 0.0 : std::arg(a);
    value.add(w * std::cos(t0 * std::log(pd) - omega + theta));
    delta.add(w);
    out.primes.push_back(p);
  }
  out.value = value.value();
  out.delta_big = delta.value();
  return out;
}

}  // namespace extrema
