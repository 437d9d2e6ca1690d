#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "extrema/errors.hpp"
#include "extrema/lfunc.hpp"
#include "extrema/primes.hpp"
#include "oracles.hpp"

using namespace extrema;

namespace {

LFunctionSpec zeta_squared(std::uint64_t bound) {
  EulerRootTable roots;
  for (std::uint64_t p : primes_up_to(bound)) roots[p] = {Complex{1.0, 0.0}, Complex{1.0, 0.0}};
  return LFunctionSpec::euler_roots("zeta2", roots, bound, 2, 2.0, 4.0);
}

LFunctionSpec random_degree2(std::uint64_t bound, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> radius(0.0, 1.0);
  EulerRootTable roots;
  for (std::uint64_t p : primes_up_to(bound)) {
    roots[p] = {std::polar(radius(rng), angle(rng)), std::polar(radius(rng), angle(rng))};
  }
  return LFunctionSpec::euler_roots("random2", roots, bound, 2, 2.0, 1.0);
}

std::uint64_t divisor_count(std::uint64_t n) {
  std::uint64_t d = 1;
  for (auto [p, k] : factorize(n)) d *= static_cast<std::uint64_t>(k + 1);
  return d;
}

}  // namespace

TEST(Coeff, ZetaIsOne) { EXPECT_EQ(coeff(LFunctionSpec::zeta(), 360), Complex(1.0, 0.0)); }

TEST(Coeff, CharacterModFour) {
  const auto chi = LFunctionSpec::dirichlet(4, 1);
  EXPECT_EQ(coeff(chi, 3), Complex(-1.0, 0.0));
  EXPECT_EQ(coeff(chi, 5), Complex(1.0, 0.0));
  EXPECT_EQ(coeff(chi, 6), Complex(0.0, 0.0));
}

TEST(Coeff, DoubleRootsGiveDivisorFunction) {
  const auto spec = zeta_squared(100);
  for (std::uint64_t p : {2u, 3u, 97u}) {
    std::uint64_t pk = 1;
    for (int k = 0; k <= 6; ++k) {
      EXPECT_NEAR(coeff(spec, pk).real(), k + 1.0, 1e-12) << p << "^" << k;
      EXPECT_NEAR(coeff_prime_power(spec, p, k).real(), k + 1.0, 1e-12);
      if (pk > 1'000'000'000ull / p) break;
      pk *= p;
    }
  }
  EXPECT_NEAR(coeff(spec, 360).real(), static_cast<double>(divisor_count(360)), 1e-12);
}

TEST(Coeff, MissingRootIsAnError) {
  const auto spec = zeta_squared(100);
  EXPECT_THROW(coeff(spec, 101), InsufficientEulerData);
  EXPECT_THROW(coeff(spec, 2 * 103), InsufficientEulerData);
  try {
    coeff(spec, 3 * 107);
  } catch (const InsufficientEulerData& e) {
    EXPECT_NE(std::string(e.what()).find("107"), std::string::npos);
  }
}

TEST(Coeff, TableMustCoverEveryPrimeUpToBound) {
  EulerRootTable roots{{2, {Complex{1.0, 0.0}}}, {5, {Complex{1.0, 0.0}}}};
  EXPECT_THROW(LFunctionSpec::euler_roots("gap", roots, 5, 1, 1.0, 1.0), InsufficientEulerData);
  EulerRootTable big{{2, {Complex{1.5, 0.0}}}};
  EXPECT_THROW(LFunctionSpec::euler_roots("big", big, 2, 1, 1.0, 1.0), RangeError);
}

TEST(Coeff, Multiplicative) {
  const auto spec = random_degree2(1'000'000, 7);
  const auto chi = LFunctionSpec::dirichlet(15, 5);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint64_t> pick(1, 1'000'000);
  int tested = 0;
  while (tested < 2000) {
    const std::uint64_t m = pick(rng);
    const std::uint64_t n = pick(rng) % 1000 + 1;
    if (std::gcd(m, n) != 1 || m * n > 1'000'000) continue;
    ++tested;
    const Complex lhs = coeff(spec, m * n);
    const Complex rhs = coeff(spec, m) * coeff(spec, n);
    EXPECT_LE(std::abs(lhs - rhs), 1e-12 * (1.0 + std::abs(lhs)));
    EXPECT_LE(std::abs(coeff(chi, m * n) - coeff(chi, m) * coeff(chi, n)), 1e-12);
  }
}

TEST(Coeff, RamanujanBound) {
  const auto spec = random_degree2(100'000, 3);
  for (std::uint64_t n = 1; n <= 100'000; ++n) {
    const double d = static_cast<double>(divisor_count(n));
    ASSERT_LE(std::abs(coeff(spec, n)), d * d + 1e-9) << n;
  }
}

TEST(Coeff, PhaseOfZeroCoefficientIsZero) {
  const auto chi = LFunctionSpec::dirichlet(4, 1);
  EXPECT_EQ(coeff_phase(chi, 2), 0.0);
  EXPECT_NEAR(coeff_phase(chi, 3), std::numbers::pi, 1e-15);
}

TEST(Smoothed, ZetaAtTwoMatchesDirectSum) {
  const auto w = SmoothingWindow::for_scale(1e6);
  EXPECT_GE(static_cast<double>(w.cutoff), w.X);
  const double oracle = static_cast<double>(oracle::smoothed_real(2.0, 1e6, w.cutoff));
  EXPECT_NEAR(oracle, 1.64491925133741, 1e-13);
  const Complex v = smoothed_value(LFunctionSpec::zeta(), 2.0, 0.0, w);
  EXPECT_NEAR(v.real(), oracle, 1e-12);
  EXPECT_NEAR(v.imag(), 0.0, 1e-15);
  // The e^{-n/X} damping leaves a deficit of about log(X)/X below pi^2/6.
  EXPECT_NEAR(v.real(), std::numbers::pi * std::numbers::pi / 6.0, 2e-5);
}

TEST(Smoothed, ZetaAtTwoIncreasesWithScale) {
  double prev = 0.0;
  for (double X : {1e2, 1e3, 1e4, 1e5, 1e6}) {
    const double v = smoothed_value(LFunctionSpec::zeta(), 2.0, 0.0, SmoothingWindow::for_scale(X)).real();
    EXPECT_GT(v, prev);
    EXPECT_LT(v, std::numbers::pi * std::numbers::pi / 6.0);
    prev = v;
  }
}

TEST(Smoothed, LeibnizSeries) {
  const auto w = SmoothingWindow::for_scale(1e6);
  const Complex v = smoothed_value(LFunctionSpec::dirichlet(4, 1), 1.0, 0.0, w);
  EXPECT_NEAR(v.real(), std::numbers::pi / 4.0, 1e-4);
  EXPECT_NEAR(v.real(), 0.785397663397, 1e-11);
}

TEST(Smoothed, TailAccelerationAgreesWithDirectSum) {
  const auto zeta = LFunctionSpec::zeta();
  const auto chi = LFunctionSpec::dirichlet(7, 2);
  for (double t : {0.0, 137.5, 1000.0, 4000.0}) {
    const auto w = SmoothingWindow::for_scale(std::max(1e5, 10.0 * t));
    for (const auto* spec : {&zeta, &chi}) {
      const Complex a = smoothed_value(*spec, 0.75, t, w);
      const Complex b = smoothed_value_direct(*spec, 0.75, t, w);
      EXPECT_LE(std::abs(a - b), 1e-10) << t;
    }
  }
}

TEST(Smoothed, RootTableMatchesZetaSquaredDirichletSeries) {
  const auto w = SmoothingWindow::for_scale(200.0);
  const auto spec = zeta_squared(2000);
  Complex direct{0.0, 0.0};
  for (std::uint64_t n = 1; n <= w.cutoff; ++n) {
    direct += static_cast<double>(divisor_count(n)) * std::pow(static_cast<double>(n), -1.5) *
              std::exp(-static_cast<double>(n) / w.X) *
              std::polar(1.0, -10.0 * std::log(static_cast<double>(n)));
  }
  EXPECT_LE(std::abs(smoothed_value(spec, 1.5, 10.0, w) - direct), 1e-12);
}

TEST(Smoothed, BudgetAndRange) {
  SmoothedOptions opts;
  opts.term_budget = 1000;
  EXPECT_THROW(smoothed_value_direct(LFunctionSpec::zeta(), 0.75, 0.0, SmoothingWindow::for_scale(1e4), opts),
               BudgetExceeded);
  EXPECT_THROW(smoothed_value(LFunctionSpec::zeta(), 3.5, 0.0, SmoothingWindow::for_scale(100.0)), RangeError);
  EXPECT_THROW(smoothed_value(LFunctionSpec::zeta(), 1.0, 0.0, SmoothingWindow::for_scale(8.0)), RangeError);
}

TEST(ReferenceZeta, KnownValues) {
  EXPECT_NEAR(reference_zeta(2.0, 0.0).real(), 1.6449340668, 1e-9);
  EXPECT_NEAR(reference_zeta(0.5, 0.0).real(), -1.4603545088, 1e-8);
  EXPECT_NEAR(reference_zeta(3.0, 0.0).real(), 1.2020569032, 1e-9);
  EXPECT_NEAR(reference_zeta(2.0, 0.0).real(), std::numbers::pi * std::numbers::pi / 6.0, 1e-13);
}

TEST(ReferenceZeta, FirstZeroAndGrid) {
  EXPECT_LE(std::abs(reference_zeta(0.5, 14.134725141734693)), 1e-9);
  const auto grid = reference_zeta_grid(0.75, 5000.0, 0.37, 600);
  for (std::size_t i = 0; i < grid.size(); i += 37) {
    EXPECT_LE(std::abs(grid[i] - reference_zeta(0.75, 5000.0 + 0.37 * static_cast<double>(i))), 1e-10);
  }
  EXPECT_THROW(reference_zeta(0.4, 10.0), RangeError);
  EXPECT_THROW(reference_zeta(1.0, 0.0), RangeError);
}

TEST(PrimeSums, SmallCases) {
  const auto zeta = LFunctionSpec::zeta();
  EXPECT_EQ(prime_sum_stats(zeta, 100.0, 2), 25.0);
  EXPECT_EQ(prime_sum_stats(zeta, 10.0, 1), 4.0);
  EulerRootTable zero;
  for (std::uint64_t p : primes_up_to(1000)) zero[p] = {Complex{0.0, 0.0}};
  EXPECT_EQ(prime_sum_stats(LFunctionSpec::euler_roots("zero", zero, 1000, 1, 1.0, 1.0), 500.0, 2), 0.0);
  EXPECT_THROW(prime_sum_stats(zeta, 1.5, 1), RangeError);
  EXPECT_THROW(prime_sum_stats(zeta, 10.0, 3), RangeError);
}

TEST(PrimeSums, NormalityRatioAtDeskScale) {
  for (double x : {1e3, 1e4, 1e5, 1e6, 1e7}) {
    const double ratio = prime_sum_stats(LFunctionSpec::zeta(), x, 2) / (x / std::log(x));
    EXPECT_GE(ratio, 0.9) << x;
    EXPECT_LE(ratio, 1.3) << x;
  }
}

TEST(TentSum, ZetaAtOriginEqualsDelta) {
  for (double x : {2.5, 10.0, 57.3}) {
    const TentSum s = tent_sum(LFunctionSpec::zeta(), 0.6, 0.0, x);
    EXPECT_EQ(s.value, s.delta_big);
  }
}

TEST(TentSum, DeltaMatchesEnumeration) {
  const TentSum s = tent_sum(LFunctionSpec::zeta(), 0.5, 0.0, 10.0);
  EXPECT_EQ(s.primes, (std::vector<std::uint64_t>{5, 7, 11, 13, 17, 19, 23}));
  EXPECT_NEAR(s.delta_big, oracle::tent_delta(0.5, 10.0), 1e-13);
  EXPECT_NEAR(s.delta_big, 1.0885849365584, 1e-12);
}

TEST(TentSum, VanishingCoefficientsGiveZero) {
  EulerRootTable zero;
  for (std::uint64_t p : primes_up_to(100)) zero[p] = {Complex{0.0, 0.0}};
  const auto spec = LFunctionSpec::euler_roots("zero", zero, 100, 1, 1.0, 1.0);
  const TentSum s = tent_sum(spec, 0.5, 3.0, 10.0);
  EXPECT_EQ(s.value, 0.0);
  EXPECT_EQ(s.delta_big, 0.0);
  EXPECT_THROW(tent_sum(LFunctionSpec::zeta(), 0.5, 0.0, 2.0), RangeError);
}

TEST(TentSum, PhaseShiftByPiNegates) {
  const auto chi = LFunctionSpec::dirichlet(5, 1);
  const TentSum a = tent_sum(chi, 0.7, 123.4, 20.0, 0.0);
  const TentSum b = tent_sum(chi, 0.7, 123.4, 20.0, std::numbers::pi);
  EXPECT_NEAR(a.value, -b.value, 1e-13);
}
