#include "extrema/primes.hpp"

#include <cmath>
#include <limits>

#include "extrema/errors.hpp"

namespace extrema {

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  if (limit > (std::uint64_t{1} << 34)) throw RangeError("prime sieve limit too large");
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t p = 2; p * p <= limit; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t q = p * p; q <= limit; q += p) composite[q] = true;
  }
  for (std::uint64_t p = 2; p <= limit; ++p) {
    if (!composite[p]) out.push_back(p);
  }
  return out;
}

std::vector<std::uint64_t> primes_between(double lo, double hi) {
  std::vector<std::uint64_t> out;
  if (!(hi >= 2.0) || hi < lo) return out;
  const auto top = static_cast<std::uint64_t>(std::floor(hi));
  for (std::uint64_t p : primes_up_to(top)) {
    const auto pd = static_cast<double>(p);
    if (pd >= lo && pd <= hi) out.push_back(p);
  }
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t d = 2; d <= n / d; d += (d == 2 ? 1 : 2)) {
    if (n % d != 0) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint32_t> smallest_prime_factors(std::uint32_t limit) {
  std::vector<std::uint32_t> spf(static_cast<std::size_t>(limit) + 1, 0);
  std::vector<std::uint32_t> primes;
  for (std::uint32_t i = 2; i <= limit; ++i) {
    if (spf[i] == 0) {
      spf[i] = i;
      primes.push_back(i);
    }
    for (std::uint32_t p : primes) {
      const std::uint64_t ip = std::uint64_t{i} * p;
      if (p > spf[i] || ip > limit) break;
      spf[ip] = p;
    }
  }
  return spf;
}

}  // namespace extrema
