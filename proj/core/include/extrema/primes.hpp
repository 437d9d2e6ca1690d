#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace extrema {

/// All primes p <= limit, ascending (sieve of Eratosthenes).
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// Primes p with lo <= p <= hi for real bounds, ascending.
std::vector<std::uint64_t> primes_between(double lo, double hi);

/// Deterministic trial-division primality.
bool is_prime(std::uint64_t n);

/// Prime factorisation of n >= 1 as (p, exponent) pairs, ascending p.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

/// Smallest-prime-factor table for 0..limit (entries 0 and 1 are 0).
std::vector<std::uint32_t> smallest_prime_factors(std::uint32_t limit);

}  // namespace extrema
