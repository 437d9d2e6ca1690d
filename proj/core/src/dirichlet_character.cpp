#include "extrema/dirichlet_character.hpp"

#include <numbers>
#include <numeric>

#include "extrema/errors.hpp"
#include "extrema/primes.hpp"

namespace extrema {

namespace {

constexpr std::uint64_t kMaxModulus = 10'000'000;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

struct Generator {
  std::uint64_t value;
  std::uint64_t order;
};

// One CRT component Z/P with its generators and a discrete-log table.
struct Component {
  std::uint64_t P = 1;
  std::vector<Generator> gens;
  // logs[r * gens.size() + g] = exponent of generator g in r; valid only for units.
  std::vector<std::uint64_t> logs;
};

std::uint64_t primitive_root_odd(std::uint64_t p, int k) {
  const std::uint64_t phi_p = p - 1;
  const auto factors = factorize(phi_p);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto [q, e] : factors) {
      (void)e;
      if (pow_mod(g, phi_p / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    if (k >= 2 && pow_mod(g, p - 1, p * p) == 1) return g + p;
    return g;
  }
  return 1;  // p == 2 only; callers handle 2 separately
}

Component make_component(std::uint64_t p, int k) {
  Component c;
  for (int i = 0; i < k; ++i) c.P *= p;
  if (p != 2) {
    c.gens.push_back({primitive_root_odd(p, k), c.P / p * (p - 1)});
  } else if (k == 2) {
    c.gens.push_back({3, 2});
  } else if (k >= 3) {
    c.gens.push_back({c.P - 1, 2});
    c.gens.push_back({5, c.P / 4});
  }
  const std::size_t ng = c.gens.size();
  c.logs.assign(c.P * std::max<std::size_t>(ng, 1), 0);
  if (ng == 0) return c;
  if (ng == 1) {
    std::uint64_t x = 1;
    for (std::uint64_t a = 0; a < c.gens[0].order; ++a) {
      c.logs[x] = a;
      x = mul_mod(x, c.gens[0].value, c.P);
    }
  } else {
    std::uint64_t x0 = 1;
    for (std::uint64_t a = 0; a < c.gens[0].order; ++a) {
      std::uint64_t x = x0;
      for (std::uint64_t b = 0; b < c.gens[1].order; ++b) {
        c.logs[x * 2] = a;
        c.logs[x * 2 + 1] = b;
        x = mul_mod(x, c.gens[1].value, c.P);
      }
      x0 = mul_mod(x0, c.gens[0].value, c.P);
    }
  }
  return c;
}

// e^{2 pi i num / den} with exact values on the real and imaginary axes.
Complex unit_root(std::uint64_t num, std::uint64_t den) {
  num %= den;
  if (num == 0) return {1.0, 0.0};
  if (2 * num == den) return {-1.0, 0.0};
  if (4 * num == den) return {0.0, 1.0};
  if (4 * num == 3 * den) return {0.0, -1.0};
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
  return std::polar(1.0, angle);
}

}  // namespace

DirichletCharacter::DirichletCharacter(std::uint64_t modulus, std::uint64_t index)
    : modulus_(modulus), index_(index) {
  if (modulus == 0 || modulus > kMaxModulus) {
    throw RangeError("character modulus must lie in [1, 10^7]");
  }
  std::vector<Component> comps;
  for (auto [p, k] : factorize(modulus)) comps.push_back(make_component(p, k));

  // Mixed-radix digits of the index, one per generator.
  std::vector<std::uint64_t> digits;
  std::uint64_t lcm = 1;
  for (const auto& c : comps) {
    for (const auto& g : c.gens) {
      group_order_ *= g.order;
      lcm = std::lcm(lcm, g.order);
    }
  }
  if (index >= group_order_) {
    throw RangeError("character index " + std::to_string(index) + " out of range for modulus " +
                     std::to_string(modulus) + " (group order " + std::to_string(group_order_) +
                     ")");
  }
  std::uint64_t rest = index;
  for (const auto& c : comps) {
    for (const auto& g : c.gens) {
      digits.push_back(rest % g.order);
      rest /= g.order;
    }
  }

  table_.assign(modulus, Complex{0.0, 0.0});
  for (std::uint64_t r = 0; r < modulus; ++r) {
    if (std::gcd(r, modulus) != 1) continue;
    std::uint64_t num = 0;
    std::size_t d = 0;
    for (const auto& c : comps) {
      const std::uint64_t rr = r % c.P;
      for (std::size_t g = 0; g < c.gens.size(); ++g, ++d) {
        const std::uint64_t log = c.logs[rr * c.gens.size() + g];
        const std::uint64_t scale = lcm / c.gens[g].order;
        num = (num + mul_mod(mul_mod(digits[d], log, lcm), scale, lcm)) % lcm;
      }
    }
    table_[r] = unit_root(num, lcm);
  }
}

}  // namespace extrema
