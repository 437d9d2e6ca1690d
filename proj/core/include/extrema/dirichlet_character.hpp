#pragma once

#include <cstdint>
#include <vector>

#include "extrema/numeric.hpp"

namespace extrema {

/// A Dirichlet character modulo q, selected by an index in [0, phi(q)).
///
/// The unit group is split by CRT into prime-power components with fixed
/// generators (least primitive root for odd p^k; 3 mod 4; -1 and 5 mod 2^k,
/// k >= 3). The index is read in mixed radix over those generators, least
/// significant first, so index 0 is always the principal character.
class DirichletCharacter {
 public:
  DirichletCharacter(std::uint64_t modulus, std::uint64_t index);

  std::uint64_t modulus() const noexcept { return modulus_; }
  std::uint64_t index() const noexcept { return index_; }
  std::uint64_t group_order() const noexcept { return group_order_; }
  bool principal() const noexcept { return index_ == 0; }

  Complex operator()(std::uint64_t n) const noexcept { return table_[n % modulus_]; }

  /// chi(r) for r = 0..q-1.
  const std::vector<Complex>& table() const noexcept { return table_; }

 private:
  std::uint64_t modulus_;
  std::uint64_t index_;
  std::uint64_t group_order_ = 1;
  std::vector<Complex> table_;
};

}  // namespace extrema
