#include "extrema/errors.hpp"

namespace extrema {

InsufficientEulerData::InsufficientEulerData(std::uint64_t prime)
    : Error("insufficient Euler data: no root tuple stored for prime " + std::to_string(prime)),
      prime_(prime) {}

BudgetExceeded::BudgetExceeded(const std::string& what, std::uint64_t required,
                               std::uint64_t budget)
    : Error("budget exceeded: " + what + " requires " + std::to_string(required) +
            " but the budget is " + std::to_string(budget)),
      required_(required),
      budget_(budget) {}

}  // namespace extrema
