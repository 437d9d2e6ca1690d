#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace extrema {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter lies outside the domain an operation supports.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Malformed spec, instance or table file.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A coefficient needs Euler data for a prime the spec does not store.
class InsufficientEulerData : public Error {
 public:
  explicit InsufficientEulerData(std::uint64_t prime);
  std::uint64_t prime() const noexcept { return prime_; }

 private:
  std::uint64_t prime_;
};

/// Work needed by an operation is larger than the configured budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t required, std::uint64_t budget);
  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

/// The resonator prime window collapsed (lower end not below upper end).
class DegenerateWindow : public Error {
 public:
  using Error::Error;
};

/// Resonator length N exceeds the cap relative to the height T.
class ResonatorTooLong : public Error {
 public:
  using Error::Error;
};

}  // namespace extrema
