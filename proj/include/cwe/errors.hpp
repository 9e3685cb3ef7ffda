#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cwe {

// Invalid parameters (non-prime p, gcd violations, parity, mismatched
// contexts). CLI maps this to exit code 2.
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// Request exceeds the enumeration caps below. CLI maps this to exit code 3.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Hard bound on p^m for operations that enumerate a whole field.
inline constexpr std::int64_t kEnumerationCap = 2'000'000;

// Hard bound on p^{m+2} for the triple character sum.
inline constexpr std::int64_t kTripleSumCap = 20'000'000;

}  // namespace cwe
