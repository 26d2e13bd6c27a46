#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zlab {

/// Incompatible parameters between operands (modulus, alphabet, bound, base group).
struct parameter_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Value outside the mathematical domain of an operation (non-unit, non-prime, ...).
struct value_error : std::domain_error {
  using std::domain_error::domain_error;
};

/// Malformed textual input (word or series grammar).
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A configured budget was exhausted. `reached` carries the partial size attained.
struct resource_error : std::runtime_error {
  std::size_t reached;
  resource_error(const std::string& what, std::size_t reached_)
      : std::runtime_error(what), reached(reached_) {}
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::uint32_t mod_reduce(std::int64_t v, std::uint32_t m) {
  std::int64_t r = v % static_cast<std::int64_t>(m);
  if (r < 0) r += m;
  return static_cast<std::uint32_t>(r);
}

}  // namespace zlab
