#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace neumaier {

struct PrimePower {
  std::uint32_t q = 0;
  std::uint32_t p = 0;
  std::uint32_t r = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

bool is_prime(std::uint64_t n);

// p^r decomposition of q, or nullopt when q is not a prime power (q >= 2).
std::optional<PrimePower> as_prime_power(std::uint64_t q);

// Distinct prime divisors in ascending order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

// Least non-negative residue.
inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Exact integer square root: floor(sqrt(n)).
std::uint64_t isqrt(std::uint64_t n);

}  // namespace neumaier
