#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "json.hpp"

namespace neumaier {

// An element of GF(p^r), stored by its integer encoding sum(coeffs[i] * p^i).
struct FieldElement {
  std::uint32_t index = 0;
  auto operator<=>(const FieldElement&) const = default;
};

/// Explicit GF(p^r) with a fixed monic irreducible modulus.
///
/// The modulus is the lexicographically smallest irreducible monic polynomial
/// of degree r, comparing coefficient tuples (c0, c1, ..., c_{r-1}) from the
/// constant term upwards. For r = 1 the modulus is recorded as [0] and
/// arithmetic is plain residue arithmetic mod p.
class FieldSpec {
 public:
  static constexpr std::uint64_t kMaxOrder = 1ull << 31;

  // Throws InvalidArgument for non-prime p, r = 0 or p^r > 2^31.
  static FieldSpec build(std::uint32_t p, std::uint32_t r);

  std::uint32_t p() const { return p_; }
  std::uint32_t r() const { return r_; }
  std::uint32_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  bool contains(FieldElement a) const { return a.index < q_; }

  std::vector<std::uint32_t> coeffs(FieldElement a) const;
  FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement pow(FieldElement a, std::uint64_t e) const;
  // Throws InvalidArgument on zero.
  FieldElement inv(FieldElement a) const;

  // Order of a in the multiplicative group; a must be nonzero.
  std::uint64_t multiplicative_order(FieldElement a) const;
  bool is_primitive(FieldElement a) const;

  // All generators of GF(q)*, ascending by encoding. Length is phi(q - 1).
  std::vector<FieldElement> primitive_elements() const;
  // Smallest generator by encoding.
  FieldElement first_primitive() const;

  nlohmann::json to_json() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.p_ == b.p_ && a.r_ == b.r_ && a.modulus_ == b.modulus_;
  }

 private:
  FieldSpec(std::uint32_t p, std::uint32_t r, std::vector<std::uint32_t> modulus);

  std::uint32_t p_;
  std::uint32_t r_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> place_;  // p^i
  std::vector<std::uint64_t> order_divisors_;  // primes dividing q - 1
};

// Tests irreducibility of the monic polynomial x^r + sum coeffs[i] x^i over GF(p).
bool is_irreducible_monic(std::uint32_t p, std::span<const std::uint32_t> low_coeffs);

/// Discrete logarithm tables for a primitive element.
class DlogTable {
 public:
  static constexpr std::uint32_t kNoLog = 0xFFFFFFFFu;

  // Throws InvalidArgument when alpha is not primitive in f.
  DlogTable(const FieldSpec& f, FieldElement alpha);

  FieldElement alpha() const { return alpha_; }
  std::uint32_t q() const { return static_cast<std::uint32_t>(log_.size()); }
  std::uint32_t group_order() const { return q() - 1; }

  // Exponent k in [0, q-1) with alpha^k = x. x must be nonzero.
  std::uint32_t log(FieldElement x) const { return log_[x.index]; }
  FieldElement pow(std::uint64_t k) const { return {pow_[k % pow_.size()]}; }
  std::span<const std::uint32_t> pow_table() const { return pow_; }
  std::span<const std::uint32_t> log_table() const { return log_; }

 private:
  FieldElement alpha_;
  std::vector<std::uint32_t> pow_;
  std::vector<std::uint32_t> log_;
};

}  // namespace neumaier
