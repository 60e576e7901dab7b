#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "neumaier/arith.hpp"
#include "neumaier/finite_field.hpp"

namespace neumaier {

/// The m x m array of cyclotomic numbers c_m(alpha; a, b) for one (q, alpha, m).
///
/// counts(a, b) is the number of exponents k with k = a (mod m) such that
/// alpha^k + 1 is a nonzero power alpha^j with j = b (mod m). Indices are
/// taken modulo m.
struct CyclotomicTable {
  std::uint32_t q = 0;
  std::uint32_t m = 0;
  std::uint32_t n = 0;                      // q = 1 + m n
  std::optional<std::uint32_t> alpha_id;    // encoding of alpha; absent for closed forms
  std::vector<std::int64_t> counts;         // row-major, m * m

  std::int64_t operator()(std::int64_t a, std::int64_t b) const {
    const auto mm = static_cast<std::int64_t>(m);
    return counts[static_cast<std::size_t>(mod_floor(a, mm) * mm + mod_floor(b, mm))];
  }
  std::int64_t& at(std::int64_t a, std::int64_t b) {
    const auto mm = static_cast<std::int64_t>(m);
    return counts[static_cast<std::size_t>(mod_floor(a, mm) * mm + mod_floor(b, mm))];
  }

  nlohmann::json to_json() const;
  friend bool operator==(const CyclotomicTable& x, const CyclotomicTable& y) {
    return x.q == y.q && x.m == y.m && x.counts == y.counts;
  }
};

// Brute-force count through the discrete-log table. Throws when m does not divide q - 1 or m < 2.
CyclotomicTable cyclotomic_numbers(const FieldSpec& f, const DlogTable& alpha, std::uint32_t m);

/// Quadratic-form invariants for m = 3 (4q = u^2 + 27 v^2) and m = 4 (q = u^2 + 4 v^2).
/// The sign of v is tied to a primitive element; see uv_decomposition.
struct UVPair {
  std::uint32_t m = 0;
  std::uint32_t q = 0;
  std::int64_t u = 0;
  std::int64_t v = 0;
  friend bool operator==(const UVPair&, const UVPair&) = default;
};

// u and |v| from the representation alone (no primitive element involved).
// Enumerates all representations and applies u = 1 (mod m) and gcd(u, p) = 1 when p = 1 (mod m).
UVPair uv_magnitudes(std::uint32_t m, const PrimePower& q);

// u, and v with the sign that reproduces the closed-form tables for this alpha.
UVPair uv_decomposition(const FieldSpec& f, const DlogTable& alpha, std::uint32_t m);

// Closed-form tables for m in {2, 3, 4}. m = 3, 4 require uv. Every division is checked for exactness.
CyclotomicTable closed_form(std::uint32_t m, std::uint32_t q, const std::optional<UVPair>& uv);

// sum_{a,b} t1(a,b) * t2(a+i-j, b+i-k).
std::int64_t x_sum(const CyclotomicTable& t1, const CyclotomicTable& t2, std::int64_t i, std::int64_t j,
                   std::int64_t k);

// Row, column and symmetry identities of cyclotomic numbers. Returns a description
// of the first violated identity, or nullopt when all hold.
std::optional<std::string> check_sum_rules(const CyclotomicTable& t);

struct UniformityReport {
  bool uniform = false;
  std::optional<std::int64_t> r;       // sqrt(q) with r = 1 (mod m), when it exists
  bool closed_form_checked = false;
  bool closed_form_holds = false;
};

UniformityReport is_uniform(const CyclotomicTable& t);

// True when -1 is congruent to a power of p modulo m.
bool minus_one_is_power_of(std::uint32_t p, std::uint32_t m);

}  // namespace neumaier
