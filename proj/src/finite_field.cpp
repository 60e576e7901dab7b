#include "neumaier/finite_field.hpp"

#include <algorithm>
#include <string>

#include "neumaier/arith.hpp"
#include "neumaier/error.hpp"

namespace neumaier {
namespace {

using Poly = std::vector<std::uint64_t>;  // low degree first, over GF(p)

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod_prime(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

// a mod m, m monic or with invertible leading coefficient.
Poly poly_rem(Poly a, const Poly& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = inv_mod_prime(m.back(), p);
  while (a.size() >= m.size()) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] + p - c * m[i] % p) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  return poly_rem(std::move(out), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
  Poly result{1};
  base = poly_rem(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

bool is_irreducible_monic(std::uint32_t p, std::span<const std::uint32_t> low_coeffs) {
  const std::size_t r = low_coeffs.size();
  if (r == 0) return false;
  if (r == 1) return true;
  Poly f(low_coeffs.begin(), low_coeffs.end());
  f.push_back(1);
  if (low_coeffs[0] == 0) return false;  // divisible by x
  // Ben-Or: f is irreducible iff gcd(f, x^(p^k) - x) = 1 for 1 <= k <= r/2.
  Poly xpk{0, 1};
  for (std::size_t k = 1; k <= r / 2; ++k) {
    xpk = poly_powmod(xpk, p, f, p);
    Poly diff = xpk;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    const Poly g = poly_gcd(f, diff, p);
    if (g.size() > 1) return false;
  }
  return true;
}

FieldSpec FieldSpec::build(std::uint32_t p, std::uint32_t r) {
  if (!is_prime(p)) throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
  if (r == 0) throw InvalidArgument("field degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < r; ++i) {
    q *= p;
    if (q > kMaxOrder) {
      throw InvalidArgument("field order " + std::to_string(p) + "^" + std::to_string(r) + " exceeds 2^31");
    }
  }
  if (r == 1) return FieldSpec(p, 1, {0});

  // Enumerate (c0, ..., c_{r-1}) lexicographically with c0 most significant.
  std::vector<std::uint32_t> c(r, 0);
  while (true) {
    if (is_irreducible_monic(p, c)) return FieldSpec(p, r, c);
    std::size_t i = r;
    while (i > 0) {
      --i;
      if (++c[i] < p) break;
      c[i] = 0;
      if (i == 0) throw InternalError("no irreducible polynomial found");
    }
  }
}

FieldSpec::FieldSpec(std::uint32_t p, std::uint32_t r, std::vector<std::uint32_t> modulus)
    : p_(p), r_(r), q_(1), modulus_(std::move(modulus)) {
  place_.reserve(r);
  for (std::uint32_t i = 0; i < r; ++i) {
    place_.push_back(q_);
    q_ *= p;
  }
  order_divisors_ = prime_divisors(q_ - 1);
}

std::vector<std::uint32_t> FieldSpec::coeffs(FieldElement a) const {
  std::vector<std::uint32_t> out(r_);
  std::uint32_t v = a.index;
  for (std::uint32_t i = 0; i < r_; ++i) {
    out[i] = v % p_;
    v /= p_;
  }
  return out;
}

FieldElement FieldSpec::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != r_) throw InvalidArgument("coefficient vector has wrong length");
  std::uint32_t v = 0;
  for (std::uint32_t i = 0; i < r_; ++i) {
    if (coeffs[i] >= p_) throw InvalidArgument("coefficient out of range");
    v += coeffs[i] * place_[i];
  }
  return {v};
}

FieldElement FieldSpec::add(FieldElement a, FieldElement b) const {
  if (r_ == 1) return {static_cast<std::uint32_t>((std::uint64_t{a.index} + b.index) % p_)};
  std::uint32_t out = 0;
  std::uint32_t x = a.index;
  std::uint32_t y = b.index;
  for (std::uint32_t i = 0; i < r_; ++i) {
    out += ((x % p_ + y % p_) % p_) * place_[i];
    x /= p_;
    y /= p_;
  }
  return {out};
}

FieldElement FieldSpec::neg(FieldElement a) const {
  if (r_ == 1) return {a.index == 0 ? 0 : p_ - a.index};
  std::uint32_t out = 0;
  std::uint32_t x = a.index;
  for (std::uint32_t i = 0; i < r_; ++i) {
    const std::uint32_t d = x % p_;
    out += (d == 0 ? 0 : p_ - d) * place_[i];
    x /= p_;
  }
  return {out};
}

FieldElement FieldSpec::mul(FieldElement a, FieldElement b) const {
  if (r_ == 1) return {static_cast<std::uint32_t>(std::uint64_t{a.index} * b.index % p_)};
  // Schoolbook product then reduction by the monic modulus, coefficients < 2^16.
  std::uint64_t prod[64] = {};
  std::uint32_t x = a.index;
  std::uint32_t ac[32];
  std::uint32_t bc[32];
  std::uint32_t y = b.index;
  for (std::uint32_t i = 0; i < r_; ++i) {
    ac[i] = x % p_;
    bc[i] = y % p_;
    x /= p_;
    y /= p_;
  }
  for (std::uint32_t i = 0; i < r_; ++i) {
    if (ac[i] == 0) continue;
    for (std::uint32_t j = 0; j < r_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{ac[i]} * bc[j]) % p_;
  }
  for (std::uint32_t d = 2 * r_ - 2; d >= r_; --d) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    // x^d = x^(d-r) * x^r, and x^r = -sum modulus[i] x^i.
    for (std::uint32_t i = 0; i < r_; ++i) {
      prod[d - r_ + i] = (prod[d - r_ + i] + (p_ - modulus_[i]) % p_ * c) % p_;
    }
  }
  std::uint32_t out = 0;
  for (std::uint32_t i = 0; i < r_; ++i) out += static_cast<std::uint32_t>(prod[i]) * place_[i];
  return {out};
}

FieldElement FieldSpec::pow(FieldElement a, std::uint64_t e) const {
  FieldElement result = one();
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

FieldElement FieldSpec::inv(FieldElement a) const {
  if (a.index == 0) throw InvalidArgument("zero has no multiplicative inverse");
  return pow(a, q_ - 2);
}

std::uint64_t FieldSpec::multiplicative_order(FieldElement a) const {
  if (a.index == 0) throw InvalidArgument("zero has no multiplicative order");
  std::uint64_t order = q_ - 1;
  for (auto l : order_divisors_) {
    while (order % l == 0 && pow(a, order / l) == one()) order /= l;
  }
  return order;
}

bool FieldSpec::is_primitive(FieldElement a) const {
  if (a.index == 0 || a.index >= q_) return false;
  if (q_ == 2) return true;
  for (auto l : order_divisors_) {
    if (pow(a, (q_ - 1) / l) == one()) return false;
  }
  return true;
}

FieldElement FieldSpec::first_primitive() const {
  for (std::uint32_t i = 1; i < q_; ++i) {
    if (is_primitive({i})) return {i};
  }
  throw InternalError("multiplicative group has no generator");
}

std::vector<FieldElement> FieldSpec::primitive_elements() const {
  const FieldElement alpha = first_primitive();
  const std::uint64_t order = q_ - 1;
  std::vector<FieldElement> out;
  FieldElement x = one();
  for (std::uint64_t k = 0; k < order; ++k) {
    if (gcd_u64(k, order) == 1) out.push_back(x);
    x = mul(x, alpha);
  }
  if (order == 1) out = {one()};
  std::sort(out.begin(), out.end());
  return out;
}

nlohmann::json FieldSpec::to_json() const {
  return nlohmann::json{{"p", p_}, {"r", r_}, {"modulus", modulus_}};
}

DlogTable::DlogTable(const FieldSpec& f, FieldElement alpha) : alpha_(alpha) {
  if (!f.is_primitive(alpha)) {
    throw InvalidArgument("element " + std::to_string(alpha.index) + " is not primitive in GF(" +
                          std::to_string(f.q()) + ")");
  }
  const std::uint32_t order = f.q() - 1;
  pow_.resize(order);
  log_.assign(f.q(), kNoLog);
  FieldElement x = f.one();
  for (std::uint32_t k = 0; k < order; ++k) {
    pow_[k] = x.index;
    log_[x.index] = k;
    x = f.mul(x, alpha);
  }
}

}  // namespace neumaier
