#include "neumaier/cyclotomy.hpp"

#include <string>

#include "neumaier/error.hpp"

namespace neumaier {
namespace {

std::int64_t exact_div(std::int64_t num, std::int64_t den, const char* what) {
  if (num % den != 0) {
    throw InvalidArgument(std::string("closed form for ") + what + " is not integral: " + std::to_string(num) +
                          "/" + std::to_string(den));
  }
  return num / den;
}

CyclotomicTable empty_table(std::uint32_t q, std::uint32_t m) {
  if (m < 2) throw InvalidArgument("cyclotomic order must be at least 2");
  if ((q - 1) % m != 0) {
    throw InvalidArgument("order " + std::to_string(m) + " does not divide q - 1 = " + std::to_string(q - 1));
  }
  CyclotomicTable t;
  t.q = q;
  t.m = m;
  t.n = (q - 1) / m;
  t.counts.assign(std::size_t{m} * m, 0);
  return t;
}

}  // namespace

nlohmann::json CyclotomicTable::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (std::uint32_t a = 0; a < m; ++a) {
    nlohmann::json row = nlohmann::json::array();
    for (std::uint32_t b = 0; b < m; ++b) row.push_back((*this)(a, b));
    rows.push_back(std::move(row));
  }
  nlohmann::json j{{"q", q}, {"m", m}, {"n", n}, {"counts", rows}};
  j["alpha"] = alpha_id ? nlohmann::json(*alpha_id) : nlohmann::json(nullptr);
  return j;
}

CyclotomicTable cyclotomic_numbers(const FieldSpec& f, const DlogTable& alpha, std::uint32_t m) {
  CyclotomicTable t = empty_table(f.q(), m);
  t.alpha_id = alpha.alpha().index;
  const auto pow = alpha.pow_table();
  const auto log = alpha.log_table();
  const std::uint32_t order = f.q() - 1;
  const FieldElement one = f.one();
  for (std::uint32_t k = 0; k < order; ++k) {
    const FieldElement shifted = f.add({pow[k]}, one);
    if (shifted.index == 0) continue;
    t.counts[std::size_t{k % m} * m + log[shifted.index] % m] += 1;
  }
  return t;
}

UVPair uv_magnitudes(std::uint32_t m, const PrimePower& q) {
  if (m != 3 && m != 4) throw InvalidArgument("u/v decomposition is defined for m = 3 or 4");
  if ((q.q - 1) % m != 0) throw InvalidArgument("q must be 1 mod m for the u/v decomposition");
  // m = 3: 4q = u^2 + 27 v^2;  m = 4: q = u^2 + 4 v^2.
  const std::int64_t target = m == 3 ? 4 * std::int64_t{q.q} : std::int64_t{q.q};
  const std::int64_t weight = m == 3 ? 27 : 4;
  std::optional<UVPair> found;
  for (std::int64_t v = 0; weight * v * v <= target; ++v) {
    const std::int64_t rest = target - weight * v * v;
    const auto root = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(rest)));
    if (root * root != rest) continue;
    for (std::int64_t u : {root, -root}) {
      if (mod_floor(u, m) != 1) continue;
      if (q.p % m == 1 && gcd_u64(static_cast<std::uint64_t>(u < 0 ? -u : u), q.p) != 1) continue;
      UVPair cand{m, q.q, u, v};
      if (found && !(*found == cand)) {
        throw InternalError("u/v representation of q = " + std::to_string(q.q) + " is not unique");
      }
      found = cand;
    }
  }
  if (!found) throw InternalError("no u/v representation for q = " + std::to_string(q.q));
  return *found;
}

UVPair uv_decomposition(const FieldSpec& f, const DlogTable& alpha, std::uint32_t m) {
  const auto pp = as_prime_power(f.q());
  UVPair uv = uv_magnitudes(m, *pp);
  if (uv.v == 0) return uv;
  const CyclotomicTable brute = cyclotomic_numbers(f, alpha, m);
  const std::int64_t q = f.q();
  const std::int64_t u = uv.u;
  for (std::int64_t v : {uv.v, -uv.v}) {
    std::int64_t num = 0;
    std::int64_t den = 0;
    std::int64_t observed = 0;
    if (m == 3) {
      num = 2 * q - 4 - u - 9 * v;
      den = 18;
      observed = brute(0, 1);
    } else {
      const std::int64_t rn = brute.n % 2;
      num = q + 2 * u - 3 + 8 * v + 4 * rn;
      den = 16;
      observed = brute(0, 1 + 2 * rn);
    }
    if (num % den == 0 && num / den == observed) {
      uv.v = v;
      return uv;
    }
  }
  throw InternalError("neither sign of v reproduces the brute-force cyclotomic numbers for q = " +
                      std::to_string(q));
}

CyclotomicTable closed_form(std::uint32_t m, std::uint32_t q, const std::optional<UVPair>& uv) {
  if (m < 2 || m > 4) throw InvalidArgument("closed forms exist only for m in {2, 3, 4}");
  CyclotomicTable t = empty_table(q, m);
  const std::int64_t Q = q;
  const std::int64_t n = t.n;
  const std::int64_t rn = n % 2;

  if (m == 2) {
    const std::int64_t a = exact_div(n - 2 + 3 * rn, 2, "c2(0,r)");
    const std::int64_t b = exact_div(n - rn, 2, "c2(1,0)");
    t.at(0, rn) = a;
    t.at(0, 1 - rn) = b;
    t.at(1, 0) = b;
    t.at(1, 1) = b;
    return t;
  }

  if (!uv || uv->m != m || uv->q != q) throw InvalidArgument("matching u/v data required for m = 3, 4");
  const std::int64_t u = uv->u;
  const std::int64_t v = uv->v;

  if (m == 3) {
    const std::int64_t c00 = exact_div(Q - 8 + u, 9, "c3(0,0)");
    const std::int64_t c01 = exact_div(2 * Q - 4 - u - 9 * v, 18, "c3(0,1)");
    const std::int64_t c02 = exact_div(2 * Q - 4 - u + 9 * v, 18, "c3(0,2)");
    const std::int64_t c12 = exact_div(Q + 1 + u, 9, "c3(1,2)");
    t.at(0, 0) = c00;
    t.at(0, 1) = t.at(1, 0) = t.at(2, 2) = c01;
    t.at(0, 2) = t.at(2, 0) = t.at(1, 1) = c02;
    t.at(1, 2) = t.at(2, 1) = c12;
    return t;
  }

  const std::int64_t s = 2 * rn;
  const std::int64_t A = exact_div(Q - 6 * u - 11 + 12 * rn, 16, "c4 class A");
  const std::int64_t B = exact_div(Q + 2 * u - 3 - 8 * v + 4 * rn, 16, "c4 class B");
  const std::int64_t C = exact_div(Q + 2 * u - 3 - 4 * rn, 16, "c4 class C");
  const std::int64_t D = exact_div(Q + 2 * u - 3 + 8 * v + 4 * rn, 16, "c4 class D");
  // n even: (q - 2u + 1)/16, Dickson's value; a +2u there is never integral together with class A
  const std::int64_t E = exact_div(Q - 2 * u + 1 - 4 * rn, 16, "c4 class E");
  for (std::int64_t i = 1; i <= 3; ++i) {
    for (std::int64_t j = 1; j <= 3; ++j) {
      if (i != j) t.at(i, j + s) = E;
    }
  }
  t.at(0, s) = A;
  t.at(1, 1 + s) = t.at(0, 3 + s) = t.at(3, s) = B;
  t.at(2, 2 + s) = t.at(0, 2 + s) = t.at(2, s) = C;
  t.at(3, 3 + s) = t.at(0, 1 + s) = t.at(1, s) = D;
  return t;
}

std::int64_t x_sum(const CyclotomicTable& t1, const CyclotomicTable& t2, std::int64_t i, std::int64_t j,
                   std::int64_t k) {
  if (t1.m != t2.m) throw InvalidArgument("x_sum needs tables of the same order");
  const auto m = static_cast<std::int64_t>(t1.m);
  std::int64_t total = 0;
  for (std::int64_t a = 0; a < m; ++a) {
    for (std::int64_t b = 0; b < m; ++b) total += t1(a, b) * t2(a + i - j, b + i - k);
  }
  return total;
}

std::optional<std::string> check_sum_rules(const CyclotomicTable& t) {
  const auto m = static_cast<std::int64_t>(t.m);
  const std::int64_t n = t.n;
  const bool qn_odd = (std::int64_t{t.q} * n) % 2 == 1;
  auto where = [](const char* rule, std::int64_t a, std::int64_t b) {
    return std::string(rule) + " fails at (" + std::to_string(a) + "," + std::to_string(b) + ")";
  };
  for (std::int64_t a = 0; a < m; ++a) {
    for (std::int64_t b = 0; b < m; ++b) {
      const std::int64_t mirror = qn_odd ? t(b + m / 2, a + m / 2) : t(b, a);
      if (t(a, b) != mirror) return where("symmetry", a, b);
    }
  }
  for (std::int64_t b = 0; b < m; ++b) {
    std::int64_t col = 0;
    for (std::int64_t a = 0; a < m; ++a) col += t(a, b);
    if (col != (b == 0 ? n - 1 : n)) return where("sum over a", -1, b);
  }
  for (std::int64_t a = 0; a < m; ++a) {
    std::int64_t row = 0;
    for (std::int64_t b = 0; b < m; ++b) row += t(a, b);
    const bool short_row = qn_odd ? (m % 2 == 0 && a == m / 2) : a == 0;
    if (row != (short_row ? n - 1 : n)) return where("sum over b", a, -1);
  }
  return std::nullopt;
}

UniformityReport is_uniform(const CyclotomicTable& t) {
  UniformityReport rep;
  const auto m = static_cast<std::int64_t>(t.m);
  bool uniform = true;
  const std::int64_t diag = t(0, 1);
  for (std::int64_t i = 1; i < m && uniform; ++i) {
    uniform = t(i, 0) == diag && t(0, i) == diag && t(i, i) == diag;
  }
  const std::int64_t off = m > 2 ? t(1, 2) : 0;
  for (std::int64_t i = 1; i < m && uniform; ++i) {
    for (std::int64_t j = 1; j < m && uniform; ++j) {
      if (i != j) uniform = t(i, j) == off;
    }
  }
  rep.uniform = uniform;
  const auto root = static_cast<std::int64_t>(isqrt(t.q));
  if (root * root == std::int64_t{t.q}) {
    for (std::int64_t r : {root, -root}) {
      if (mod_floor(r, m) == 1) {
        rep.r = r;
        break;
      }
    }
  }
  if (uniform && rep.r) {
    const std::int64_t r = *rep.r;
    const std::int64_t m2 = m * m;
    rep.closed_form_checked = true;
    // (r-1)^2/m^2 - (m-3)(r-1)/m - 1, scaled by m^2 to stay integral.
    const bool c00 = t(0, 0) * m2 == (r - 1) * (r - 1) - (m - 3) * (r - 1) * m - m2;
    const bool c0i = diag * m2 == (r - 1) * (r - 1 + m);
    const bool cij = m <= 2 || off * m2 == (r - 1) * (r - 1);
    rep.closed_form_holds = c00 && c0i && cij;
  }
  return rep;
}

bool minus_one_is_power_of(std::uint32_t p, std::uint32_t m) {
  const std::uint64_t target = m - 1;
  std::uint64_t x = 1 % m;
  for (std::uint32_t i = 0; i <= m; ++i) {
    if (x == target % m) return true;
    x = x * p % m;
  }
  return false;
}

}  // namespace neumaier
