#include "doctest.h"
#include "neumaier/arith.hpp"
#include "neumaier/cyclotomy.hpp"
#include "neumaier/finite_field.hpp"

using namespace neumaier;

namespace {

CyclotomicTable table(std::uint32_t q, std::uint32_t m, std::uint32_t alpha_index) {
  const auto pp = *as_prime_power(q);
  const auto f = FieldSpec::build(pp.p, pp.r);
  return cyclotomic_numbers(f, DlogTable(f, {alpha_index}), m);
}

}  // namespace

TEST_CASE("brute-force tables on small fields") {
  const auto t52 = table(5, 2, 2);
  CHECK(t52.counts == std::vector<std::int64_t>{0, 1, 1, 1});

  const auto t43 = table(4, 3, 2);
  CHECK(t43(0, 0) == 0);
  CHECK(t43(1, 2) == 1);

  const auto f13 = FieldSpec::build(13, 1);
  const auto t13 = cyclotomic_numbers(f13, DlogTable(f13, f13.first_primitive()), 3);
  std::int64_t col0 = 0;
  for (int a = 0; a < 3; ++a) col0 += t13(a, 0);
  CHECK(col0 == 3);
  CHECK_FALSE(check_sum_rules(t13).has_value());
}

TEST_CASE("closed forms for orders 2, 3 and 4") {
  // q = 7, m = 3, (u, v) = (1, 1)
  const auto c7 = closed_form(3, 7, UVPair{3, 7, 1, 1});
  CHECK(c7(0, 1) == 0);
  CHECK(c7(0, 2) == 1);
  CHECK(c7(1, 2) == 1);

  const auto c9 = closed_form(2, 9, std::nullopt);
  CHECK(c9(0, 0) == 1);
  CHECK(c9(0, 1) == 2);
  CHECK(c9(1, 0) == 2);
  CHECK(c9(1, 1) == 2);

  const auto c13 = closed_form(4, 13, UVPair{4, 13, -3, 1});
  CHECK(c13(0, 2) == 2);

  // every primitive element of every q <= 200
  for (std::uint32_t q = 3; q <= 200; ++q) {
    const auto pp = as_prime_power(q);
    if (!pp) continue;
    const auto f = FieldSpec::build(pp->p, pp->r);
    for (std::uint32_t m : {2u, 3u, 4u}) {
      if ((q - 1) % m) continue;
      for (auto a : f.primitive_elements()) {
        const DlogTable d(f, a);
        std::optional<UVPair> uv;
        if (m > 2) uv = uv_decomposition(f, d, m);
        CHECK(closed_form(m, q, uv) == cyclotomic_numbers(f, d, m));
      }
    }
  }
}

TEST_CASE("u/v invariants") {
  CHECK(uv_magnitudes(3, *as_prime_power(4)) == UVPair{3, 4, 4, 0});
  const auto u13 = uv_magnitudes(3, *as_prime_power(13));
  CHECK(u13.u == -5);
  CHECK(std::abs(u13.v) == 1);
  const auto u5 = uv_magnitudes(4, *as_prime_power(5));
  CHECK(u5.u == 1);
  CHECK(std::abs(u5.v) == 1);

  // v flips sign between alpha and alpha^-1 when v != 0
  const auto f = FieldSpec::build(13, 1);
  const auto a = f.first_primitive();
  const auto va = uv_decomposition(f, DlogTable(f, a), 3).v;
  const auto vb = uv_decomposition(f, DlogTable(f, f.inv(a)), 3).v;
  CHECK(va == -vb);
}

TEST_CASE("sums of products of cyclotomic numbers") {
  const auto t = table(7, 3, 3);
  CHECK(x_sum(t, t, 0, 0, 0) == 5);
  CHECK(x_sum(t, t, 0, 0, 1) == 2);
  CHECK(x_sum(t, t, 0, 0, 2) == 2);

  // same field, same alpha, any m <= 10, q <= 200
  for (std::uint32_t q = 3; q <= 200; ++q) {
    const auto pp = as_prime_power(q);
    if (!pp) continue;
    const auto f = FieldSpec::build(pp->p, pp->r);
    const DlogTable d(f, f.first_primitive());
    for (std::uint32_t m = 2; m <= 10; ++m) {
      if ((q - 1) % m) continue;
      const auto tt = cyclotomic_numbers(f, d, m);
      CHECK_FALSE(check_sum_rules(tt).has_value());
      const std::int64_t n = (q - 1) / m;
      CHECK(x_sum(tt, tt, 0, 0, 0) == (n - 1) * (n - 1) + n * (m - 1));
      for (std::uint32_t i = 1; i < m; ++i) CHECK(x_sum(tt, tt, 0, 0, i) == n * (n - 1));
    }
  }
}

TEST_CASE("uniform cyclotomy") {
  const auto u16 = is_uniform(table(16, 3, 2));
  CHECK(u16.uniform);
  REQUIRE(u16.r.has_value());
  CHECK(*u16.r == 4);
  CHECK(u16.closed_form_holds);

  CHECK_FALSE(is_uniform(table(7, 3, 3)).uniform);

  const auto f49 = FieldSpec::build(7, 2);
  CHECK_FALSE(is_uniform(cyclotomic_numbers(f49, DlogTable(f49, f49.first_primitive()), 3)).uniform);
  CHECK(minus_one_is_power_of(2, 3));
  CHECK_FALSE(minus_one_is_power_of(7, 3));
}
