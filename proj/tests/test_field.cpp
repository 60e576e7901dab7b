#include "doctest.h"
#include "neumaier/arith.hpp"
#include "neumaier/error.hpp"
#include "neumaier/finite_field.hpp"

using namespace neumaier;

TEST_CASE("prime field and degree-two extension") {
  const auto f5 = FieldSpec::build(5, 1);
  CHECK(f5.q() == 5);
  CHECK(f5.mul({2}, {3}) == FieldElement{1});

  const auto f4 = FieldSpec::build(2, 2);
  CHECK(f4.q() == 4);
  // x^2 + x + 1, stored as the low coefficients
  CHECK(f4.modulus() == std::vector<std::uint32_t>{1, 1});
  const FieldElement x{2};
  CHECK(f4.mul(x, x) == FieldElement{3});  // x + 1

  CHECK_THROWS_AS(FieldSpec::build(4, 1), InvalidArgument);
  CHECK_THROWS_AS(FieldSpec::build(6, 2), InvalidArgument);
}

TEST_CASE("multiplicative identity and inverses") {
  const auto f7 = FieldSpec::build(7, 1);
  for (std::uint32_t a = 0; a < 7; ++a) CHECK(f7.mul({a}, f7.one()) == FieldElement{a});
  for (auto [p, r] : {std::pair{2u, 4u}, {3u, 3u}, {5u, 2u}, {13u, 1u}}) {
    const auto f = FieldSpec::build(p, r);
    for (std::uint32_t a = 1; a < f.q(); ++a) CHECK(f.mul({a}, f.inv({a})) == f.one());
  }
}

TEST_CASE("field axioms on GF(27) exhaustively") {
  const auto f = FieldSpec::build(3, 3);
  for (std::uint32_t a = 0; a < 27; ++a)
    for (std::uint32_t b = 0; b < 27; ++b) {
      CHECK(f.add({a}, {b}) == f.add({b}, {a}));
      CHECK(f.mul({a}, {b}) == f.mul({b}, {a}));
      for (std::uint32_t c = 0; c < 27; c += 5)
        CHECK(f.mul({a}, f.add({b}, {c})) == f.add(f.mul({a}, {b}), f.mul({a}, {c})));
    }
}

TEST_CASE("primitive elements") {
  auto ids = [](const FieldSpec& f) {
    std::vector<std::uint32_t> v;
    for (auto e : f.primitive_elements()) v.push_back(e.index);
    return v;
  };
  CHECK(ids(FieldSpec::build(5, 1)) == std::vector<std::uint32_t>{2, 3});
  CHECK(ids(FieldSpec::build(2, 2)) == std::vector<std::uint32_t>{2, 3});
  CHECK(ids(FieldSpec::build(2, 1)) == std::vector<std::uint32_t>{1});
  // phi(q - 1) of them
  for (std::uint32_t q : {16u, 25u, 49u, 64u, 81u, 121u, 125u}) {
    const auto pp = *as_prime_power(q);
    CHECK(ids(FieldSpec::build(pp.p, pp.r)).size() == euler_phi(q - 1));
  }
}

TEST_CASE("discrete logarithms") {
  const auto f5 = FieldSpec::build(5, 1);
  CHECK(DlogTable(f5, {2}).log({4}) == 2);
  const auto f7 = FieldSpec::build(7, 1);
  CHECK(DlogTable(f7, {3}).log({6}) == 3);
  const auto f4 = FieldSpec::build(2, 2);
  CHECK(DlogTable(f4, {2}).log({3}) == 2);

  const auto f = FieldSpec::build(2, 5);
  const DlogTable t(f, f.first_primitive());
  for (std::uint32_t k = 0; k < t.group_order(); ++k) CHECK(t.log(t.pow(k)) == k);
  CHECK(t.log(f.zero()) == DlogTable::kNoLog);
}

TEST_CASE("prime power helpers") {
  CHECK(as_prime_power(243) == PrimePower{243, 3, 5});
  CHECK_FALSE(as_prime_power(12).has_value());
  CHECK_FALSE(as_prime_power(1).has_value());
  CHECK(euler_phi(36) == 12);
  CHECK(isqrt(1u << 30) == 1u << 15);
  CHECK(pow_mod(3, 200, 1000003) == pow_mod(9, 100, 1000003));
}
