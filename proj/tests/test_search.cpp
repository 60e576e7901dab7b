#include <set>

#include "doctest.h"
#include "neumaier/error.hpp"
#include "neumaier/search.hpp"

using namespace neumaier;

namespace {

using Pair = std::pair<std::uint32_t, std::uint32_t>;

std::vector<Pair> pairs(const std::vector<SearchHit>& hits) {
  std::vector<Pair> out;
  for (const auto& h : hits) out.emplace_back(h.q1, h.q2);
  return out;
}

std::vector<std::uint32_t> qs(const std::vector<PrimePower>& v) {
  std::vector<std::uint32_t> out;
  for (const auto& p : v) out.push_back(p.q);
  return out;
}

}  // namespace

TEST_CASE("prime powers in residue classes") {
  CHECK(qs(prime_powers(3, 20)) == std::vector<std::uint32_t>{4, 7, 13, 16, 19});
  CHECK(qs(prime_powers(4, 30)) == std::vector<std::uint32_t>{5, 9, 13, 17, 25, 29});
  CHECK(qs(prime_powers(10, 50)) == std::vector<std::uint32_t>{11, 31, 41});
}

TEST_CASE("order 3 pairs") {
  const auto hits = solve_pairs(3, 100);
  const std::vector<Pair> expected{{4, 7}, {4, 13}, {7, 16}, {7, 19}, {13, 16}, {13, 49}, {19, 67}, {31, 43}, {37, 73}, {49, 193}, {61, 97}, {97, 241}};
  CHECK(pairs(hits) == expected);
  for (const auto& h : hits) {
    CHECK(h.witnessed);
    CHECK_FALSE(h.problem.has_value());
    CHECK(h.nexus == (h.q1 - 1) / 3);
  }

  std::set<Pair> even;
  for (const auto& h : solve_pairs(3, 250))
    if ((std::uint64_t{h.q1} * h.q2) % 2 == 0 && h.coprime) even.emplace(h.q1, h.q2);
  CHECK(even == std::set<Pair>{{4, 7}, {4, 13}, {7, 16}, {13, 16}});

  CHECK_THROWS_AS(solve_pairs(5, 100), InvalidArgument);
}

TEST_CASE("widening the window finds nothing new") {
  for (std::uint32_t m : {3u, 4u}) {
    SearchOptions wide;
    wide.window_scale = 2;
    CHECK(pairs(solve_pairs(m, 120, wide)) == pairs(solve_pairs(m, 120)));
  }
}

TEST_CASE("brute force agrees with the quadratic-form search") {
  auto coprime_ordered = [](const std::vector<SearchHit>& hits) {
    std::vector<Pair> out;
    for (const auto& h : hits)
      if (h.coprime && h.q1 <= h.q2) out.emplace_back(h.q1, h.q2);
    return out;
  };
  CHECK(coprime_ordered(general_search(3, 100, 400)) == pairs(solve_pairs(3, 100)));
  std::vector<Pair> m4;
  for (const auto& h : solve_pairs(4, 60))
    if (h.q2 <= 540) m4.emplace_back(h.q1, h.q2);
  CHECK(coprime_ordered(general_search(4, 60, 540)) == m4);
}

TEST_CASE("general order hits") {
  auto find = [](const std::vector<SearchHit>& hits, std::uint32_t q1, std::uint32_t q2) -> const SearchHit* {
    for (const auto& h : hits)
      if (h.q1 == q1 && h.q2 == q2) return &h;
    return nullptr;
  };
  const auto h5 = general_search(5, 16, 31);
  const auto* a = find(h5, 16, 31);
  REQUIRE(a != nullptr);
  CHECK(a->nexus == 3);

  const auto h7 = general_search(7, 8, 29);
  const auto* b = find(h7, 8, 29);
  REQUIRE(b != nullptr);
  CHECK(b->nexus == 1);

  // order two: only the diagonal, and only as strongly regular graphs
  CHECK(general_search(2, 50, 50).empty());
  SearchOptions with_srg;
  with_srg.include_srg = true;
  for (const auto& h : general_search(2, 50, 50, with_srg)) {
    CHECK(h.q1 == h.q2);
    CHECK(h.srg);
  }
}

TEST_CASE("verification levels") {
  SearchOptions o;
  o.verify = VerifyMode::Wl;
  const auto hits = solve_pairs(3, 13, o);
  REQUIRE(hits.size() == 6);
  for (const auto& h : hits) {
    CHECK(h.verified == Verified::WlConfirmed);
    CHECK(h.rank == 6u);
    CHECK_FALSE(h.problem.has_value());
  }
  CHECK(verify_mode_from_name("construct") == VerifyMode::Construct);
  CHECK_THROWS_AS(verify_mode_from_name("maybe"), InvalidArgument);
}

TEST_CASE("nexus rows and CSV") {
  const auto rows = nexus_table(5, 200, 3);
  REQUIRE(!rows.empty());
  CHECK(rows.front().e == 1);
  const auto csv = nexus_to_csv(rows);
  CHECK(csv.rfind("e,m,q1,q2\n", 0) == 0);
  CHECK(csv.find("1,3,4,7\n") != std::string::npos);
  CHECK(csv.find("3,5,16,31\n") != std::string::npos);

  const auto pcsv = hits_to_csv(solve_pairs(3, 4));
  CHECK(pcsv.rfind("m,q1,q2,u1,v1,u2,v2,nexus,verified,rank\n", 0) == 0);
}
