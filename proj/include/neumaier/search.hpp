#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "neumaier/arith.hpp"

namespace neumaier {

// Prime powers q <= bound with q = 1 (mod m), ascending.
std::vector<PrimePower> prime_powers(std::uint32_t m, std::uint32_t bound);

enum class VerifyMode { None, Construct, Wl };
enum class Verified { AnalyticOnly, Constructed, WlConfirmed };

std::string to_string(VerifyMode v);
std::string to_string(Verified v);
VerifyMode verify_mode_from_name(const std::string& name);

struct SearchHit {
  std::uint32_t m = 0;
  std::uint32_t q1 = 0;
  std::uint32_t q2 = 0;
  std::optional<std::int64_t> u1, v1, u2, v2;  // m in {3, 4}; v signs realized by the witness alphas
  std::uint32_t nexus = 0;
  Verified verified = Verified::AnalyticOnly;
  std::optional<std::uint32_t> rank;
  std::size_t alpha1_position = 0;  // witness primitive elements, by position in ascending order
  std::size_t alpha2_position = 0;
  bool witnessed = false;
  bool coprime = true;
  bool srg = false;                      // analytic common-neighbour set is a singleton
  std::vector<std::int64_t> mu_prediction;
  bool group_ring_checked = false;      // degree, lambda and mu confirmed from S * S without a dense graph
  std::optional<std::string> problem;    // set when a verification step disagreed

  nlohmann::json to_json() const;
};

struct SearchOptions {
  VerifyMode verify = VerifyMode::None;
  std::size_t construct_cap = 5000;  // build and classify when q1 q2 <= cap
  std::size_t wl_cap = 1024;         // WL refinement when q1 q2 <= cap
  std::size_t group_ring_cap = 6000;   // above construct_cap, check S * S when |S| <= cap
  unsigned threads = 1;
  bool include_srg = false;
  std::uint32_t window_scale = 1;    // > 1 widens the q2 window (pruning soundness checks)
};

// q2 candidates for a given q1 lie in [q1 / scale, factor * scale * q1] with factor 4 (m = 3) or 9 (m = 4).
// Pairs are found from 4(2 q1 - q2) = u1 u2 + 27 v1 v2 (m = 3) or (3 q1 - q2)/2 = u1 u2 + 4 v1 v2 with
// n1 = n2 (mod 2) (m = 4), trying both signs of v1 v2, then witnessed by explicit primitive elements.
std::vector<SearchHit> solve_pairs(std::uint32_t m, std::uint32_t q1_max, const SearchOptions& options = {});

// Brute-force edge-regularity test over all q1 <= q1_max, q2 <= q2_max (both = 1 mod m).
std::vector<SearchHit> general_search(std::uint32_t m, std::uint32_t q1_max, std::uint32_t q2_max,
                                      const SearchOptions& options = {});

struct NexusRow {
  std::uint32_t e = 0;
  std::vector<SearchHit> hits;
};

// Hits of general_search for 2 <= m <= m_max and nexus n1 <= e_max, grouped by nexus.
std::vector<NexusRow> nexus_table(std::uint32_t m_max, std::uint32_t q2_max, std::uint32_t e_max,
                                  const SearchOptions& options = {});

// CSV with header m,q1,q2,u1,v1,u2,v2,nexus,verified,rank.
std::string hits_to_csv(const std::vector<SearchHit>& hits);
// CSV with header e,m,q1,q2.
std::string nexus_to_csv(const std::vector<NexusRow>& rows);

}  // namespace neumaier
