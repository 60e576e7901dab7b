#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "neumaier/constructions.hpp"
#include "neumaier/cyclotomy.hpp"
#include "neumaier/graph.hpp"
#include "neumaier/group.hpp"

namespace neumaier {

struct EdgeRegularity {
  std::size_t v = 0;
  std::optional<std::size_t> k;
  std::optional<std::size_t> lambda;
  std::optional<std::string> failure;  // first violating vertex or edge
  bool holds() const { return !failure.has_value(); }
};

// from_vertex_zero restricts the triangle count to edges at vertex 0 (vertex-transitive input).
EdgeRegularity edge_regularity(const Graph& g, bool from_vertex_zero = false);

struct CliqueCheck {
  std::optional<std::size_t> e;
  std::optional<std::string> failure;
};

// Throws InvalidArgument when c is not a clique (or repeats / is out of range).
CliqueCheck regular_clique_check(const Graph& g, std::span<const std::uint32_t> c);

enum class Verdict { NotEdgeRegular, EdgeRegularOnly, StrictlyNeumaier, StronglyRegular, NeumaierAndSrg };

std::string to_string(Verdict v);

struct NeumaierReport {
  std::size_t v = 0;
  std::optional<std::size_t> k;
  std::optional<std::size_t> lambda;
  std::vector<std::size_t> mu_set;
  bool srg = false;
  std::optional<std::vector<std::uint32_t>> clique;
  std::optional<std::size_t> e;
  std::optional<std::size_t> s;
  Verdict verdict = Verdict::NotEdgeRegular;
  std::string clique_source;  // "candidate", "search", "skipped" or "none"
  std::optional<std::string> witness;

  bool neumaier() const { return verdict == Verdict::StrictlyNeumaier || verdict == Verdict::NeumaierAndSrg; }
  nlohmann::json to_json() const;
};

struct ClassifyOptions {
  std::optional<std::vector<std::uint32_t>> candidate_clique;
  std::size_t clique_search_cap = 512;
  unsigned threads = 1;
  // Caller guarantees vertex transitivity (e.g. a Cayley graph): triangle and common-neighbour
  // counts are then taken over the pairs through vertex 0 only.
  bool vertex_transitive = false;
};

NeumaierReport classify(const Graph& g, const ClassifyOptions& options = {});

// Sorted common-neighbour counts over non-adjacent pairs of distinct vertices.
std::vector<std::size_t> mu_set(const Graph& g, unsigned threads = 1, bool from_vertex_zero = false);

// Exhaustive search for an e-regular clique whose size s satisfies s (k - s + 1) = e (v - s).
std::optional<std::vector<std::uint32_t>> find_regular_clique(const Graph& g, std::size_t k, std::size_t lambda);

/// Triangle and common-neighbour counts of Cay(G, S) read off the group-ring square S * S:
/// the coefficient at x is the number of common neighbours of 0 and x.
struct CayleyProfile {
  std::size_t degree = 0;
  std::vector<std::int64_t> lambda_set;  // over x in S
  std::vector<std::int64_t> mu_set;      // over x not in S, x != 0
};

CayleyProfile cayley_profile(const AbelianGroup& g, const ConnectionSet& s);

// {n1 (n2 + 1)} u {2 n1 + X_{0,0,i} : 0 < i < m}, sorted.
std::vector<std::int64_t> mu_spectrum_prediction(const GammaSpec& spec, const CyclotomicTable& t1,
                                                 const CyclotomicTable& t2);

// X_{0,0,0} = q1 + n1 n2 - 2 n1 - n2, together with the parity condition.
bool neumaier_condition(const GammaSpec& spec, const CyclotomicTable& t1, const CyclotomicTable& t2);

}  // namespace neumaier
