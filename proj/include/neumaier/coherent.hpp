#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "neumaier/constructions.hpp"
#include "neumaier/cyclotomy.hpp"
#include "neumaier/graph.hpp"

namespace neumaier {

struct StructuralFlags {
  bool homogeneous = false;
  bool symmetric = false;
  bool commutative = false;
};

/// Stable pair colouring produced by 2-dimensional Weisfeiler-Leman refinement.
struct CoherentConfiguration {
  std::size_t n = 0;
  std::uint32_t rank = 0;
  std::vector<std::uint32_t> color;  // row-major n x n
  std::vector<std::pair<std::uint32_t, std::uint32_t>> class_reps;  // first pair of each class, row-major
  std::vector<std::uint32_t> transpose;  // class of (y, x) for the reps (x, y)
  std::vector<std::uint32_t> class_sizes;
  std::vector<std::uint32_t> diag_classes;
  StructuralFlags flags;
  std::size_t rounds = 0;
  // p[k][i][j] flattened as (k * rank + i) * rank + j; filled only when rank <= kIntersectionRankCap.
  std::vector<std::uint32_t> intersection;

  static constexpr std::uint32_t kIntersectionRankCap = 16;

  std::uint32_t at(std::size_t x, std::size_t y) const { return color[x * n + y]; }
  std::uint32_t p(std::uint32_t k, std::uint32_t i, std::uint32_t j) const {
    return intersection[(std::size_t{k} * rank + i) * rank + j];
  }
  nlohmann::json to_json(bool with_colors = false) const;
};

struct WlOptions {
  std::size_t cap = 1024;
  unsigned threads = 1;
};

// Coarsest stable colouring refining {diagonal, edge, non-edge}. Colours are numbered
// by first occurrence in row-major pair order. Throws LimitExceeded above the cap.
CoherentConfiguration wl_closure(const Graph& g, const WlOptions& options = {});

// One refinement round on an arbitrary n x n colouring; returns the canonical renumbering.
std::vector<std::uint32_t> wl_refine_once(const std::vector<std::uint32_t>& color, std::size_t n,
                                          unsigned threads = 1);

struct AxiomReport {
  bool cc1 = false;
  bool cc2 = false;
  bool cc3 = false;
  bool cc4 = false;
  bool cc4_exhaustive = false;
  std::size_t cc4_checks = 0;
  std::optional<std::string> failure;
  bool holds() const { return cc1 && cc2 && cc3 && cc4; }
};

// Independent check of the configuration axioms against the raw colour array.
// CC4 is exhaustive up to exhaustive_limit vertices, else random samples with a fixed seed.
AxiomReport verify_axioms(const CoherentConfiguration& c, std::size_t exhaustive_limit = 128,
                          std::size_t samples = 10000);

StructuralFlags structural_flags(const CoherentConfiguration& c);

struct SupportInfo {
  std::vector<std::uint32_t> classes;
  std::size_t cardinality() const { return classes.size(); }
};

// Throws InternalError when the edge relation is not a union of classes.
SupportInfo support(const Graph& g, const CoherentConfiguration& c);

struct SchurReport {
  std::uint32_t m = 0;
  std::uint32_t q1 = 0;
  std::uint32_t q2 = 0;
  std::size_t products = 0;
  bool partition_closed = false;     // every product is constant on every basic set
  bool formulas_hold = false;        // every product matches the expected expansion
  bool mixed_parity = false;
  std::optional<bool> dd_as_printed;  // mixed parity only: the printed D.D case split matches
  std::vector<std::string> mismatches;
  bool passes() const { return partition_closed && formulas_hold; }
  nlohmann::json to_json() const;
};

// Group-ring products of all pairs of the m + 3 basic sets, compared with the expected
// expansions. For mixed parity the identity sits in D_i D_j with i - j = m/2 (mod m); the
// variant that puts it at i = j is also evaluated and reported in dd_as_printed.
SchurReport schur_verify(const GammaSpec& spec);

struct RankBoundReport {
  std::uint32_t rank = 0;
  std::optional<std::uint32_t> upper;  // m + 3 when a spec is given
  bool upper_ok = true;
  bool lower_ok = true;  // rank >= 3 unless the graph is complete or empty
  bool ok() const { return upper_ok && lower_ok; }
};

RankBoundReport rank_bound_check(const Graph& g, const CoherentConfiguration& c,
                                 const std::optional<GammaSpec>& spec = std::nullopt);

// Degree of the minimal polynomial of the adjacency matrix over Q (number of distinct
// eigenvalues), by exact integer Krylov elimination. Throws LimitExceeded above cap vertices.
std::size_t minimal_polynomial_degree(const Graph& g, std::size_t cap = 256);

}  // namespace neumaier
