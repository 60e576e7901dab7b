#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

namespace neumaier {

/// Dense square bit matrix, one 64-bit word run per row.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::size_t size() const { return n_; }
  std::size_t words_per_row() const { return words_; }

  bool test(std::size_t i, std::size_t j) const { return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u; }
  void set(std::size_t i, std::size_t j) { bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }
  void reset(std::size_t i, std::size_t j) { bits_[i * words_ + j / 64] &= ~(std::uint64_t{1} << (j % 64)); }

  std::span<const std::uint64_t> row(std::size_t i) const { return {bits_.data() + i * words_, words_}; }

  std::size_t row_count(std::size_t i) const {
    std::size_t c = 0;
    for (auto w : row(i)) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  static std::size_t and_count(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
    std::size_t c = 0;
    for (std::size_t w = 0; w < a.size(); ++w) c += static_cast<std::size_t>(std::popcount(a[w] & b[w]));
    return c;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Provenance carried alongside constructed graphs and through the JSON format.
struct GraphMeta {
  std::string construction;
  std::optional<std::int64_t> m;
  std::optional<std::int64_t> q1;
  std::optional<std::int64_t> q2;
  std::optional<std::int64_t> alpha1;
  std::optional<std::int64_t> alpha2;
  nlohmann::json extra = nlohmann::json::object();

  nlohmann::json to_json() const;
  static GraphMeta from_json(const nlohmann::json& j);
  friend bool operator==(const GraphMeta&, const GraphMeta&) = default;
};

/// Simple undirected graph on vertices 0..n-1 with dense adjacency.
class Graph {
 public:
  static constexpr std::size_t kMaxVertices = 50000;

  Graph() = default;
  explicit Graph(std::size_t n);

  std::size_t order() const { return adj_.size(); }
  bool adjacent(std::size_t u, std::size_t v) const { return adj_.test(u, v); }
  // Adds the undirected edge {u, v}; loops are rejected.
  void add_edge(std::size_t u, std::size_t v);
  std::size_t degree(std::size_t v) const { return adj_.row_count(v); }
  std::size_t edge_count() const;
  std::vector<std::uint32_t> neighbours(std::size_t v) const;
  std::size_t common_neighbours(std::size_t u, std::size_t v) const {
    return BitMatrix::and_count(adj_.row(u), adj_.row(v));
  }

  const BitMatrix& adjacency() const { return adj_; }

  std::optional<GraphMeta> meta;

  // Structural equality; metadata is ignored.
  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  BitMatrix adj_;
};

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);

}  // namespace neumaier
