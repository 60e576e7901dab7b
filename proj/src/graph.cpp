#include "neumaier/graph.hpp"

#include "neumaier/error.hpp"

namespace neumaier {

nlohmann::json GraphMeta::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  j["construction"] = construction;
  auto put = [&j](const char* key, const std::optional<std::int64_t>& v) {
    if (v) j[key] = *v;
  };
  put("m", m);
  put("q1", q1);
  put("q2", q2);
  put("alpha1", alpha1);
  put("alpha2", alpha2);
  if (!extra.empty()) j["extra"] = extra;
  return j;
}

GraphMeta GraphMeta::from_json(const nlohmann::json& j) {
  GraphMeta meta;
  if (!j.is_object()) throw InvalidArgument("graph meta must be an object");
  meta.construction = j.value("construction", std::string{});
  auto get = [&j](const char* key) -> std::optional<std::int64_t> {
    if (!j.contains(key) || j[key].is_null()) return std::nullopt;
    return j[key].get<std::int64_t>();
  };
  meta.m = get("m");
  meta.q1 = get("q1");
  meta.q2 = get("q2");
  meta.alpha1 = get("alpha1");
  meta.alpha2 = get("alpha2");
  if (j.contains("extra")) meta.extra = j["extra"];
  return meta;
}

Graph::Graph(std::size_t n) {
  if (n > kMaxVertices) {
    throw LimitExceeded("graph with " + std::to_string(n) + " vertices exceeds the dense cap of " +
                        std::to_string(kMaxVertices));
  }
  adj_ = BitMatrix(n);
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= order() || v >= order()) throw InvalidArgument("edge endpoint out of range");
  if (u == v) throw InvalidArgument("loop at vertex " + std::to_string(u));
  adj_.set(u, v);
  adj_.set(v, u);
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (std::size_t v = 0; v < order(); ++v) total += degree(v);
  return total / 2;
}

std::vector<std::uint32_t> Graph::neighbours(std::size_t v) const {
  std::vector<std::uint32_t> out;
  const auto row = adj_.row(v);
  for (std::size_t w = 0; w < row.size(); ++w) {
    std::uint64_t bits = row[w];
    while (bits != 0) {
      out.push_back(static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
      bits &= bits - 1;
    }
  }
  return out;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  g.meta = GraphMeta{"complete", {}, {}, {}, {}, {}, nlohmann::json::object()};
  return g;
}

Graph cycle_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
  g.meta = GraphMeta{"cycle", {}, {}, {}, {}, {}, nlohmann::json::object()};
  return g;
}

}  // namespace neumaier
