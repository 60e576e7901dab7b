#include "neumaier/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "neumaier/error.hpp"

namespace neumaier {
namespace {

constexpr char kBias = 63;
constexpr std::size_t kGraph6Max = 258047;

std::size_t skip_header(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  return text.substr(0, header.size()) == header ? header.size() : 0;
}

std::size_t read_sextet(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw ParseError("graph6 data truncated", pos);
  const auto c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) throw ParseError("invalid graph6 character", pos);
  return c - 63u;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6Max) throw LimitExceeded("graph6 supports at most 258047 vertices");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int filled = 0;
  unsigned acc = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph from_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) {
    text.remove_suffix(1);
  }
  std::size_t pos = skip_header(text);
  std::size_t n = read_sextet(text, pos);
  ++pos;
  if (n == 63) {
    if (pos < text.size() && text[pos] == '~') throw ParseError("8-byte graph6 size form is not supported", pos);
    n = 0;
    for (int k = 0; k < 3; ++k) n = (n << 6) | read_sextet(text, pos++);
  }
  if (n > Graph::kMaxVertices) throw ParseError("graph6 vertex count exceeds cap", pos);
  Graph g(n);
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos < bytes) throw ParseError("graph6 data truncated", text.size());
  if (text.size() - pos > bytes) throw ParseError("trailing data after graph6 record", pos + bytes);
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      const std::size_t at = pos + bit / 6;
      const std::size_t v = read_sextet(text, at);
      if ((v >> (5 - bit % 6)) & 1u) g.add_edge(i, j);
    }
  }
  return g;
}

nlohmann::json to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (auto j : g.neighbours(i)) {
      if (j > i) edges.push_back({i, j});
    }
  }
  nlohmann::json j{{"n", g.order()}, {"edges", std::move(edges)}};
  if (g.meta) j["meta"] = g.meta->to_json();
  return j;
}

Graph graph_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
      throw InvalidArgument("graph JSON needs 'n' and 'edges'");
    }
    const auto n = j["n"].get<std::int64_t>();
    if (n < 0) throw InvalidArgument("negative vertex count");
    Graph g(static_cast<std::size_t>(n));
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2) throw InvalidArgument("edge must be a pair");
      const auto u = e[0].get<std::int64_t>();
      const auto v = e[1].get<std::int64_t>();
      if (u < 0 || v < 0 || u >= n || v >= n) {
        throw InvalidArgument("edge [" + std::to_string(u) + "," + std::to_string(v) + "] out of range");
      }
      g.add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    }
    if (j.contains("meta") && !j["meta"].is_null()) g.meta = GraphMeta::from_json(j["meta"]);
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed graph JSON: ") + e.what());
  }
}

std::string write_graph(const Graph& g, GraphFormat format) {
  if (format == GraphFormat::Graph6) return to_graph6(g) + "\n";
  return to_json(g).dump() + "\n";
}

Graph parse_graph(std::string_view text) {
  std::size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
  if (first < text.size() && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
    }
    return graph_from_json(j);
  }
  return from_graph6(text.substr(first));
}

GraphFormat format_from_name(std::string_view name) {
  if (name == "json") return GraphFormat::Json;
  if (name == "graph6" || name == "g6") return GraphFormat::Graph6;
  throw InvalidArgument("unknown graph format '" + std::string(name) + "'");
}

GraphFormat format_for_path(std::string_view path) {
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() && path.substr(path.size() - suffix.size()) == suffix;
  };
  return ends_with(".g6") || ends_with(".graph6") ? GraphFormat::Graph6 : GraphFormat::Json;
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

void write_graph_file(const std::string& path, const Graph& g, GraphFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write graph file '" + path + "'");
  out << write_graph(g, format);
  if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace neumaier
