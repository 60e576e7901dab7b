#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "neumaier/graph.hpp"

namespace neumaier {

enum class GraphFormat { Json, Graph6 };

// Standard graph6 ASCII encoding (no trailing newline). Supports n <= 258047.
std::string to_graph6(const Graph& g);
// Accepts an optional ">>graph6<<" header and trailing whitespace. Throws ParseError with a byte offset.
Graph from_graph6(std::string_view text);

// {n, edges: [[i, j], ...] with i < j ascending, meta: {...}}; keys sorted.
nlohmann::json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

std::string write_graph(const Graph& g, GraphFormat format);
// Detects the format from the first non-blank character ('{' means JSON).
Graph parse_graph(std::string_view text);

GraphFormat format_from_name(std::string_view name);
// Uses the extension: .g6 / .graph6 select graph6, anything else JSON.
GraphFormat format_for_path(std::string_view path);

Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g, GraphFormat format);

}  // namespace neumaier
