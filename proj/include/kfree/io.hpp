#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "kfree/graph.hpp"

namespace kfree {

/// graph6 encoding: size header, then the upper triangle in column-major order
/// packed into 6-bit groups offset by 63.
std::string to_graph6(const Graph& g);
/// Accepts an optional ">>graph6<<" prefix; throws std::invalid_argument on malformed input.
Graph from_graph6(std::string_view text);

std::string to_dot(const Graph& g, std::string_view name = "G");

/// {"order": n, "edges": [[u, v], ...]} with u < v in lexicographic order.
nlohmann::ordered_json to_adjacency_json(const Graph& g);
Graph from_adjacency_json(const nlohmann::json& doc);

}  // namespace kfree
