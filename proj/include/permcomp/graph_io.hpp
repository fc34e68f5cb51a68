#pragma once

#include <string>

#include <json.hpp>

#include "permcomp/graph.hpp"

namespace permcomp {

// File forms, 0-based vertices, edges in lexicographic order:
//   simple:   {"order": n, "edges": [[u, v], ...]}
//   weighted: {"order": n, "weights": [[u, v, w], ...]}
// An optional "labels" array carries per-vertex display labels.

nlohmann::json to_json(const SimpleGraph& g);
nlohmann::json to_json(const WeightedGraph& g);
nlohmann::json to_json(const Digraph& g);

SimpleGraph simple_graph_from_json(const nlohmann::json& doc);
WeightedGraph weighted_graph_from_json(const nlohmann::json& doc);

/// Graphviz text; vertices are named by their labels.
std::string to_dot(const Digraph& g);
std::string to_dot(const SimpleGraph& g);
std::string to_dot(const WeightedGraph& g);

}  // namespace permcomp
