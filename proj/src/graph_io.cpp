#include "permcomp/graph_io.hpp"

#include <sstream>

namespace permcomp {

using nlohmann::json;

namespace {

void put_labels(json& doc, const std::vector<int>& labels) {
  if (!labels.empty()) doc["labels"] = labels;
}

int read_order(const json& doc) {
  if (!doc.is_object() || !doc.contains("order") || !doc["order"].is_number_integer()) {
    throw Error(Errc::InvalidGraph, "graph JSON needs an integer \"order\"");
  }
  return doc["order"].get<int>();
}

template <typename Graph>
void read_labels(const json& doc, Graph& g) {
  if (doc.contains("labels")) g.set_labels(doc["labels"].get<std::vector<int>>());
}

}  // namespace

json to_json(const SimpleGraph& g) {
  json doc;
  doc["order"] = g.order();
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  doc["edges"] = std::move(edges);
  put_labels(doc, g.labels());
  return doc;
}

json to_json(const WeightedGraph& g) {
  json doc;
  doc["order"] = g.order();
  json weights = json::array();
  for (const WeightedEdge& e : g.edges()) weights.push_back({e.u, e.v, e.weight});
  doc["weights"] = std::move(weights);
  put_labels(doc, g.labels());
  return doc;
}

json to_json(const Digraph& g) {
  json doc;
  doc["order"] = g.order();
  json arcs = json::array();
  for (auto [from, to] : g.arcs()) arcs.push_back({from, to});
  doc["arcs"] = std::move(arcs);
  put_labels(doc, g.labels());
  return doc;
}

SimpleGraph simple_graph_from_json(const json& doc) {
  SimpleGraph g(read_order(doc));
  try {
    for (const auto& e : doc.at("edges")) {
      if (e.size() != 2) throw Error(Errc::InvalidGraph, "edge entries are [u, v]");
      g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
  } catch (const json::exception& ex) {
    throw Error(Errc::InvalidGraph, ex.what());
  }
  read_labels(doc, g);
  return g;
}

WeightedGraph weighted_graph_from_json(const json& doc) {
  WeightedGraph g(read_order(doc));
  try {
    for (const auto& e : doc.at("weights")) {
      if (e.size() != 3) throw Error(Errc::InvalidGraph, "weight entries are [u, v, w]");
      g.set_weight(e[0].get<int>(), e[1].get<int>(), e[2].get<int>());
    }
  } catch (const json::exception& ex) {
    throw Error(Errc::InvalidGraph, ex.what());
  }
  read_labels(doc, g);
  return g;
}

std::string to_dot(const Digraph& g) {
  std::ostringstream out;
  out << "digraph D {\n";
  for (int v = 0; v < g.order(); ++v) out << "  " << g.label(v) << ";\n";
  for (auto [from, to] : g.arcs()) out << "  " << g.label(from) << " -> " << g.label(to) << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const SimpleGraph& g) {
  std::ostringstream out;
  out << "graph C {\n";
  for (int v = 0; v < g.order(); ++v) out << "  " << g.label(v) << ";\n";
  for (const Edge& e : g.edges()) out << "  " << g.label(e.u) << " -- " << g.label(e.v) << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const WeightedGraph& g) {
  std::ostringstream out;
  out << "graph W {\n";
  for (int v = 0; v < g.order(); ++v) out << "  " << g.label(v) << ";\n";
  for (const WeightedEdge& e : g.edges()) {
    out << "  " << g.label(e.u) << " -- " << g.label(e.v) << " [label=" << e.weight << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace permcomp
