#include "permcomp/graph.hpp"

#include <algorithm>
#include <numeric>

namespace permcomp {

namespace {

void check_vertex(int order, int v) {
  if (v < 0 || v >= order) {
    throw Error(Errc::InvalidGraph,
                "vertex " + std::to_string(v) + " outside 0.." + std::to_string(order - 1));
  }
}

void check_labels(int order, const std::vector<int>& labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != order) {
    throw Error(Errc::InvalidGraph, "label count does not match order");
  }
}

}  // namespace

// --- SimpleGraph ---

SimpleGraph::SimpleGraph(int order) : order_(order) {
  if (order < 0) throw Error(Errc::InvalidGraph, "negative order");
  adjacency_.assign(static_cast<std::size_t>(order) * order, 0);
}

SimpleGraph::SimpleGraph(int order, std::span<const Edge> edges) : SimpleGraph(order) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

void SimpleGraph::add_edge(int u, int v) {
  check_vertex(order_, u);
  check_vertex(order_, v);
  if (u == v) throw Error(Errc::InvalidGraph, "self-loop at " + std::to_string(u));
  auto& cell = adjacency_[static_cast<std::size_t>(u) * order_ + v];
  if (cell) return;
  cell = 1;
  adjacency_[static_cast<std::size_t>(v) * order_ + u] = 1;
  ++edge_count_;
}

bool SimpleGraph::has_edge(int u, int v) const {
  check_vertex(order_, u);
  check_vertex(order_, v);
  return adjacency_[static_cast<std::size_t>(u) * order_ + v] != 0;
}

int SimpleGraph::degree(int v) const {
  check_vertex(order_, v);
  const auto* row = adjacency_.data() + static_cast<std::size_t>(v) * order_;
  return static_cast<int>(std::count(row, row + order_, std::uint8_t{1}));
}

std::vector<int> SimpleGraph::neighbors(int v) const {
  check_vertex(order_, v);
  std::vector<int> out;
  for (int x = 0; x < order_; ++x) {
    if (adjacency_[static_cast<std::size_t>(v) * order_ + x]) out.push_back(x);
  }
  return out;
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < order_; ++u) {
    for (int v = u + 1; v < order_; ++v) {
      if (adjacency_[static_cast<std::size_t>(u) * order_ + v]) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> SimpleGraph::isolated_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < order_; ++v) {
    if (degree(v) == 0) out.push_back(v);
  }
  return out;
}

std::vector<int> SimpleGraph::non_isolated_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < order_; ++v) {
    if (degree(v) > 0) out.push_back(v);
  }
  return out;
}

SimpleGraph SimpleGraph::induced(std::span<const int> vertices) const {
  SimpleGraph out(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (has_edge(vertices[i], vertices[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  if (!labels_.empty()) {
    std::vector<int> labels;
    for (int v : vertices) labels.push_back(labels_[v]);
    out.labels_ = std::move(labels);
  }
  return out;
}

SimpleGraph SimpleGraph::padded(int count) const {
  SimpleGraph out(order_ + count);
  for (const Edge& e : edges()) out.add_edge(e.u, e.v);
  return out;
}

void SimpleGraph::set_labels(std::vector<int> labels) {
  check_labels(order_, labels);
  labels_ = std::move(labels);
}

int SimpleGraph::label(int v) const {
  check_vertex(order_, v);
  return labels_.empty() ? v : labels_[v];
}

// --- WeightedGraph ---

WeightedGraph::WeightedGraph(int order) : order_(order) {
  if (order < 0) throw Error(Errc::InvalidGraph, "negative order");
  weights_.assign(static_cast<std::size_t>(order) * order, 0);
}

void WeightedGraph::check_pair(int u, int v) const {
  check_vertex(order_, u);
  check_vertex(order_, v);
  if (u == v) throw Error(Errc::InvalidGraph, "self-loop at " + std::to_string(u));
}

void WeightedGraph::set_weight(int u, int v, int weight) {
  check_pair(u, v);
  if (weight < 1) throw Error(Errc::InvalidGraph, "edge weights must be >= 1");
  weights_[static_cast<std::size_t>(u) * order_ + v] = weight;
  weights_[static_cast<std::size_t>(v) * order_ + u] = weight;
}

void WeightedGraph::add_weight(int u, int v, int increment) {
  check_pair(u, v);
  set_weight(u, v, weight(u, v) + increment);
}

int WeightedGraph::weight(int u, int v) const {
  check_vertex(order_, u);
  check_vertex(order_, v);
  return weights_[static_cast<std::size_t>(u) * order_ + v];
}

int WeightedGraph::degree(int v) const {
  check_vertex(order_, v);
  int d = 0;
  for (int x = 0; x < order_; ++x) d += weights_[static_cast<std::size_t>(v) * order_ + x] > 0;
  return d;
}

std::size_t WeightedGraph::edge_count() const noexcept {
  std::size_t n = 0;
  for (int w : weights_) n += w > 0;
  return n / 2;
}

long long WeightedGraph::total_weight() const noexcept {
  long long sum = 0;
  for (int w : weights_) sum += w;
  return sum / 2;
}

std::vector<WeightedEdge> WeightedGraph::edges() const {
  std::vector<WeightedEdge> out;
  for (int u = 0; u < order_; ++u) {
    for (int v = u + 1; v < order_; ++v) {
      const int w = weights_[static_cast<std::size_t>(u) * order_ + v];
      if (w > 0) out.push_back({u, v, w});
    }
  }
  return out;
}

SimpleGraph WeightedGraph::underlying() const {
  SimpleGraph out(order_);
  for (const auto& e : edges()) out.add_edge(e.u, e.v);
  if (!labels_.empty()) out.set_labels(labels_);
  return out;
}

std::vector<int> WeightedGraph::isolated_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < order_; ++v) {
    if (degree(v) == 0) out.push_back(v);
  }
  return out;
}

std::vector<int> WeightedGraph::non_isolated_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < order_; ++v) {
    if (degree(v) > 0) out.push_back(v);
  }
  return out;
}

WeightedGraph WeightedGraph::induced(std::span<const int> vertices) const {
  WeightedGraph out(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      const int w = weight(vertices[i], vertices[j]);
      if (w > 0) out.set_weight(static_cast<int>(i), static_cast<int>(j), w);
    }
  }
  if (!labels_.empty()) {
    std::vector<int> labels;
    for (int v : vertices) labels.push_back(labels_[v]);
    out.labels_ = std::move(labels);
  }
  return out;
}

WeightedGraph WeightedGraph::padded(int count) const {
  WeightedGraph out(order_ + count);
  for (const auto& e : edges()) out.set_weight(e.u, e.v, e.weight);
  return out;
}

void WeightedGraph::set_labels(std::vector<int> labels) {
  check_labels(order_, labels);
  labels_ = std::move(labels);
}

int WeightedGraph::label(int v) const {
  check_vertex(order_, v);
  return labels_.empty() ? v : labels_[v];
}

WeightedGraph unit_weighted(const SimpleGraph& g) {
  WeightedGraph out(g.order());
  for (const Edge& e : g.edges()) out.set_weight(e.u, e.v, 1);
  if (!g.labels().empty()) out.set_labels(g.labels());
  return out;
}

// --- Digraph ---

Digraph::Digraph(int order) : order_(order) {
  if (order < 0) throw Error(Errc::InvalidGraph, "negative order");
  arcs_.assign(static_cast<std::size_t>(order) * order, 0);
}

void Digraph::add_arc(int from, int to) {
  check_vertex(order_, from);
  check_vertex(order_, to);
  if (from == to) throw Error(Errc::InvalidGraph, "self-arc at " + std::to_string(from));
  auto& cell = arcs_[static_cast<std::size_t>(from) * order_ + to];
  if (!cell) {
    cell = 1;
    ++arc_count_;
  }
}

bool Digraph::has_arc(int from, int to) const {
  check_vertex(order_, from);
  check_vertex(order_, to);
  return arcs_[static_cast<std::size_t>(from) * order_ + to] != 0;
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < order_; ++u) {
    for (int v = 0; v < order_; ++v) {
      if (arcs_[static_cast<std::size_t>(u) * order_ + v]) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> Digraph::out_neighbors(int v) const {
  check_vertex(order_, v);
  std::vector<int> out;
  for (int x = 0; x < order_; ++x) {
    if (arcs_[static_cast<std::size_t>(v) * order_ + x]) out.push_back(x);
  }
  return out;
}

void Digraph::set_labels(std::vector<int> labels) {
  check_labels(order_, labels);
  labels_ = std::move(labels);
}

int Digraph::label(int v) const {
  check_vertex(order_, v);
  return labels_.empty() ? v : labels_[v];
}

// --- shapes ---

SimpleGraph path_graph(int edges) {
  SimpleGraph g(edges + 1);
  for (int i = 0; i < edges; ++i) g.add_edge(i, i + 1);
  return g;
}

SimpleGraph star_graph(int leaves) {
  SimpleGraph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

SimpleGraph complete_graph(int order) {
  SimpleGraph g(order);
  for (int u = 0; u < order; ++u) {
    for (int v = u + 1; v < order; ++v) g.add_edge(u, v);
  }
  return g;
}

SimpleGraph cycle_graph(int order) {
  SimpleGraph g(order);
  for (int i = 0; i < order; ++i) g.add_edge(i, (i + 1) % order);
  return g;
}

// --- structural queries ---

std::vector<std::vector<int>> connected_components(const SimpleGraph& g) {
  const int n = g.order();
  std::vector<int> component(n, -1);
  std::vector<std::vector<int>> parts;
  for (int start = 0; start < n; ++start) {
    if (component[start] >= 0) continue;
    const int id = static_cast<int>(parts.size());
    parts.emplace_back();
    std::vector<int> stack{start};
    component[start] = id;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      parts[id].push_back(v);
      for (int x : g.neighbors(v)) {
        if (component[x] < 0) {
          component[x] = id;
          stack.push_back(x);
        }
      }
    }
    std::sort(parts[id].begin(), parts[id].end());
  }
  return parts;
}

bool has_induced(const SimpleGraph& host, const SimpleGraph& pattern) {
  const int n = host.order();
  const int k = pattern.order();
  if (k > 6) throw Error(Errc::OrderTooLarge, "induced-subgraph patterns are limited to 6 vertices");
  if (k > n) return false;
  if (k == 0) return true;
  const CanonicalKey target = canonical_key(pattern);
  const std::size_t target_edges = pattern.edge_count();

  std::vector<int> subset(k);
  std::iota(subset.begin(), subset.end(), 0);
  while (true) {
    std::size_t edges = 0;
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) edges += host.has_edge(subset[i], subset[j]);
    }
    if (edges == target_edges && canonical_key(host.induced(subset)) == target) return true;

    int i = k - 1;
    while (i >= 0 && subset[i] == n - k + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
  return false;
}

}  // namespace permcomp
