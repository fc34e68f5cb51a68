#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "permcomp/error.hpp"

namespace permcomp {

/// Unordered vertex pair, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct WeightedEdge {
  int u = 0;
  int v = 0;
  int weight = 0;
  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
  friend auto operator<=>(const WeightedEdge&, const WeightedEdge&) = default;
};

/// Undirected simple graph on vertices 0..order-1, dense adjacency.
///
/// Vertices may carry integer display labels (for graphs built from a
/// permutation: the permutation value). Labels never take part in equality
/// or isomorphism.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int order);
  SimpleGraph(int order, std::span<const Edge> edges);

  int order() const noexcept { return order_; }
  /// Adding an existing edge is a no-op. Loops and out-of-range endpoints throw Errc::InvalidGraph.
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  int degree(int v) const;
  std::vector<int> neighbors(int v) const;
  std::size_t edge_count() const noexcept { return edge_count_; }
  /// Lexicographically sorted.
  std::vector<Edge> edges() const;

  std::vector<int> isolated_vertices() const;
  std::vector<int> non_isolated_vertices() const;
  /// Subgraph induced by `vertices`, renumbered in the given order.
  SimpleGraph induced(std::span<const int> vertices) const;
  /// Same graph with one extra isolated vertex per `count`.
  SimpleGraph padded(int count) const;

  const std::vector<int>& labels() const noexcept { return labels_; }
  void set_labels(std::vector<int> labels);
  /// Label of v, or v itself when unlabeled.
  int label(int v) const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.order_ == b.order_ && a.adjacency_ == b.adjacency_;
  }

 private:
  int order_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::uint8_t> adjacency_;
  std::vector<int> labels_;
};

/// Undirected graph with positive integer edge weights; weight 0 means "no edge".
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(int order);

  int order() const noexcept { return order_; }
  /// Weight must be ≥ 1.
  void set_weight(int u, int v, int weight);
  void add_weight(int u, int v, int increment = 1);
  int weight(int u, int v) const;
  bool has_edge(int u, int v) const { return weight(u, v) > 0; }
  int degree(int v) const;
  std::size_t edge_count() const noexcept;
  long long total_weight() const noexcept;
  std::vector<WeightedEdge> edges() const;

  /// Forgets weights.
  SimpleGraph underlying() const;
  std::vector<int> isolated_vertices() const;
  std::vector<int> non_isolated_vertices() const;
  WeightedGraph induced(std::span<const int> vertices) const;
  WeightedGraph padded(int count) const;

  const std::vector<int>& labels() const noexcept { return labels_; }
  void set_labels(std::vector<int> labels);
  int label(int v) const;

  /// Row-major order×order matrix of weights.
  std::span<const int> matrix() const noexcept { return weights_; }

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.order_ == b.order_ && a.weights_ == b.weights_;
  }

 private:
  void check_pair(int u, int v) const;

  int order_ = 0;
  std::vector<int> weights_;
  std::vector<int> labels_;
};

/// Every edge given weight 1.
WeightedGraph unit_weighted(const SimpleGraph& g);

/// Directed graph without self-arcs.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int order);

  int order() const noexcept { return order_; }
  void add_arc(int from, int to);
  bool has_arc(int from, int to) const;
  std::size_t arc_count() const noexcept { return arc_count_; }
  /// Sorted by (from, to).
  std::vector<std::pair<int, int>> arcs() const;
  std::vector<int> out_neighbors(int v) const;

  const std::vector<int>& labels() const noexcept { return labels_; }
  void set_labels(std::vector<int> labels);
  int label(int v) const;

 private:
  int order_ = 0;
  std::size_t arc_count_ = 0;
  std::vector<std::uint8_t> arcs_;
  std::vector<int> labels_;
};

// Named shapes used throughout: P_m has m edges on m+1 vertices, K_{1,m} is
// a centre joined to m leaves.
SimpleGraph path_graph(int edges);
SimpleGraph star_graph(int leaves);
SimpleGraph complete_graph(int order);
SimpleGraph cycle_graph(int order);

/// Isomorphism-invariant fingerprint. Equal keys iff isomorphic graphs;
/// weighted keys also require equal weights and never equal a simple key.
struct CanonicalKey {
  std::string bytes;
  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
  /// Hex rendering for reports.
  std::string hex() const;
};

struct CanonicalOptions {
  int max_order = 14;
};

CanonicalKey canonical_key(const SimpleGraph& g, const CanonicalOptions& options = {});
CanonicalKey canonical_key(const WeightedGraph& g, const CanonicalOptions& options = {});

/// Memo of canonical keys for simple graphs keyed on their exact adjacency.
/// Readers share a lock; inserts are serialized.
class CanonicalKeyCache {
 public:
  explicit CanonicalKeyCache(CanonicalOptions options = {}) : options_(options) {}
  CanonicalKey key(const SimpleGraph& g);
  std::size_t size() const;

 private:
  CanonicalOptions options_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, CanonicalKey> entries_;
};

bool isomorphic(const SimpleGraph& a, const SimpleGraph& b);
bool isomorphic(const WeightedGraph& a, const WeightedGraph& b);

/// Isomorphic after deleting every isolated vertex from both graphs.
bool iso_modulo_isolated(const SimpleGraph& a, const SimpleGraph& b);
bool iso_modulo_isolated(const WeightedGraph& a, const WeightedGraph& b);

/// Some vertex subset of `host` induces a copy of `pattern` (|pattern| ≤ 6).
bool has_induced(const SimpleGraph& host, const SimpleGraph& pattern);

/// Parts ordered by their smallest vertex; each part sorted.
std::vector<std::vector<int>> connected_components(const SimpleGraph& g);

/// Maximal cliques (Bron–Kerbosch with pivoting), each sorted, list sorted.
std::vector<std::vector<int>> maximal_cliques(const SimpleGraph& g);

enum class IntervalMethod {
  /// Exhaustive clique orderings up to 8 cliques, pruned search beyond.
  Automatic,
  /// Try every ordering of the maximal cliques.
  AllOrderings,
  /// Build the ordering clique by clique, rejecting any vertex whose clique run
  /// has already closed.
  ConsecutiveOnes,
};

/// Interval-graph recognition via a consecutive arrangement of maximal cliques.
/// Throws Errc::OrderTooLarge beyond 14 vertices.
bool is_interval(const SimpleGraph& g, IntervalMethod method = IntervalMethod::Automatic);

}  // namespace permcomp
