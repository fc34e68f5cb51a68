#pragma once

#include <map>
#include <span>
#include <vector>

#include "permcomp/graph.hpp"
#include "permcomp/permutation.hpp"

namespace permcomp {

// Graphs built from a permutation π use vertex i-1 for the point (i, π_i);
// each vertex is labelled with its value π_i.

/// Arc (j-1) → (i-1) iff i < j and π_i < π_j (predator → prey).
Digraph digraph_of(const Permutation& perm);

/// Edge {u, v} iff u and v share a prey.
SimpleGraph competition_graph(const Permutation& perm);

/// Competition graph weighted by the number of common prey.
WeightedGraph weighted_competition_graph(const Permutation& perm);

/// For every competition edge, all of its common prey (vertex ids).
struct PreyMap {
  std::map<Edge, std::vector<int>> prey;

  /// Σ over edges of |prey|; equals the number of 123 plus 132 occurrences.
  std::size_t incidence_count() const;
};

PreyMap edge_witnesses(const Permutation& perm);

struct Point {
  double x = 0;
  double y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

/// A permutation whose competition graph is isomorphic to that of the doubly
/// partial order on `points`. Shared x-coordinates are spread along a
/// descending line to the left, then shared y-coordinates downward, in exact
/// rational arithmetic. Throws Errc::DuplicatePoint or Errc::InvalidPoint (non-finite).
Permutation pointset_to_permutation(std::span<const Point> points);

/// Competition graph of the doubly partial order on `points` computed
/// directly; vertex i is points[i].
SimpleGraph pointset_competition_graph(std::span<const Point> points);

}  // namespace permcomp
