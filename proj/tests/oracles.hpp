#pragma once

// Slow, direct reference implementations used to cross-check the library.

#include <algorithm>
#include <numeric>
#include <vector>

#include "permcomp/graph.hpp"
#include "permcomp/permutation.hpp"

namespace oracle {

using permcomp::Permutation;
using permcomp::SimpleGraph;
using permcomp::WeightedGraph;

inline unsigned long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  unsigned long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline unsigned long long catalan(int n) { return binomial(2 * n, n) / (n + 1); }

// Occurrences of `pattern` by scanning every index subset of the right size.
inline std::size_t subset_count(const Permutation& perm, const Permutation& pattern) {
  const int n = perm.size();
  const int k = pattern.size();
  if (k == 0 || k > n) return 0;
  std::vector<int> pick(n, 0);
  std::fill(pick.end() - k, pick.end(), 1);
  std::size_t total = 0;
  do {
    std::vector<int> values;
    for (int i = 0; i < n; ++i) {
      if (pick[i]) values.push_back(perm.value_at(i + 1));
    }
    if (permcomp::reduce(values) == pattern) ++total;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return total;
}

// Common-prey rule applied literally: u, v adjacent iff some w has arcs to both.
inline WeightedGraph prey_graph(const Permutation& perm) {
  const int n = perm.size();
  auto arc = [&](int from, int to) { return to < from && perm.value_at(to + 1) < perm.value_at(from + 1); };
  WeightedGraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      for (int w = 0; w < n; ++w) {
        if (arc(u, w) && arc(v, w)) g.add_weight(u, v);
      }
    }
  }
  return g;
}

inline SimpleGraph prey_simple(const Permutation& perm) { return prey_graph(perm).underlying(); }

// Isomorphism by trying every bijection of the vertex sets.
inline bool brute_isomorphic(const WeightedGraph& a, const WeightedGraph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> map(a.order());
  std::iota(map.begin(), map.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < a.order() && ok; ++u) {
      for (int v = u + 1; v < a.order() && ok; ++v) ok = a.weight(u, v) == b.weight(map[u], map[v]);
    }
    if (ok) return true;
  } while (std::next_permutation(map.begin(), map.end()));
  return false;
}

inline bool brute_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  return brute_isomorphic(permcomp::unit_weighted(a), permcomp::unit_weighted(b));
}

// Sorted degree sequence of the non-isolated vertices when every weight is 1, else empty.
inline std::vector<int> unit_core_degrees(const WeightedGraph& w) {
  std::vector<int> out;
  for (int v = 0; v < w.order(); ++v) {
    int d = 0;
    for (int u = 0; u < w.order(); ++u) {
      if (u == v) continue;
      if (w.weight(u, v) > 1) return {};
      d += w.weight(u, v);
    }
    if (d > 0) out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool connected_core(const WeightedGraph& w) {
  std::vector<int> core;
  for (int v = 0; v < w.order(); ++v) {
    if (w.degree(v) > 0) core.push_back(v);
  }
  if (core.empty()) return false;
  std::vector<char> seen(w.order(), 0);
  std::vector<int> stack{core[0]};
  seen[core[0]] = 1;
  std::size_t reached = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++reached;
    for (int u = 0; u < w.order(); ++u) {
      if (!seen[u] && w.weight(u, v) > 0) {
        seen[u] = 1;
        stack.push_back(u);
      }
    }
  }
  return reached == core.size();
}

// W(π) is a unit-weight P_m (m ≥ 3) up to isolated vertices.
inline bool is_unit_path(const Permutation& perm, int m) {
  const WeightedGraph w = prey_graph(perm);
  auto d = unit_core_degrees(w);
  std::vector<int> want(m + 1, 2);
  want[0] = want[1] = 1;
  std::sort(want.begin(), want.end());
  return d == want && connected_core(w);
}

// W(π) is a unit-weight K_{1,m} (m ≥ 2) up to isolated vertices.
inline bool is_unit_star(const Permutation& perm, int m) {
  const WeightedGraph w = prey_graph(perm);
  auto d = unit_core_degrees(w);
  std::vector<int> want(m, 1);
  want.push_back(m);
  std::sort(want.begin(), want.end());
  return d == want && connected_core(w);
}

// π[σ¹..σᵏ] by placing each block at the offset given by the smaller blocks.
inline Permutation place_blocks(const Permutation& skeleton, const std::vector<Permutation>& blocks) {
  std::vector<int> offset(skeleton.size() + 1, 0);
  for (int v = 2; v <= skeleton.size(); ++v) {
    offset[v] = offset[v - 1] + blocks[skeleton.position_of(v - 1) - 1].size();
  }
  std::vector<int> values;
  for (int i = 1; i <= skeleton.size(); ++i) {
    for (int x : blocks[i - 1]) values.push_back(offset[skeleton.value_at(i)] + x);
  }
  return Permutation(values);
}

}  // namespace oracle
