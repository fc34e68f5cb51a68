#include <algorithm>
#include <bit>
#include <cstdint>

#include "permcomp/graph.hpp"

namespace permcomp {

namespace {

using Mask = std::uint32_t;

void bron_kerbosch(const std::vector<Mask>& adj, Mask r, Mask p, Mask x, std::vector<Mask>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  // Pivot with the most neighbours in P.
  const Mask px = p | x;
  int pivot = std::countr_zero(px);
  int best = -1;
  for (Mask rest = px; rest; rest &= rest - 1) {
    const int u = std::countr_zero(rest);
    const int score = std::popcount(p & adj[u]);
    if (score > best) {
      best = score;
      pivot = u;
    }
  }
  for (Mask cand = p & ~adj[pivot]; cand; cand &= cand - 1) {
    const int v = std::countr_zero(cand);
    const Mask bit = Mask{1} << v;
    bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], out);
    p &= ~bit;
    x |= bit;
  }
}

std::vector<Mask> clique_masks(const SimpleGraph& g) {
  const int n = g.order();
  if (n > 31) throw Error(Errc::OrderTooLarge, "clique enumeration limited to 31 vertices");
  std::vector<Mask> adj(n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= Mask{1} << e.v;
    adj[e.v] |= Mask{1} << e.u;
  }
  std::vector<Mask> out;
  if (n == 0) return out;
  bron_kerbosch(adj, 0, (Mask{1} << n) - 1, 0, out);
  return out;
}

// Vertex states while laying cliques out left to right.
enum class Run : std::uint8_t { Unseen, Open, Closed };

bool extend_layout(const std::vector<Mask>& cliques, int n, std::vector<char>& placed,
                   std::vector<Run>& state, int remaining) {
  if (remaining == 0) return true;
  for (std::size_t c = 0; c < cliques.size(); ++c) {
    if (placed[c]) continue;
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      if ((cliques[c] >> v & 1) && state[v] == Run::Closed) ok = false;
    }
    if (!ok) continue;
    std::vector<Run> saved = state;
    for (int v = 0; v < n; ++v) {
      const bool inside = cliques[c] >> v & 1;
      if (inside) state[v] = Run::Open;
      else if (state[v] == Run::Open) state[v] = Run::Closed;
    }
    placed[c] = 1;
    if (extend_layout(cliques, n, placed, state, remaining - 1)) return true;
    placed[c] = 0;
    state = std::move(saved);
  }
  return false;
}

bool consecutive_in(const std::vector<Mask>& ordered, int n) {
  for (int v = 0; v < n; ++v) {
    int first = -1;
    int last = -1;
    int hits = 0;
    for (int i = 0; i < static_cast<int>(ordered.size()); ++i) {
      if (ordered[i] >> v & 1) {
        if (first < 0) first = i;
        last = i;
        ++hits;
      }
    }
    if (hits > 0 && last - first + 1 != hits) return false;
  }
  return true;
}

bool all_orderings(std::vector<Mask> cliques, int n) {
  std::sort(cliques.begin(), cliques.end());
  do {
    if (consecutive_in(cliques, n)) return true;
  } while (std::next_permutation(cliques.begin(), cliques.end()));
  return false;
}

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const SimpleGraph& g) {
  std::vector<std::vector<int>> out;
  for (Mask m : clique_masks(g)) {
    std::vector<int> clique;
    for (int v = 0; v < g.order(); ++v) {
      if (m >> v & 1) clique.push_back(v);
    }
    out.push_back(std::move(clique));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_interval(const SimpleGraph& g, IntervalMethod method) {
  const int n = g.order();
  if (n > 14) {
    throw Error(Errc::OrderTooLarge, "interval recognition limited to 14 vertices, got " + std::to_string(n));
  }
  const std::vector<Mask> cliques = clique_masks(g);
  if (method == IntervalMethod::Automatic) {
    method = cliques.size() <= 8 ? IntervalMethod::AllOrderings : IntervalMethod::ConsecutiveOnes;
  }
  if (method == IntervalMethod::AllOrderings) return all_orderings(cliques, n);

  std::vector<char> placed(cliques.size(), 0);
  std::vector<Run> state(n, Run::Unseen);
  return extend_layout(cliques, n, placed, state, static_cast<int>(cliques.size()));
}

}  // namespace permcomp
