#include "permcomp/bijections.hpp"

#include <algorithm>
#include <cassert>

#include "permcomp/compgraph.hpp"

namespace permcomp {

namespace {

const Permutation kP123{1, 2, 3};
const Permutation kP132{1, 3, 2};

// Non-isolated vertices of W(π) if every weight is 1.
std::optional<std::vector<int>> unit_core(const WeightedGraph& w) {
  for (const WeightedEdge& e : w.edges()) {
    if (e.weight != 1) return std::nullopt;
  }
  auto core = w.non_isolated_vertices();
  if (core.empty()) return std::nullopt;
  return core;
}

// Vertex sequence of the path formed by W(π), starting at the endpoint with
// the smaller position.
std::optional<std::vector<int>> path_walk(const WeightedGraph& w) {
  const auto core = unit_core(w);
  if (!core) return std::nullopt;
  const auto edges = w.edges();
  if (edges.size() + 1 != core->size()) return std::nullopt;
  int start = -1;
  for (int v : *core) {
    const int d = w.degree(v);
    if (d > 2) return std::nullopt;
    if (d == 1 && start < 0) start = v;
  }
  if (start < 0) return std::nullopt;
  std::vector<int> walk{start};
  int previous = -1;
  int here = start;
  while (true) {
    int next = -1;
    for (int v : *core) {
      if (v != previous && v != here && w.has_edge(here, v)) {
        next = v;
        break;
      }
    }
    if (next < 0) break;
    walk.push_back(next);
    previous = here;
    here = next;
  }
  if (walk.size() != core->size()) return std::nullopt;  // disconnected
  return walk;
}

std::optional<int> star_centre(const WeightedGraph& w) {
  const auto core = unit_core(w);
  if (!core) return std::nullopt;
  const int m = static_cast<int>(core->size()) - 1;
  if (w.edge_count() != static_cast<std::size_t>(m)) return std::nullopt;
  for (int v : *core) {
    if (w.degree(v) == m) return v;
  }
  return std::nullopt;
}

bool satisfies_path_conditions(const Permutation& perm, const std::vector<int>& pos) {
  const int m = static_cast<int>(pos.size()) - 1;
  for (int i = 0; i + 1 <= m - 1; ++i) {
    if (pos[i] >= pos[i + 1]) return false;
  }
  if (m >= 2 && pos[m] <= pos[m - 2]) return false;
  if (m >= 2 && perm.value_at(pos[m]) >= perm.value_at(pos[1])) return false;
  return true;
}

// Moves the values at `positions` one step left along the list.
Permutation rotate_left(const Permutation& perm, const std::vector<int>& positions) {
  std::vector<int> values(perm.begin(), perm.end());
  const int first = values[positions.front() - 1];
  for (std::size_t j = 0; j + 1 < positions.size(); ++j) {
    values[positions[j] - 1] = values[positions[j + 1] - 1];
  }
  values[positions.back() - 1] = first;
  return Permutation(std::move(values));
}

Permutation rotate_right(const Permutation& perm, const std::vector<int>& positions) {
  std::vector<int> values(perm.begin(), perm.end());
  const int last = values[positions.back() - 1];
  for (std::size_t j = positions.size() - 1; j > 0; --j) {
    values[positions[j] - 1] = values[positions[j - 1] - 1];
  }
  values[positions.front() - 1] = last;
  return Permutation(std::move(values));
}

// The single common prey of two adjacent vertices (0-based) in a unit-weight graph.
int sole_prey(const Permutation& perm, int a, int b) {
  const auto values = perm.values();
  for (int w = 0; w < std::min(a, b); ++w) {
    if (values[w] < values[a] && values[w] < values[b]) return w;
  }
  throw Error(Errc::InternalInvariant, "vertices " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                                           " of " + perm.to_string() + " share no prey");
}

}  // namespace

std::optional<int> path_size(const Permutation& perm) {
  const auto walk = path_walk(weighted_competition_graph(perm));
  if (!walk) return std::nullopt;
  return static_cast<int>(walk->size()) - 1;
}

std::optional<int> star_size(const Permutation& perm) {
  const WeightedGraph w = weighted_competition_graph(perm);
  if (!star_centre(w)) return std::nullopt;
  return static_cast<int>(w.edge_count());
}

PathLabeling path_labeling(const Permutation& perm) {
  const auto walk = path_walk(weighted_competition_graph(perm));
  if (!walk) throw Error(Errc::NotAPath, "W(" + perm.to_string() + ") is not a unit-weight path");
  std::vector<int> forward;
  for (int v : *walk) forward.push_back(v + 1);
  std::vector<int> backward(forward.rbegin(), forward.rend());

  std::optional<std::vector<int>> best;
  for (const auto* candidate : {&forward, &backward}) {
    if (!satisfies_path_conditions(perm, *candidate)) continue;
    if (!best || candidate->front() < best->front()) best = *candidate;
  }
  if (!best) {
    throw Error(Errc::LabelingFailed, "neither orientation of the path in W(" + perm.to_string() +
                                          ") meets the ordering conditions");
  }
  return PathLabeling{std::move(*best)};
}

StarLabeling star_labeling(const Permutation& perm) {
  const WeightedGraph w = weighted_competition_graph(perm);
  const auto centre = star_centre(w);
  if (!centre) throw Error(Errc::NotAStar, "W(" + perm.to_string() + ") is not a unit-weight star");
  StarLabeling out;
  out.centre = *centre + 1;
  for (int v : w.non_isolated_vertices()) {
    if (v != *centre) out.leaves.push_back(v + 1);
  }
  if (out.leaves.size() == 1 && perm.value_at(out.leaves[0]) > perm.value_at(out.centre)) {
    std::swap(out.centre, out.leaves[0]);
  }
  return out;
}

Permutation shift_path(const Permutation& perm, int k) {
  const PathLabeling labels = path_labeling(perm);
  const int m = labels.edges();
  if (k < 0 || k > std::max(0, m - 2)) {
    throw Error(Errc::KOutOfRange, "k = " + std::to_string(k) + " outside 0.." + std::to_string(std::max(0, m - 2)));
  }
  if (k == 0) return perm;
  std::vector<int> moved(labels.positions.begin() + 1, labels.positions.begin() + k + 2);
  return rotate_left(perm, moved);
}

Permutation shift_window(const Permutation& perm, int step) {
  const PathLabeling labels = path_labeling(perm);
  const int m = labels.edges();
  if (step < 0 || step > m - 3) {
    throw Error(Errc::KOutOfRange, "step " + std::to_string(step) + " outside 0.." + std::to_string(m - 3));
  }
  std::vector<int> moved(labels.positions.begin() + 1, labels.positions.begin() + step + 2);
  const Permutation current = step == 0 ? perm : rotate_left(perm, moved);
  // After `step` rotations p₁'s value sits at i_{step+1}.
  const int p1 = labels[step + 1] - 1;
  const int next = labels[step + 2] - 1;
  const int after = labels[step + 3] - 1;
  std::vector<int> window{p1, next, after, sole_prey(current, p1, next), sole_prey(current, next, after)};
  std::sort(window.begin(), window.end());
  std::vector<int> positions;
  for (int v : window) positions.push_back(v + 1);
  return current.restrict_to(positions);
}

std::optional<std::string> shift_window_violation(const Permutation& perm) {
  static const Permutation a = Permutation::parse("34152");
  static const Permutation b = Permutation::parse("35142");
  static const Permutation c = Permutation::parse("34125");
  static const Permutation d = Permutation::parse("35124");
  const int m = path_labeling(perm).edges();
  for (int step = 0; step <= m - 3; ++step) {
    const Permutation window = shift_window(perm, step);
    const bool last = step == m - 3;
    if (window == a || window == b || (last && (window == c || window == d))) continue;
    return "step " + std::to_string(step) + " of " + perm.to_string() + " has window " + window.to_string();
  }
  return std::nullopt;
}

Permutation path_to_star(const Permutation& perm) {
  const PathLabeling labels = path_labeling(perm);
  const int m = labels.edges();
  if (m <= 2) return perm;
  assert(!shift_window_violation(perm));
  return shift_path(perm, m - 2);
}

Permutation star_to_path(const Permutation& perm) {
  const StarLabeling star = star_labeling(perm);
  const int m = static_cast<int>(star.leaves.size());
  if (m <= 2) return perm;
  std::vector<int> moved(star.leaves.begin() + 1, star.leaves.end() - 1);
  moved.push_back(star.centre);
  return rotate_right(perm, moved);
}

Permutation path123_to_star132(const Permutation& perm) {
  if (!avoids(perm, kP123) || !path_size(perm)) {
    throw Error(Errc::NotA123Path, perm.to_string() + " is not a 123-avoider whose W is a unit-weight path");
  }
  return rotate_left(perm, path_labeling(perm).positions);
}

Permutation star132_to_path123(const Permutation& perm) {
  if (!avoids(perm, kP132)) throw Error(Errc::NotAStar, perm.to_string() + " contains 132");
  StarLabeling star = star_labeling(perm);
  // The leaves carry p₁ … p_m, whose values decrease along the path.
  std::sort(star.leaves.begin(), star.leaves.end(),
            [&](int x, int y) { return perm.value_at(x) > perm.value_at(y); });
  std::vector<int> moved = star.leaves;
  moved.push_back(star.centre);
  return rotate_right(perm, moved);
}

}  // namespace permcomp
