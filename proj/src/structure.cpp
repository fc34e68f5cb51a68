#include "permcomp/structure.hpp"

#include <algorithm>

#include "permcomp/compgraph.hpp"

namespace permcomp {

namespace {

const Permutation kP123{1, 2, 3};
const Permutation kP132{1, 3, 2};

void check_position(const Permutation& perm, int position) {
  if (position < 1 || position > perm.size()) {
    throw Error(Errc::IndexOutOfRange, "position " + std::to_string(position) + " outside 1.." +
                                           std::to_string(perm.size()) + " of " + perm.to_string());
  }
}

// Isolated-vertex count and the key of the non-isolated part.
struct CoreSummary {
  std::size_t isolated = 0;
  CanonicalKey core;
};

CoreSummary summarize(const SimpleGraph& g) {
  const auto core = g.non_isolated_vertices();
  return {static_cast<std::size_t>(g.order()) - core.size(), canonical_key(g.induced(core))};
}

// Inflation where empty blocks (and their slots in the skeleton) are dropped.
Permutation inflate_nonempty(const Permutation& skeleton, const std::vector<Permutation>& blocks) {
  std::vector<int> slots;
  std::vector<Permutation> kept;
  for (int i = 0; i < skeleton.size(); ++i) {
    if (!blocks[i].empty()) {
      slots.push_back(i + 1);
      kept.push_back(blocks[i]);
    }
  }
  if (kept.empty()) return Permutation();
  return inflate(skeleton.restrict_to(slots), kept);
}

}  // namespace

std::vector<std::vector<int>> nontrivial_components(const SimpleGraph& g) {
  std::vector<std::vector<int>> out;
  for (auto& part : connected_components(g)) {
    if (part.size() > 1) out.push_back(std::move(part));
  }
  return out;
}

bool is_redundant(const Permutation& perm, int position) {
  check_position(perm, position);
  const CoreSummary before = summarize(competition_graph(perm));
  const CoreSummary after = summarize(competition_graph(perm.without(position)));
  return before.isolated == after.isolated + 1 && before.core == after.core;
}

Minimized minimize_tracked(const Permutation& perm) {
  Minimized state{perm, {}};
  state.kept.resize(perm.size());
  for (int i = 0; i < perm.size(); ++i) state.kept[i] = i + 1;
  while (true) {
    int victim = 0;
    for (int pos = state.perm.size(); pos >= 1; --pos) {
      if (is_redundant(state.perm, pos)) {
        victim = pos;
        break;
      }
    }
    if (victim == 0) return state;
    state.perm = state.perm.without(victim);
    state.kept.erase(state.kept.begin() + (victim - 1));
  }
}

Permutation minimize(const Permutation& perm) { return minimize_tracked(perm).perm; }

int dominating_vertex(const Permutation& perm) {
  const SimpleGraph g = competition_graph(perm);
  const auto components = nontrivial_components(g);
  if (components.size() != 1) {
    throw Error(Errc::PreconditionViolated, "C(" + perm.to_string() + ") has " +
                                                std::to_string(components.size()) +
                                                " non-trivial components, expected 1");
  }
  if (has_induced(g, path_graph(3))) {
    throw Error(Errc::PreconditionViolated, "C(" + perm.to_string() + ") contains an induced P3");
  }

  const Minimized reduced = minimize_tracked(perm);
  const SimpleGraph small = competition_graph(reduced.perm);
  const auto isolated = small.isolated_vertices();
  // The first term never has prey, so some isolated vertex always exists.
  const int rightmost_isolated = isolated.back();
  int best = -1;
  for (int i = rightmost_isolated + 1; i < reduced.perm.size(); ++i) {
    if (best < 0 || reduced.perm.values()[i] > reduced.perm.values()[best]) best = i;
  }
  if (best < 0) {
    throw Error(Errc::InternalInvariant, "no term follows the last isolated term of " +
                                             reduced.perm.to_string());
  }
  const int position = reduced.kept[best];
  const auto& component = components.front();
  for (int v : component) {
    if (v != position - 1 && !g.has_edge(v, position - 1)) {
      throw Error(Errc::InternalInvariant, "term at position " + std::to_string(position) +
                                               " does not dominate the component of C(" +
                                               perm.to_string() + ")");
    }
  }
  return position;
}

PartitionWitness component_partition(const Permutation& perm) {
  const int n = perm.size();
  const auto values = perm.values();
  const SimpleGraph g = competition_graph(perm);
  const auto components = nontrivial_components(g);
  const PreyMap witnesses = edge_witnesses(perm);

  std::vector<int> owner(n, -1);
  for (std::size_t c = 0; c < components.size(); ++c) {
    for (int v : components[c]) owner[v] = static_cast<int>(c);
  }

  PartitionWitness out;
  out.parts.resize(components.size() + 1);
  std::vector<char> assigned(n, 0);
  for (std::size_t c = 0; c < components.size(); ++c) {
    std::set<int> feeders;  // prey of component c that lie outside it
    for (const auto& [edge, prey] : witnesses.prey) {
      if (owner[edge.u] != static_cast<int>(c)) continue;
      for (int w : prey) {
        if (owner[w] != static_cast<int>(c)) feeders.insert(w);
      }
    }
    std::vector<int> members(components[c].begin(), components[c].end());
    for (int b : feeders) {
      const bool dominated = std::any_of(feeders.begin(), feeders.end(),
                                         [&](int a) { return a < b && values[a] < values[b]; });
      if (!dominated) members.push_back(b);
    }
    std::sort(members.begin(), members.end());
    for (int v : members) {
      assigned[v] = 1;
      out.parts[c + 1].push_back(v + 1);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (!assigned[v]) out.parts[0].push_back(v + 1);
  }
  for (const auto& part : out.parts) out.blocks.push_back(perm.restrict_to(part));
  return out;
}

std::optional<std::string> partition_violation(const Permutation& perm, const PartitionWitness& witness) {
  const int n = perm.size();
  if (witness.parts.empty() || witness.parts.size() != witness.blocks.size()) {
    return "witness has no L0 part or mismatched blocks";
  }
  std::vector<int> seen(n + 1, 0);
  for (std::size_t i = 0; i < witness.parts.size(); ++i) {
    if (i > 0 && witness.parts[i].empty()) return "part " + std::to_string(i) + " is empty";
    for (int p : witness.parts[i]) {
      if (p < 1 || p > n || seen[p]++) return "positions do not partition 1..n";
    }
    if (witness.blocks[i] != perm.restrict_to(witness.parts[i])) {
      return "block " + std::to_string(i) + " is not the reduction of its part";
    }
  }
  if (std::count(seen.begin() + 1, seen.end(), 1) != n) return "positions do not partition 1..n";

  if (competition_graph(witness.blocks[0]).edge_count() != 0) return "C(sigma0) has edges";

  const SimpleGraph g = competition_graph(perm);
  auto components = nontrivial_components(g);
  if (components.size() + 1 != witness.parts.size()) return "part count differs from component count";
  std::set<std::vector<int>> unclaimed(components.begin(), components.end());
  for (std::size_t i = 1; i < witness.parts.size(); ++i) {
    std::vector<int> vertices;
    for (int p : witness.parts[i]) vertices.push_back(p - 1);
    const SimpleGraph piece = g.induced(vertices);
    std::vector<int> core;
    for (int local : piece.non_isolated_vertices()) core.push_back(vertices[local]);
    if (!unclaimed.erase(core)) return "part " + std::to_string(i) + " does not hold exactly one component";

    const SimpleGraph block_graph = competition_graph(witness.blocks[i]);
    if (!iso_modulo_isolated(block_graph, piece)) {
      return "C(sigma" + std::to_string(i) + ") is not its component with isolated padding";
    }
    const auto isolated = block_graph.isolated_vertices();
    const auto bv = witness.blocks[i].values();
    for (std::size_t a = 0; a < isolated.size(); ++a) {
      for (std::size_t b = a + 1; b < isolated.size(); ++b) {
        if (bv[isolated[a]] < bv[isolated[b]]) {
          return "isolated terms of sigma" + std::to_string(i) + " form a 12 pattern";
        }
      }
    }
  }
  return std::nullopt;
}

Permutation realize_132(const Permutation& perm) {
  const int n = perm.size();
  const SimpleGraph g = competition_graph(perm);
  if (has_induced(g, path_graph(3))) {
    throw Error(Errc::HasInducedP3, "C(" + perm.to_string() + ") contains an induced P3");
  }
  const auto components = nontrivial_components(g);
  if (components.empty()) return decreasing(n);

  if (components.size() > 1) {
    const PartitionWitness split = component_partition(perm);
    std::vector<Permutation> realized;
    for (const auto& block : split.blocks) realized.push_back(realize_132(block));
    return inflate_nonempty(decreasing(static_cast<int>(realized.size())), realized);
  }

  const int centre = dominating_vertex(perm);
  // Component members whose only neighbour is the centre turn isolated once it goes.
  int pendants = 0;
  for (int v : components.front()) {
    if (v != centre - 1 && g.degree(v) == 1) ++pendants;
  }
  const Permutation rest = realize_132(perm.without(centre));
  const PartitionWitness split = component_partition(rest);
  const int spare = split.blocks[0].size() - 2 * pendants;
  if (spare < 0) {
    throw Error(Errc::InternalInvariant, "too few edgeless terms to host " + std::to_string(pendants) +
                                             " pendant edges while realizing " + perm.to_string());
  }

  std::vector<Permutation> pairs(pendants, Permutation{1, 2});
  const Permutation pendant_block = pendants > 0 ? inflate(decreasing(pendants), pairs) : Permutation();
  std::vector<Permutation> pieces(split.blocks.begin() + 1, split.blocks.end());
  const Permutation component_block =
      pieces.empty() ? Permutation() : inflate(decreasing(static_cast<int>(pieces.size())), pieces);

  return inflate_nonempty(Permutation{4, 2, 1, 3},
                          {decreasing(spare), component_block, pendant_block, Permutation{1}});
}

std::vector<int> accessory_terms(const Permutation& perm) {
  std::vector<char> used(perm.size() + 1, 0);
  for (const Permutation* pattern : {&kP123, &kP132}) {
    for (const Occurrence& occ : occurrences(perm, *pattern)) {
      for (int i : occ.indices) used[i] = 1;
    }
  }
  std::vector<int> out;
  for (int p = 1; p <= perm.size(); ++p) {
    if (!used[p]) out.push_back(p);
  }
  return out;
}

std::set<Permutation> base_permutations(const WeightedGraph& target, int max_length,
                                        const std::optional<Permutation>& avoid) {
  if (max_length > 11) {
    throw Error(Errc::ScaleExceeded, "base-permutation search is limited to length 11");
  }
  const std::size_t weight = static_cast<std::size_t>(target.total_weight());
  const auto core = target.non_isolated_vertices();
  // Every term of a base permutation is an edge endpoint or a prey.
  const int longest = std::min<int>(max_length, static_cast<int>(core.size() + weight));
  const CanonicalKey target_key = canonical_key(target.induced(core));

  std::set<Permutation> out;
  for (int n = 1; n <= longest; ++n) {
    EnumerationFilter filter;
    filter.avoid = avoid;
    filter.max_triples = weight;
    for_each_permutation(n, filter, [&](const Permutation& p) {
      const WeightedGraph w = weighted_competition_graph(p);
      if (static_cast<std::size_t>(w.total_weight()) != weight) return;
      if (!accessory_terms(p).empty()) return;
      if (canonical_key(w.induced(w.non_isolated_vertices())) == target_key) out.insert(p);
    });
  }
  return out;
}

const std::set<Permutation>& BaseCatalog::get(const WeightedGraph& target,
                                              const std::optional<Permutation>& avoid) {
  const auto core = target.non_isolated_vertices();
  auto key = std::make_pair(canonical_key(target.induced(core)), avoid ? avoid->to_string() : std::string());
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    it = entries_.emplace(std::move(key), base_permutations(target, max_length_, avoid)).first;
  }
  return it->second;
}

Permutation star_base_132(int m) {
  std::vector<int> values;
  for (int i = m; i >= 1; --i) {
    values.push_back(2 * i - 1);
    values.push_back(2 * i);
  }
  values.push_back(2 * m + 1);
  return Permutation(std::move(values));
}

std::optional<YpDecomposition> yp_decompose(const Permutation& perm) {
  const auto accessory = accessory_terms(perm);
  std::vector<int> active;
  for (int p = 1, a = 0; p <= perm.size(); ++p) {
    if (a < static_cast<int>(accessory.size()) && accessory[a] == p) {
      ++a;
    } else {
      active.push_back(p);
    }
  }
  if (active.size() < 3 || active.size() % 2 == 0) return std::nullopt;
  const int m = static_cast<int>(active.size() - 1) / 2;
  if (perm.restrict_to(active) != star_base_132(m)) return std::nullopt;

  YpDecomposition out;
  for (int i = 0; i < m; ++i) out.pairs.emplace_back(active[2 * i], active[2 * i + 1]);
  out.final_predator = active.back();
  out.accessory = accessory;
  return out;
}

std::optional<std::string> yp_violation(const Permutation& perm, const YpDecomposition& layout) {
  for (std::size_t i = 0; i < layout.pairs.size(); ++i) {
    const auto [prey, predator] = layout.pairs[i];
    if (predator != prey + 1) return "accessory term inside pair " + std::to_string(i + 1);
  }
  for (std::size_t i = 0; i + 1 < layout.pairs.size(); ++i) {
    const auto [prey, predator] = layout.pairs[i];
    const auto [next_prey, next_predator] = layout.pairs[i + 1];
    const int floor = perm.value_at(next_predator);
    const int ceiling = std::min(perm.value_at(prey), perm.value_at(predator));
    int previous = ceiling;
    for (int p = predator + 1; p < next_prey; ++p) {
      const int v = perm.value_at(p);
      if (v >= previous || v <= floor) {
        return "accessory run after pair " + std::to_string(i + 1) + " is not decreasing between its neighbours";
      }
      previous = v;
    }
  }
  return std::nullopt;
}

}  // namespace permcomp
