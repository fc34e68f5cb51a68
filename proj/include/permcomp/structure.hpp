#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "permcomp/graph.hpp"
#include "permcomp/permutation.hpp"

namespace permcomp {

// Positions in this module are 1-based, like Permutation::value_at.

/// Components of `g` with at least two vertices, ordered by smallest vertex.
std::vector<std::vector<int>> nontrivial_components(const SimpleGraph& g);

/// Deleting π_position loses exactly one isolated vertex of C(π) and leaves
/// the non-isolated part unchanged up to isomorphism.
bool is_redundant(const Permutation& perm, int position);

struct Minimized {
  Permutation perm;
  /// kept[i] is the position in the input of the i-th surviving term.
  std::vector<int> kept;
};

/// Repeatedly deletes the right-most redundant term.
Minimized minimize_tracked(const Permutation& perm);
Permutation minimize(const Permutation& perm);

/// For C(π) with a single non-trivial component and no induced P₃: a vertex
/// adjacent to every other vertex of that component. Found as the largest
/// term after the right-most isolated term of minimize(π), mapped back.
/// Throws Errc::PreconditionViolated otherwise.
int dominating_vertex(const Permutation& perm);

/// Split of π into subsequences L⁰..Lᵏ, one per non-trivial component plus
/// an edgeless remainder.
struct PartitionWitness {
  /// parts[0] is L⁰ (possibly empty); parts[i] holds component i and the
  /// minimal prey feeding it. Sorted positions.
  std::vector<std::vector<int>> parts;
  /// blocks[i] = red(parts[i]).
  std::vector<Permutation> blocks;

  int component_count() const { return static_cast<int>(parts.size()) - 1; }
};

PartitionWitness component_partition(const Permutation& perm);

/// Describes the first violated property of a partition witness, if any:
/// the parts tile the positions, C(σ⁰) is edgeless, C(σⁱ) is component i with
/// isolated padding, and isolated terms of σⁱ contain no 12 pattern.
std::optional<std::string> partition_violation(const Permutation& perm, const PartitionWitness& witness);

/// A 132-avoiding permutation of the same length whose competition graph is
/// isomorphic to C(π). Throws Errc::HasInducedP3 when C(π) contains an induced P₃.
Permutation realize_132(const Permutation& perm);

/// Positions of terms in no 123 and no 132 occurrence.
std::vector<int> accessory_terms(const Permutation& perm);

/// Every π with |π| ≤ max_length, no accessory term, W(π) ≅ `target` up to
/// isolated vertices and, when given, avoiding `avoid`. max_length ≤ 11.
std::set<Permutation> base_permutations(const WeightedGraph& target, int max_length,
                                        const std::optional<Permutation>& avoid = std::nullopt);

/// Memoized base-permutation sets keyed by graph and avoided pattern.
class BaseCatalog {
 public:
  explicit BaseCatalog(int max_length = 11) : max_length_(max_length) {}
  const std::set<Permutation>& get(const WeightedGraph& target,
                                   const std::optional<Permutation>& avoid = std::nullopt);

 private:
  int max_length_;
  std::map<std::pair<CanonicalKey, std::string>, std::set<Permutation>> entries_;
};

/// (2m−1)(2m)(2m−3)(2m−2)…(3)(4)(1)(2)(2m+1).
Permutation star_base_132(int m);

/// Layout of a π whose weighted competition graph is a unit-weight star:
/// the non-accessory terms read as m prey/predator pairs followed by the
/// shared predator.
struct YpDecomposition {
  std::vector<std::pair<int, int>> pairs;  // (prey position, predator position)
  int final_predator = 0;
  std::vector<int> accessory;
};

/// nullopt unless the non-accessory terms of π reduce to star_base_132(m) for some m ≥ 1.
std::optional<YpDecomposition> yp_decompose(const Permutation& perm);

/// Checks that no accessory term sits inside a pair, and that accessory runs
/// between consecutive pairs decrease and lie below pair i and above pair i+1.
std::optional<std::string> yp_violation(const Permutation& perm, const YpDecomposition& layout);

}  // namespace permcomp
