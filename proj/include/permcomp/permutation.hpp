#pragma once

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permcomp/error.hpp"

namespace permcomp {

/// A permutation of {1..n} in one-line notation.
///
/// Positions and values are 1-based in the public interface, matching the
/// usual combinatorial convention: `value_at(1)` is the first term. The empty
/// permutation (n = 0) is a valid value.
class Permutation {
 public:
  Permutation() = default;
  /// Throws Errc::InvalidPermutation unless `values` is a bijection onto {1..n}.
  explicit Permutation(std::vector<int> values);
  Permutation(std::initializer_list<int> values);

  /// Accepts compact digits ("53412") or a comma list ("10,3,1,...").
  static Permutation parse(std::string_view text);
  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  bool empty() const noexcept { return values_.empty(); }

  /// 1-based access: `value_at(i)` is π_i.
  int value_at(int position) const;
  /// 1-based position of `value`, i.e. π⁻¹(value).
  int position_of(int value) const;

  std::span<const int> values() const noexcept { return values_; }
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  /// red(π − π_position).
  Permutation without(int position) const;
  /// red of the subsequence at the given 1-based positions (any order; sorted internally).
  Permutation restrict_to(std::span<const int> positions) const;

  /// Compact digits when every value is ≤ 9, comma-separated otherwise.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.values_ <=> b.values_;
  }

 private:
  std::vector<int> values_;
};

/// 1-based, strictly increasing positions i₁ < … < i_k of a pattern occurrence.
struct Occurrence {
  std::vector<int> indices;
  friend bool operator==(const Occurrence&, const Occurrence&) = default;
  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

/// The permutation order-isomorphic to `seq`. Throws Errc::DuplicateValues on ties.
template <std::totally_ordered T>
Permutation reduce(std::span<const T> seq) {
  std::vector<int> order(seq.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return seq[a] < seq[b]; });
  std::vector<int> values(seq.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    if (rank > 0 && !(seq[order[rank - 1]] < seq[order[rank]])) {
      throw Error(Errc::DuplicateValues,
                  "entries " + std::to_string(order[rank - 1] + 1) + " and " +
                      std::to_string(order[rank] + 1) + " are equal");
    }
    values[order[rank]] = static_cast<int>(rank) + 1;
  }
  return Permutation(std::move(values));
}

template <std::totally_ordered T>
Permutation reduce(const std::vector<T>& seq) {
  return reduce(std::span<const T>(seq));
}

/// All occurrences of `pattern` in `perm`, in lexicographic order of index tuples.
/// A pattern of length 0 has no occurrences.
std::vector<Occurrence> occurrences(const Permutation& perm, const Permutation& pattern);
std::size_t count(const Permutation& perm, const Permutation& pattern);
bool contains(const Permutation& perm, const Permutation& pattern);
inline bool avoids(const Permutation& perm, const Permutation& pattern) {
  return !contains(perm, pattern);
}

/// Restrictions applied during prefix-by-prefix generation of S_n.
struct EnumerationFilter {
  /// Skip every permutation containing this pattern (length ≥ 1).
  std::optional<Permutation> avoid;
  /// Skip permutations whose number of 123 plus 132 occurrences exceeds this
  /// value; that number is the total edge weight of the weighted competition graph.
  std::optional<std::size_t> max_triples;
  /// Only permutations starting with this value.
  std::optional<int> first_value;
};

/// Streams every π ∈ S_n passing `filter` in lexicographic order. Prefixes are
/// pruned as soon as they contain the avoided pattern or exceed the triple budget.
void for_each_permutation(int n, const EnumerationFilter& filter,
                          const std::function<void(const Permutation&)>& visit);

/// S_n(τ) in lexicographic order.
void for_each_avoider(int n, const Permutation& pattern,
                      const std::function<void(const Permutation&)>& visit);
std::vector<Permutation> avoiders(int n, const Permutation& pattern);

/// π[σ¹, …, σⁿ]: term i of π replaced by block σⁱ.
Permutation inflate(const Permutation& perm, std::span<const Permutation> blocks);
inline Permutation inflate(const Permutation& perm, std::initializer_list<Permutation> blocks) {
  return inflate(perm, std::span<const Permutation>(blocks.begin(), blocks.size()));
}

/// k (k−1) … 1.
Permutation decreasing(int k);

}  // namespace permcomp

template <>
struct std::hash<permcomp::Permutation> {
  std::size_t operator()(const permcomp::Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : p.values()) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
    return h;
  }
};
