#pragma once

#include <optional>
#include <string>
#include <vector>

#include "permcomp/graph.hpp"
#include "permcomp/permutation.hpp"

namespace permcomp {

// Membership tests for the preimage classes of unit-weight paths and stars.
// Isolated vertices of W(π) are ignored.

/// m if the non-isolated part of W(π) is P_m with all weights 1, m ≥ 1.
std::optional<int> path_size(const Permutation& perm);
/// m if the non-isolated part of W(π) is K_{1,m} with all weights 1, m ≥ 1.
std::optional<int> star_size(const Permutation& perm);

/// Positions (1-based) of p₀ … p_m.
struct PathLabeling {
  std::vector<int> positions;

  int edges() const { return static_cast<int>(positions.size()) - 1; }
  int operator[](int j) const { return positions.at(j); }
};

/// Centre a and leaves b₁ … b_m, leaves in left-to-right order.
struct StarLabeling {
  int centre = 0;
  std::vector<int> leaves;
};

/// The labeling with p_i left of p_{i+1} for i ≤ m−2, p_m right of p_{m−2}
/// and π(p_m) < π(p₁). Orientations are tried in both directions; if both
/// qualify, the one with p₀ further left wins. Throws Errc::NotAPath, or
/// Errc::LabelingFailed when neither orientation qualifies.
PathLabeling path_labeling(const Permutation& perm);

/// Throws Errc::NotAStar. For m = 1 the larger term is the centre.
StarLabeling star_labeling(const Permutation& perm);

/// T^k: values at i₁ … i_{k+1} rotated one step left. 0 ≤ k ≤ m−2.
/// Throws Errc::NotAPath or Errc::KOutOfRange.
Permutation shift_path(const Permutation& perm, int k);

/// Reduced five-term window around step `step` of T applied to π (a path
/// permutation): p₁, p_{k+2}, p_{k+3} and the prey of {p₁,p_{k+2}} and
/// {p_{k+2},p_{k+3}} in T^step(π), in left-to-right order.
Permutation shift_window(const Permutation& perm, int step);

/// Checks every window of T^{m−2}(π) against 34152 / 35142 (34125 / 35124
/// also allowed on the last step). Returns a description of the first miss.
std::optional<std::string> shift_window_violation(const Permutation& perm);

/// T^{m−2}: W_n^{-1}(P_m) → W_n^{-1}(K_{1,m}). Identity for m ≤ 2, where the
/// path and the star coincide.
Permutation path_to_star(const Permutation& perm);
/// Inverse of path_to_star: values at b₂ … b_{m−1}, a rotated one step right.
Permutation star_to_path(const Permutation& perm);

/// M: W_n^{-1}(P_m;123) → W_n^{-1}(K_{1,m};132), a left rotation of the
/// values at p₀ … p_m. Throws Errc::NotA123Path.
Permutation path123_to_star132(const Permutation& perm);
/// M⁻¹. Throws Errc::NotAStar when π contains 132 or W(π) is not a star.
Permutation star132_to_path123(const Permutation& perm);

}  // namespace permcomp
