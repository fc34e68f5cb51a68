#pragma once

#include <cstdint>
#include <vector>

#include "permcomp/enumeration.hpp"
#include "permcomp/report.hpp"

namespace permcomp {

/// h(m,n) for m = 1..5, n = 1..12 as published.
const std::vector<std::vector<long>>& published_h_table();

/// |S_n(123)| = |S_n(132)| = Catalan(n) for n = 1..max_n.
Report verify_catalan(int max_n, const SweepOptions& options = {});

/// C(S_n(123)) and C(S_n(132)) hold the same graphs up to isomorphism for n ≤ max_n.
Report verify_avoider_class_agreement(int max_n, const SweepOptions& options = {});

/// Over S₇: C(S₇) \ C(S₇(123)) = {K₁,₃ + 3 isolated}, C(S₇) \ C(S₇(132)) =
/// {P₃ + 3 isolated}, and the padded star does occur in C(S₇(132)).
/// Witnesses list a representative for every graph of C(S₇).
std::vector<Report> verify_seven_term_obstructions(const SweepOptions& options = {});

/// For every G ∈ C(S_n): G ∈ C(S_n(132)) ⇔ no induced P₃, and
/// G ∈ C(S_n(123)) ⇔ no induced K₁,₃. n ≤ 8 unless forced.
std::vector<Report> verify_characterizations(int n, const SweepOptions& options = {});

/// realize_132 over every π ∈ S_n with induced-P₃-free C(π).
Report verify_realize_132(int n, const SweepOptions& options = {});

/// Recurrence table against the published values, plus brute force for n ≤ brute_max_n.
Report verify_h_table(int max_m, int max_n, int brute_max_n, const SweepOptions& options = {},
                      SequenceTable* table = nullptr);

/// Closed forms against the recurrence for threshold ≤ n ≤ max_n.
Report verify_closed_forms(int max_n);

/// Coefficients of F_m and H against the recurrence.
Report verify_series(int max_m, int max_n);

/// Structure of W_n^{-1}(K_{1,m};132) and the split behind the recurrence.
Report verify_star_structure(int max_m, int max_n, const SweepOptions& options = {});

Report verify_path_star(BijectionKind kind, int m, int n_from, int n_to, const SweepOptions& options = {});

/// Base-permutation sets of K₁,₃ and the 132-avoiding star family.
Report verify_base_permutations(int max_m, int max_length);

/// Interval property and weight sums of C(π), W(π) for all π up to max_n.
Report verify_graph_properties(int max_n, const SweepOptions& options = {});

/// Point-set reduction against the direct competition graph on random sets.
Report verify_pointsets(int samples, int max_points, std::uint64_t seed);

}  // namespace permcomp
