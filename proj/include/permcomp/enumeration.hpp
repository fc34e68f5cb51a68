#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "permcomp/graph.hpp"
#include "permcomp/permutation.hpp"
#include "permcomp/series.hpp"

namespace permcomp {

/// Largest n each exhaustive sweep accepts without `force`.
struct ScaleLimits {
  int full_sn = 9;
  int avoider_class = 11;
  int h_bruteforce = 10;
  int preimage = 10;
  int characterization = 8;
};

struct SweepOptions {
  /// Worker threads; 0 picks the hardware concurrency.
  int jobs = 1;
  bool force = false;
  ScaleLimits limits;
};

/// Throws Errc::ScaleExceeded when n > limit and `force` is off.
void check_scale(const char* what, int n, int limit, bool force);

/// Runs `visit(worker, π)` over S_n filtered by `filter`, splitting the work
/// by first value across workers. `visit` must only touch state owned by its
/// worker index. Returns the worker count used.
int parallel_sweep(int n, const EnumerationFilter& filter, int jobs,
                   const std::function<void(int, const Permutation&)>& visit);

/// Competition graphs of a permutation class, one lex-least representative per
/// isomorphism class.
struct GraphClassSet {
  int n = 0;
  std::optional<Permutation> avoid;
  std::map<CanonicalKey, Permutation> representatives;

  std::size_t size() const { return representatives.size(); }
  bool contains(const CanonicalKey& key) const { return representatives.count(key) > 0; }
  std::set<CanonicalKey> keys() const;
};

/// C(S_n) or C(S_n(τ)). n ≤ 9 for S_n, n ≤ 11 with τ.
GraphClassSet competition_class(int n, const std::optional<Permutation>& avoid, const SweepOptions& options = {});

/// Keys of `a` missing from `b`.
std::vector<CanonicalKey> class_difference(const GraphClassSet& a, const GraphClassSet& b);

/// π ∈ S_n(τ) (or S_n) with W(π) ≅ G up to isolated vertices, sorted. n ≤ 10.
std::vector<Permutation> wcg_preimage(const WeightedGraph& target, int n, const std::optional<Permutation>& avoid,
                                      const SweepOptions& options = {});

/// Unit-weight K_{1,m} and P_m.
WeightedGraph unit_star(int m);
WeightedGraph unit_path(int m);

/// h(m,n) by enumerating S_n(132). n ≤ 10.
BigInt h_bruteforce(int m, int n, const SweepOptions& options = {});

/// h(m,n) for 1 ≤ m ≤ max_m, 1 ≤ n ≤ max_n from the two-term recurrence,
/// filled row by row before any lookup.
class HTable {
 public:
  HTable(int max_m, int max_n);
  /// Zero for m < 1, n < 1 and anything beyond the table.
  BigInt operator()(int m, int n) const;
  int max_m() const { return max_m_; }
  int max_n() const { return max_n_; }

 private:
  int max_m_;
  int max_n_;
  std::vector<BigInt> cells_;
};

BigInt h_recurrence(int m, int n);

/// Closed forms for m ∈ {1,2,3}, valid from n = 3, 5, 7 respectively.
/// Throws Errc::UnsupportedM or Errc::BelowThreshold.
BigInt h_closed_form(int m, int n);
int closed_form_threshold(int m);

/// h(m,n) cells with the methods that produced each one.
class SequenceTable {
 public:
  enum class Method { Brute, Recurrence, Series, ClosedForm };

  struct Cell {
    BigInt value;
    std::set<Method> methods;
  };

  /// Records a value; returns false (and keeps the first value) on disagreement.
  bool record(int m, int n, const BigInt& value, Method method);
  const std::map<std::pair<int, int>, Cell>& cells() const { return cells_; }
  const std::vector<std::string>& conflicts() const { return conflicts_; }
  std::optional<BigInt> value(int m, int n) const;

  /// Rows m, columns n, header "m\n,1,2,…".
  std::string to_csv(int max_m, int max_n) const;
  std::string to_text(int max_m, int max_n) const;

 private:
  std::map<std::pair<int, int>, Cell> cells_;
  std::vector<std::string> conflicts_;
};

std::string to_string(SequenceTable::Method method);

/// h rows m = 1, 2, 3 as b-files ("n value" lines, n from the first nonzero
/// term to max_n), each preceded by a comment naming its OEIS entry.
std::string oeis_rows(int max_n = 30);

/// First layout problem among W_n^{-1}(K_{1,m};132): a member whose
/// non-accessory terms are not the pair layout, an accessory term inside a
/// pair, or a misplaced accessory run.
std::optional<std::string> yp_structure_violation(int m, int n, const SweepOptions& options = {});

/// Splits W_n^{-1}(K_{1,m};132), m ≥ 2, by the term right after the first
/// pair: removing it (accessory) or it and its partner (next pair) must land
/// injectively in W_{n−1}^{-1}(K_{1,m};132) and W_{n−2}^{-1}(K_{1,m−1};132).
struct RecurrenceSplit {
  std::size_t total = 0;
  std::size_t accessory_branch = 0;
  std::size_t pair_branch = 0;
  std::vector<std::string> problems;
};

RecurrenceSplit recurrence_split(int m, int n, const SweepOptions& options = {});

enum class BijectionKind {
  /// T^{m−2}: W_n^{-1}(P_m) → W_n^{-1}(K_{1,m}).
  PathStar,
  /// M: W_n^{-1}(P_m;123) → W_n^{-1}(K_{1,m};132).
  PathStar123To132,
};

struct BijectionCheck {
  int m = 0;
  int n = 0;
  std::size_t domain = 0;
  std::size_t codomain = 0;
  std::vector<std::pair<Permutation, Permutation>> table;
  std::vector<std::string> problems;

  bool ok() const { return problems.empty() && domain == codomain; }
};

/// Applies the map to the whole domain and checks membership of every image,
/// injectivity, surjectivity and that the inverse undoes it.
BijectionCheck verify_bijection(BijectionKind kind, int m, int n, const SweepOptions& options = {});

}  // namespace permcomp
