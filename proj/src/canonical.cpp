#include <algorithm>
#include <map>

#include "permcomp/graph.hpp"

namespace permcomp {

namespace {

// Colour refinement followed by individualization of the first non-singleton
// cell; the key is the least upper-triangle encoding over all leaves. Twin
// vertices (identical weight rows apart from each other) are interchangeable
// by an automorphism, so only one twin per cell is branched on.
class Canonicalizer {
 public:
  Canonicalizer(int order, std::span<const int> weights, char tag)
      : n_(order), weights_(weights), tag_(tag) {}

  std::string run() {
    std::vector<int> colors(n_, 0);
    search(refine(std::move(colors)));
    if (!have_best_) best_ = encode(std::vector<int>());
    return best_;
  }

 private:
  int w(int u, int v) const { return weights_[static_cast<std::size_t>(u) * n_ + v]; }

  bool twins(int u, int v) const {
    for (int x = 0; x < n_; ++x) {
      if (x != u && x != v && w(u, x) != w(v, x)) return false;
    }
    return true;
  }

  static int rank_colors(std::vector<int>& colors, const std::vector<std::vector<int>>& signatures) {
    std::map<std::vector<int>, int> ranks;
    for (const auto& s : signatures) ranks.emplace(s, 0);
    int next = 0;
    for (auto& [sig, rank] : ranks) rank = next++;
    for (std::size_t v = 0; v < colors.size(); ++v) colors[v] = ranks[signatures[v]];
    return next;
  }

  std::vector<int> refine(std::vector<int> colors) const {
    std::vector<std::vector<int>> signatures(n_);
    for (int v = 0; v < n_; ++v) signatures[v] = {colors[v]};
    int classes = rank_colors(colors, signatures);
    while (true) {
      for (int v = 0; v < n_; ++v) {
        std::vector<std::pair<int, int>> seen;
        for (int x = 0; x < n_; ++x) {
          if (x != v && w(v, x) != 0) seen.emplace_back(colors[x], w(v, x));
        }
        std::sort(seen.begin(), seen.end());
        auto& sig = signatures[v];
        sig.assign(1, colors[v]);
        for (auto [c, weight] : seen) {
          sig.push_back(c);
          sig.push_back(weight);
        }
      }
      const int refined = rank_colors(colors, signatures);
      if (refined == classes) return colors;
      classes = refined;
    }
  }

  std::string encode(const std::vector<int>& colors) const {
    std::vector<int> order(n_);
    for (int v = 0; v < n_; ++v) order[colors[v]] = v;
    std::string out;
    out.reserve(2 + static_cast<std::size_t>(n_) * (n_ - 1) / 2);
    out.push_back(tag_);
    out.push_back(static_cast<char>(n_));
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) out.push_back(static_cast<char>(w(order[i], order[j])));
    }
    return out;
  }

  void search(const std::vector<int>& colors) {
    std::vector<int> cell_size(n_, 0);
    for (int c : colors) ++cell_size[c];
    int target = -1;
    for (int c = 0; c < n_; ++c) {
      if (cell_size[c] > 1) {
        target = c;
        break;
      }
    }
    if (target < 0) {
      std::string candidate = encode(colors);
      if (!have_best_ || candidate < best_) {
        best_ = std::move(candidate);
        have_best_ = true;
      }
      return;
    }
    std::vector<int> tried;
    for (int v = 0; v < n_; ++v) {
      if (colors[v] != target) continue;
      if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(u, v); })) continue;
      tried.push_back(v);
      std::vector<int> next(n_);
      for (int x = 0; x < n_; ++x) {
        next[x] = 2 * colors[x] + ((colors[x] == target && x != v) ? 1 : 0);
      }
      search(refine(std::move(next)));
    }
  }

  int n_;
  std::span<const int> weights_;
  char tag_;
  std::string best_;
  bool have_best_ = false;
};

void check_order(int order, const CanonicalOptions& options) {
  if (order > options.max_order) {
    throw Error(Errc::OrderTooLarge, "graph of order " + std::to_string(order) +
                                         " exceeds the canonical-form bound " +
                                         std::to_string(options.max_order));
  }
}

std::vector<int> simple_matrix(const SimpleGraph& g) {
  const int n = g.order();
  std::vector<int> m(static_cast<std::size_t>(n) * n, 0);
  for (const Edge& e : g.edges()) {
    m[static_cast<std::size_t>(e.u) * n + e.v] = 1;
    m[static_cast<std::size_t>(e.v) * n + e.u] = 1;
  }
  return m;
}

std::string exact_adjacency(const SimpleGraph& g) {
  std::string out(1, static_cast<char>(g.order()));
  for (const Edge& e : g.edges()) {
    out.push_back(static_cast<char>(e.u));
    out.push_back(static_cast<char>(e.v));
  }
  return out;
}

}  // namespace

std::string CanonicalKey::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

CanonicalKey canonical_key(const SimpleGraph& g, const CanonicalOptions& options) {
  check_order(g.order(), options);
  const std::vector<int> m = simple_matrix(g);
  return CanonicalKey{Canonicalizer(g.order(), m, 'S').run()};
}

CanonicalKey canonical_key(const WeightedGraph& g, const CanonicalOptions& options) {
  check_order(g.order(), options);
  for (int w : g.matrix()) {
    if (w > 255) throw Error(Errc::InvalidGraph, "edge weight above 255 cannot be encoded");
  }
  return CanonicalKey{Canonicalizer(g.order(), g.matrix(), 'W').run()};
}

CanonicalKey CanonicalKeyCache::key(const SimpleGraph& g) {
  std::string exact = exact_adjacency(g);
  {
    std::shared_lock lock(mutex_);
    if (auto it = entries_.find(exact); it != entries_.end()) return it->second;
  }
  CanonicalKey computed = canonical_key(g, options_);
  std::unique_lock lock(mutex_);
  return entries_.emplace(std::move(exact), std::move(computed)).first->second;
}

std::size_t CanonicalKeyCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

bool isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_key(a) == canonical_key(b);
}

bool isomorphic(const WeightedGraph& a, const WeightedGraph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count() ||
      a.total_weight() != b.total_weight()) {
    return false;
  }
  return canonical_key(a) == canonical_key(b);
}

bool iso_modulo_isolated(const SimpleGraph& a, const SimpleGraph& b) {
  const auto core_a = a.non_isolated_vertices();
  const auto core_b = b.non_isolated_vertices();
  if (core_a.size() != core_b.size() || a.edge_count() != b.edge_count()) return false;
  return canonical_key(a.induced(core_a)) == canonical_key(b.induced(core_b));
}

bool iso_modulo_isolated(const WeightedGraph& a, const WeightedGraph& b) {
  const auto core_a = a.non_isolated_vertices();
  const auto core_b = b.non_isolated_vertices();
  if (core_a.size() != core_b.size() || a.edge_count() != b.edge_count() ||
      a.total_weight() != b.total_weight()) {
    return false;
  }
  return canonical_key(a.induced(core_a)) == canonical_key(b.induced(core_b));
}

}  // namespace permcomp
