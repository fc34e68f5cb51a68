#include "permcomp/permutation.hpp"

#include <cctype>
#include <charconv>

namespace permcomp {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = size();
  std::vector<char> seen(n + 1, 0);
  for (int v : values_) {
    if (v < 1 || v > n || seen[v]) {
      throw Error(Errc::InvalidPermutation,
                  "value " + std::to_string(v) + " is out of range or repeated for length " +
                      std::to_string(n));
    }
    seen[v] = 1;
  }
}

Permutation::Permutation(std::initializer_list<int> values)
    : Permutation(std::vector<int>(values)) {}

Permutation Permutation::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  std::vector<int> values;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view token = text.substr(start, end - start);
      while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
      while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
      int value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
        throw Error(Errc::ParseError, "bad permutation term '" + std::string(token) + "'");
      }
      values.push_back(value);
      start = end + 1;
    }
  } else {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw Error(Errc::ParseError, "bad permutation text '" + std::string(text) + "'");
      }
      values.push_back(c - '0');
    }
  }
  return Permutation(std::move(values));
}

Permutation Permutation::identity(int n) {
  std::vector<int> values(n);
  std::iota(values.begin(), values.end(), 1);
  return Permutation(std::move(values));
}

int Permutation::value_at(int position) const {
  if (position < 1 || position > size()) {
    throw Error(Errc::IndexOutOfRange, "position " + std::to_string(position) +
                                           " outside 1.." + std::to_string(size()));
  }
  return values_[position - 1];
}

int Permutation::position_of(int value) const {
  auto it = std::find(values_.begin(), values_.end(), value);
  if (it == values_.end()) {
    throw Error(Errc::IndexOutOfRange, "value " + std::to_string(value) + " not in permutation");
  }
  return static_cast<int>(it - values_.begin()) + 1;
}

Permutation Permutation::without(int position) const {
  if (position < 1 || position > size()) {
    throw Error(Errc::IndexOutOfRange, "position " + std::to_string(position) +
                                           " outside 1.." + std::to_string(size()));
  }
  std::vector<int> rest;
  rest.reserve(values_.size() - 1);
  for (int i = 0; i < size(); ++i) {
    if (i != position - 1) rest.push_back(values_[i]);
  }
  return reduce(rest);
}

Permutation Permutation::restrict_to(std::span<const int> positions) const {
  std::vector<int> sorted(positions.begin(), positions.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> sub;
  sub.reserve(sorted.size());
  for (int p : sorted) sub.push_back(value_at(p));
  return reduce(sub);
}

std::string Permutation::to_string() const {
  const bool compact = std::all_of(values_.begin(), values_.end(), [](int v) { return v <= 9; });
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(values_[i]);
  }
  return out;
}

namespace {

// Depth-first extension of partial index tuples; a branch is cut as soon as
// the chosen terms stop being order-isomorphic to the pattern's prefix.
void collect_occurrences(std::span<const int> host, std::span<const int> pattern,
                         std::vector<int>& chosen, int next, std::vector<Occurrence>& out) {
  const int depth = static_cast<int>(chosen.size());
  const int k = static_cast<int>(pattern.size());
  if (depth == k) {
    Occurrence occ;
    occ.indices.reserve(k);
    for (int idx : chosen) occ.indices.push_back(idx + 1);
    out.push_back(std::move(occ));
    return;
  }
  const int n = static_cast<int>(host.size());
  for (int idx = next; idx <= n - (k - depth); ++idx) {
    bool consistent = true;
    for (int e = 0; e < depth && consistent; ++e) {
      consistent = (host[chosen[e]] < host[idx]) == (pattern[e] < pattern[depth]);
    }
    if (!consistent) continue;
    chosen.push_back(idx);
    collect_occurrences(host, pattern, chosen, idx + 1, out);
    chosen.pop_back();
  }
}

// True iff some occurrence of `pattern` in `prefix` uses the final term.
bool ends_with_occurrence(std::span<const int> prefix, std::span<const int> pattern,
                          std::vector<int>& chosen, int next) {
  const int depth = static_cast<int>(chosen.size());
  const int k = static_cast<int>(pattern.size());
  const int last = static_cast<int>(prefix.size()) - 1;
  if (depth == k - 1) {
    for (int e = 0; e < depth; ++e) {
      if ((prefix[chosen[e]] < prefix[last]) != (pattern[e] < pattern[depth])) return false;
    }
    return true;
  }
  for (int idx = next; idx <= last - (k - 1 - depth); ++idx) {
    bool consistent = true;
    for (int e = 0; e < depth && consistent; ++e) {
      consistent = (prefix[chosen[e]] < prefix[idx]) == (pattern[e] < pattern[depth]);
    }
    if (!consistent) continue;
    chosen.push_back(idx);
    const bool found = ends_with_occurrence(prefix, pattern, chosen, idx + 1);
    chosen.pop_back();
    if (found) return true;
  }
  return false;
}

class PrefixGenerator {
 public:
  PrefixGenerator(int n, const EnumerationFilter& filter,
                  const std::function<void(const Permutation&)>& visit)
      : n_(n), filter_(filter), visit_(visit), used_(n + 1, 0), later_larger_(n, 0) {
    prefix_.reserve(n);
  }

  void run() { extend(); }

 private:
  void extend() {
    const int k = static_cast<int>(prefix_.size());
    if (k == n_) {
      visit_(Permutation(prefix_));
      return;
    }
    int lo = 1;
    int hi = n_;
    if (k == 0 && filter_.first_value) lo = hi = *filter_.first_value;
    for (int v = lo; v <= hi; ++v) {
      if (used_[v]) continue;

      // Triples i < j < k with prefix_[i] smaller than both later terms.
      std::size_t added = 0;
      for (int i = 0; i < k; ++i) {
        if (prefix_[i] < v) added += static_cast<std::size_t>(later_larger_[i]);
      }
      if (filter_.max_triples && triples_ + added > *filter_.max_triples) continue;

      prefix_.push_back(v);
      if (filter_.avoid && !filter_.avoid->empty()) {
        std::vector<int> chosen;
        if (ends_with_occurrence(prefix_, filter_.avoid->values(), chosen, 0)) {
          prefix_.pop_back();
          continue;
        }
      }
      used_[v] = 1;
      triples_ += added;
      for (int i = 0; i < k; ++i) {
        if (prefix_[i] < v) ++later_larger_[i];
      }
      extend();
      for (int i = 0; i < k; ++i) {
        if (prefix_[i] < v) --later_larger_[i];
      }
      triples_ -= added;
      used_[v] = 0;
      prefix_.pop_back();
    }
  }

  int n_;
  const EnumerationFilter& filter_;
  const std::function<void(const Permutation&)>& visit_;
  std::vector<int> prefix_;
  std::vector<char> used_;
  std::vector<int> later_larger_;
  std::size_t triples_ = 0;
};

}  // namespace

std::vector<Occurrence> occurrences(const Permutation& perm, const Permutation& pattern) {
  std::vector<Occurrence> out;
  if (pattern.empty() || pattern.size() > perm.size()) return out;
  std::vector<int> chosen;
  collect_occurrences(perm.values(), pattern.values(), chosen, 0, out);
  return out;
}

std::size_t count(const Permutation& perm, const Permutation& pattern) {
  return occurrences(perm, pattern).size();
}

bool contains(const Permutation& perm, const Permutation& pattern) {
  return !occurrences(perm, pattern).empty();
}

void for_each_permutation(int n, const EnumerationFilter& filter,
                          const std::function<void(const Permutation&)>& visit) {
  if (n < 0) return;
  // The empty pattern occurs in everything.
  if (filter.avoid && filter.avoid->empty()) return;
  if (filter.first_value && (*filter.first_value < 1 || *filter.first_value > n)) return;
  PrefixGenerator(n, filter, visit).run();
}

void for_each_avoider(int n, const Permutation& pattern,
                      const std::function<void(const Permutation&)>& visit) {
  EnumerationFilter filter;
  filter.avoid = pattern;
  for_each_permutation(n, filter, visit);
}

std::vector<Permutation> avoiders(int n, const Permutation& pattern) {
  std::vector<Permutation> out;
  for_each_avoider(n, pattern, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

Permutation inflate(const Permutation& perm, std::span<const Permutation> blocks) {
  if (static_cast<int>(blocks.size()) != perm.size()) {
    throw Error(Errc::ArityMismatch, std::to_string(blocks.size()) + " blocks for a permutation of length " +
                                         std::to_string(perm.size()));
  }
  const int n = perm.size();
  // offset[v] = total size of blocks assigned to values below v.
  std::vector<int> size_by_value(n + 1, 0);
  for (int i = 0; i < n; ++i) {
    if (blocks[i].empty()) {
      throw Error(Errc::EmptyBlock, "block " + std::to_string(i + 1) + " is empty");
    }
    size_by_value[perm.values()[i]] = blocks[i].size();
  }
  std::vector<int> offset(n + 1, 0);
  for (int v = 2; v <= n; ++v) offset[v] = offset[v - 1] + size_by_value[v - 1];

  std::vector<int> values;
  for (int i = 0; i < n; ++i) {
    const int base = offset[perm.values()[i]];
    for (int x : blocks[i].values()) values.push_back(base + x);
  }
  return Permutation(std::move(values));
}

Permutation decreasing(int k) {
  std::vector<int> values(std::max(k, 0));
  for (int i = 0; i < k; ++i) values[i] = k - i;
  return Permutation(std::move(values));
}

}  // namespace permcomp
