#include "permcomp/enumeration.hpp"

#include <algorithm>
#include <exception>
#include <sstream>
#include <thread>

#include "permcomp/bijections.hpp"
#include "permcomp/compgraph.hpp"
#include "permcomp/structure.hpp"

namespace permcomp {

namespace {

const Permutation kP123{1, 2, 3};
const Permutation kP132{1, 3, 2};

CanonicalKey core_key(const WeightedGraph& g) { return canonical_key(g.induced(g.non_isolated_vertices())); }

std::string join(const std::vector<Permutation>& perms) {
  std::string out;
  for (const auto& p : perms) out += (out.empty() ? "" : " ") + p.to_string();
  return out;
}

}  // namespace

void check_scale(const char* what, int n, int limit, bool force) {
  if (n > limit && !force) {
    throw Error(Errc::ScaleExceeded, std::string(what) + " at n = " + std::to_string(n) + " exceeds the cap of " +
                                         std::to_string(limit) + " (use --force)");
  }
}

int parallel_sweep(int n, const EnumerationFilter& filter, int jobs,
                   const std::function<void(int, const Permutation&)>& visit) {
  if (jobs <= 0) jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  const int workers = std::max(1, std::min(jobs, n));
  if (workers == 1) {
    for_each_permutation(n, filter, [&](const Permutation& p) { visit(0, p); });
    return 1;
  }
  std::vector<std::exception_ptr> failures(workers);
  std::vector<std::thread> threads;
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (int first = w + 1; first <= n; first += workers) {
          if (filter.first_value && *filter.first_value != first) continue;
          EnumerationFilter part = filter;
          part.first_value = first;
          for_each_permutation(n, part, [&](const Permutation& p) { visit(w, p); });
        }
      } catch (...) {
        failures[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  return workers;
}

std::set<CanonicalKey> GraphClassSet::keys() const {
  std::set<CanonicalKey> out;
  for (const auto& [key, rep] : representatives) out.insert(key);
  return out;
}

GraphClassSet competition_class(int n, const std::optional<Permutation>& avoid, const SweepOptions& options) {
  check_scale("competition class", n, avoid ? options.limits.avoider_class : options.limits.full_sn, options.force);
  const int workers = std::max(1, options.jobs <= 0 ? static_cast<int>(std::thread::hardware_concurrency()) : options.jobs);
  std::vector<std::map<CanonicalKey, Permutation>> local(workers);
  EnumerationFilter filter;
  filter.avoid = avoid;
  parallel_sweep(n, filter, workers, [&](int w, const Permutation& p) {
    // Lexicographic order within a worker keeps the first hit least.
    local[w].try_emplace(canonical_key(competition_graph(p)), p);
  });
  GraphClassSet out;
  out.n = n;
  out.avoid = avoid;
  for (auto& part : local) {
    for (auto& [key, rep] : part) {
      auto [it, inserted] = out.representatives.try_emplace(key, rep);
      if (!inserted && rep < it->second) it->second = rep;
    }
  }
  return out;
}

std::vector<CanonicalKey> class_difference(const GraphClassSet& a, const GraphClassSet& b) {
  std::vector<CanonicalKey> out;
  for (const auto& [key, rep] : a.representatives) {
    if (!b.contains(key)) out.push_back(key);
  }
  return out;
}

std::vector<Permutation> wcg_preimage(const WeightedGraph& target, int n, const std::optional<Permutation>& avoid,
                                      const SweepOptions& options) {
  check_scale("weighted preimage", n, options.limits.preimage, options.force);
  const auto weight = static_cast<std::size_t>(target.total_weight());
  const CanonicalKey key = core_key(target);
  const int workers = std::max(1, options.jobs <= 0 ? static_cast<int>(std::thread::hardware_concurrency()) : options.jobs);
  std::vector<std::vector<Permutation>> local(workers);
  EnumerationFilter filter;
  filter.avoid = avoid;
  filter.max_triples = weight;
  parallel_sweep(n, filter, workers, [&](int w, const Permutation& p) {
    const WeightedGraph g = weighted_competition_graph(p);
    if (static_cast<std::size_t>(g.total_weight()) == weight && core_key(g) == key) local[w].push_back(p);
  });
  std::vector<Permutation> out;
  for (auto& part : local) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end());
  return out;
}

WeightedGraph unit_star(int m) { return unit_weighted(star_graph(m)); }
WeightedGraph unit_path(int m) { return unit_weighted(path_graph(m)); }

BigInt h_bruteforce(int m, int n, const SweepOptions& options) {
  check_scale("h brute force", n, options.limits.h_bruteforce, options.force);
  if (m < 1 || n < 1) return 0;
  SweepOptions inner = options;
  inner.force = true;
  return BigInt(wcg_preimage(unit_star(m), n, kP132, inner).size());
}

HTable::HTable(int max_m, int max_n)
    : max_m_(std::max(0, max_m)), max_n_(std::max(0, max_n)), cells_(static_cast<std::size_t>(max_m_) * max_n_) {
  for (int m = 1; m <= max_m_; ++m) {
    for (int n = 1; n <= max_n_; ++n) {
      BigInt& cell = cells_[static_cast<std::size_t>(m - 1) * max_n_ + (n - 1)];
      if (n <= 2) {
        cell = 0;
      } else if (m == 1) {
        cell = BigInt(n - 2) << (n - 3);
      } else {
        cell = (*this)(m, n - 1) + (*this)(m - 1, n - 2);
      }
    }
  }
}

BigInt HTable::operator()(int m, int n) const {
  if (m < 1 || n < 1 || m > max_m_ || n > max_n_) return 0;
  return cells_[static_cast<std::size_t>(m - 1) * max_n_ + (n - 1)];
}

BigInt h_recurrence(int m, int n) {
  if (m < 1 || n < 1) return 0;
  return HTable(m, n)(m, n);
}

int closed_form_threshold(int m) {
  switch (m) {
    case 1: return 3;
    case 2: return 5;
    case 3: return 7;
    default: throw Error(Errc::UnsupportedM, "closed forms exist for m = 1, 2, 3, not " + std::to_string(m));
  }
}

BigInt h_closed_form(int m, int n) {
  const int threshold = closed_form_threshold(m);
  if (n < threshold) {
    throw Error(Errc::BelowThreshold, "closed form for m = " + std::to_string(m) + " holds from n = " +
                                          std::to_string(threshold) + ", got " + std::to_string(n));
  }
  switch (m) {
    case 1: return BigInt(n - 2) << (n - 3);
    case 2: return (BigInt(n - 5) << (n - 4)) + 1;
    default: return (BigInt(n - 8) << (n - 5)) + n - 2;
  }
}

std::string to_string(SequenceTable::Method method) {
  switch (method) {
    case SequenceTable::Method::Brute: return "brute";
    case SequenceTable::Method::Recurrence: return "recurrence";
    case SequenceTable::Method::Series: return "series";
    case SequenceTable::Method::ClosedForm: return "closed-form";
  }
  return "?";
}

bool SequenceTable::record(int m, int n, const BigInt& value, Method method) {
  auto [it, inserted] = cells_.try_emplace({m, n}, Cell{value, {method}});
  if (inserted) return true;
  if (it->second.value != value) {
    conflicts_.push_back("h(" + std::to_string(m) + "," + std::to_string(n) + "): " + to_string(method) + " gives " +
                         value.str() + ", table holds " + it->second.value.str());
    return false;
  }
  it->second.methods.insert(method);
  return true;
}

std::optional<BigInt> SequenceTable::value(int m, int n) const {
  auto it = cells_.find({m, n});
  if (it == cells_.end()) return std::nullopt;
  return it->second.value;
}

std::string SequenceTable::to_csv(int max_m, int max_n) const {
  std::ostringstream out;
  out << "m\\n";
  for (int n = 1; n <= max_n; ++n) out << ',' << n;
  out << '\n';
  for (int m = 1; m <= max_m; ++m) {
    out << m;
    for (int n = 1; n <= max_n; ++n) {
      const auto v = value(m, n);
      out << ',' << (v ? v->str() : "");
    }
    out << '\n';
  }
  return out.str();
}

std::string SequenceTable::to_text(int max_m, int max_n) const {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"m\\n"};
  for (int n = 1; n <= max_n; ++n) header.push_back(std::to_string(n));
  rows.push_back(header);
  for (int m = 1; m <= max_m; ++m) {
    std::vector<std::string> row{std::to_string(m)};
    for (int n = 1; n <= max_n; ++n) {
      const auto v = value(m, n);
      row.push_back(v ? v->str() : "-");
    }
    rows.push_back(row);
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << "  ";
      out << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    out << '\n';
  }
  return out.str();
}

std::string oeis_rows(int max_n) {
  static const char* const ids[] = {"A001787", "A000337", "A045618"};
  const HTable table(3, max_n);
  std::ostringstream out;
  for (int m = 1; m <= 3; ++m) {
    const int first = 2 * m + 1;
    out << "# " << ids[m - 1] << ": h(" << m << ",n) for n = " << first << ".." << max_n << '\n';
    for (int n = first; n <= max_n; ++n) out << n << ' ' << table(m, n) << '\n';
  }
  return out.str();
}

std::optional<std::string> yp_structure_violation(int m, int n, const SweepOptions& options) {
  for (const Permutation& p : wcg_preimage(unit_star(m), n, kP132, options)) {
    const auto layout = yp_decompose(p);
    if (!layout || static_cast<int>(layout->pairs.size()) != m) {
      return p.to_string() + ": non-accessory terms are not " + star_base_132(m).to_string();
    }
    if (auto problem = yp_violation(p, *layout)) return p.to_string() + ": " + *problem;
  }
  return std::nullopt;
}

RecurrenceSplit recurrence_split(int m, int n, const SweepOptions& options) {
  if (m < 2) throw Error(Errc::PreconditionViolated, "the split needs m >= 2");
  RecurrenceSplit out;
  const auto members = wcg_preimage(unit_star(m), n, kP132, options);
  const auto same_m = wcg_preimage(unit_star(m), n - 1, kP132, options);
  const auto fewer = wcg_preimage(unit_star(m - 1), n - 2, kP132, options);
  std::set<Permutation> seen_same;
  std::set<Permutation> seen_fewer;
  out.total = members.size();
  for (const Permutation& p : members) {
    const auto layout = yp_decompose(p);
    if (!layout) {
      out.problems.push_back(p.to_string() + " has no pair layout");
      continue;
    }
    const int next = layout->pairs.front().second + 1;
    const bool accessory = std::binary_search(layout->accessory.begin(), layout->accessory.end(), next);
    if (accessory) {
      const Permutation image = p.without(next);
      ++out.accessory_branch;
      if (!std::binary_search(same_m.begin(), same_m.end(), image)) {
        out.problems.push_back(p.to_string() + " -> " + image.to_string() + " leaves the smaller class");
      }
      if (!seen_same.insert(image).second) out.problems.push_back(image.to_string() + " reached twice");
    } else {
      if (layout->pairs.size() < 2 || layout->pairs[1].first != next) {
        out.problems.push_back(p.to_string() + ": term after the first pair is neither accessory nor a prey");
        continue;
      }
      const Permutation image = p.without(next + 1).without(next);
      ++out.pair_branch;
      if (!std::binary_search(fewer.begin(), fewer.end(), image)) {
        out.problems.push_back(p.to_string() + " -> " + image.to_string() + " leaves the smaller star class");
      }
      if (!seen_fewer.insert(image).second) out.problems.push_back(image.to_string() + " reached twice");
    }
  }
  if (out.accessory_branch != same_m.size()) {
    out.problems.push_back("accessory branch has " + std::to_string(out.accessory_branch) + " members, h(m,n-1) = " +
                           std::to_string(same_m.size()));
  }
  if (out.pair_branch != fewer.size()) {
    out.problems.push_back("pair branch has " + std::to_string(out.pair_branch) + " members, h(m-1,n-2) = " +
                           std::to_string(fewer.size()));
  }
  return out;
}

BijectionCheck verify_bijection(BijectionKind kind, int m, int n, const SweepOptions& options) {
  const bool restricted = kind == BijectionKind::PathStar123To132;
  const std::optional<Permutation> from_avoid = restricted ? std::optional<Permutation>(kP123) : std::nullopt;
  const std::optional<Permutation> to_avoid = restricted ? std::optional<Permutation>(kP132) : std::nullopt;
  const auto domain = wcg_preimage(unit_path(m), n, from_avoid, options);
  const auto codomain = wcg_preimage(unit_star(m), n, to_avoid, options);

  BijectionCheck out;
  out.m = m;
  out.n = n;
  out.domain = domain.size();
  out.codomain = codomain.size();
  std::set<Permutation> images;
  for (const Permutation& p : domain) {
    try {
      const Permutation image = restricted ? path123_to_star132(p) : path_to_star(p);
      out.table.emplace_back(p, image);
      if (!std::binary_search(codomain.begin(), codomain.end(), image)) {
        out.problems.push_back(p.to_string() + " -> " + image.to_string() + " lands outside the target class");
      }
      if (!images.insert(image).second) out.problems.push_back(image.to_string() + " is hit twice");
      const Permutation back = restricted ? star132_to_path123(image) : star_to_path(image);
      if (back != p) {
        out.problems.push_back(p.to_string() + " -> " + image.to_string() + " -> " + back.to_string() +
                               " does not return");
      }
      if (!restricted && m >= 3) {
        if (auto window = shift_window_violation(p)) out.problems.push_back(*window);
      }
    } catch (const Error& e) {
      out.problems.push_back(p.to_string() + ": " + e.what());
    }
  }
  if (images.size() != codomain.size()) {
    std::vector<Permutation> missed;
    std::set_difference(codomain.begin(), codomain.end(), images.begin(), images.end(), std::back_inserter(missed));
    if (missed.size() > 5) missed.resize(5);
    out.problems.push_back("image has " + std::to_string(images.size()) + " of " + std::to_string(codomain.size()) +
                           " targets; missed " + join(missed));
  }
  return out;
}

}  // namespace permcomp
