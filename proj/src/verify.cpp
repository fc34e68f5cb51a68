#include "permcomp/verify.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "permcomp/bijections.hpp"
#include "permcomp/compgraph.hpp"
#include "permcomp/structure.hpp"

namespace permcomp {

namespace {

const Permutation kP123{1, 2, 3};
const Permutation kP132{1, 3, 2};

BigInt catalan(int n) {
  BigInt c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

std::string describe_graph(const SimpleGraph& g) {
  std::string out = "order " + std::to_string(g.order()) + " edges";
  for (const Edge& e : g.edges()) out += " " + std::to_string(e.u) + "-" + std::to_string(e.v);
  return out;
}

std::string cell(int m, int n) { return "h(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

}  // namespace

const std::vector<std::vector<long>>& published_h_table() {
  static const std::vector<std::vector<long>> table{
      {0, 0, 1, 4, 12, 32, 80, 192, 448, 1024, 2304, 5120},
      {0, 0, 0, 0, 1, 5, 17, 49, 129, 321, 769, 1793},
      {0, 0, 0, 0, 0, 0, 1, 6, 23, 72, 201, 522},
      {0, 0, 0, 0, 0, 0, 0, 0, 1, 7, 30, 102},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 8},
  };
  return table;
}

Report verify_catalan(int max_n, const SweepOptions& options) {
  Stopwatch clock;
  Report r{"catalan", "|S_n(123)| = |S_n(132)| = Catalan(n)"};
  r.params["max_n"] = max_n;
  for (int n = 1; n <= max_n; ++n) {
    for (const Permutation* pattern : {&kP123, &kP132}) {
      std::vector<std::size_t> counts(std::max(1, options.jobs <= 0 ? 64 : options.jobs), 0);
      EnumerationFilter filter;
      filter.avoid = *pattern;
      parallel_sweep(n, filter, static_cast<int>(counts.size()), [&](int w, const Permutation&) { ++counts[w]; });
      std::size_t total = 0;
      for (auto c : counts) total += c;
      r.require(BigInt(total) == catalan(n), "|S_" + std::to_string(n) + "(" + pattern->to_string() +
                                                 ")| = " + std::to_string(total) + ", Catalan = " + catalan(n).str());
    }
    r.witnesses.push_back("n=" + std::to_string(n) + ": " + catalan(n).str());
  }
  r.runtime_seconds = clock.seconds();
  return r;
}

Report verify_avoider_class_agreement(int max_n, const SweepOptions& options) {
  Stopwatch clock;
  Report r{"avoider-classes-agree", "C(S_n(123)) and C(S_n(132)) agree up to isomorphism"};
  r.params = {{"max_n", max_n}};
  for (int n = 1; n <= max_n; ++n) {
    const GraphClassSet a = competition_class(n, kP123, options);
    const GraphClassSet b = competition_class(n, kP132, options);
    for (const auto& key : class_difference(a, b)) {
      r.fail("n=" + std::to_string(n) + ": " + a.representatives.at(key).to_string() + " has no 132-avoiding match");
    }
    for (const auto& key : class_difference(b, a)) {
      r.fail("n=" + std::to_string(n) + ": " + b.representatives.at(key).to_string() + " has no 123-avoiding match");
    }
    r.witnesses.push_back("n=" + std::to_string(n) + ": " + std::to_string(a.size()) + " graphs");
  }
  r.runtime_seconds = clock.seconds();
  return r;
}

std::vector<Report> verify_seven_term_obstructions(const SweepOptions& options) {
  Stopwatch clock;
  const GraphClassSet all = competition_class(7, std::nullopt, options);
  const GraphClassSet avoid123 = competition_class(7, kP123, options);
  const GraphClassSet avoid132 = competition_class(7, kP132, options);
  const CanonicalKey star = canonical_key(star_graph(3).padded(3));
  const CanonicalKey path = canonical_key(path_graph(3).padded(3));

  std::vector<std::string> listing;
  for (const auto& [key, rep] : all.representatives) {
    listing.push_back(rep.to_string() + " in123=" + (avoid123.contains(key) ? "yes" : "no") +
                      " in132=" + (avoid132.contains(key) ? "yes" : "no"));
  }

  auto check = [&](const char* claim, const char* text, const GraphClassSet& sub, const CanonicalKey& expected) {
    Report r{claim, text};
    r.params = {{"n", 7}, {"graphs", all.size()}, {"subclass_graphs", sub.size()}};
    const auto missing = class_difference(all, sub);
    r.require(!sub.contains(expected), "the obstruction occurs in the avoider class");
    for (const auto& key : missing) {
      if (key != expected) r.fail(all.representatives.at(key).to_string() + " also missing from the avoider class");
    }
    r.require(std::find(missing.begin(), missing.end(), expected) != missing.end(),
              "the obstruction does not occur in C(S_7) at all");
    r.witnesses = listing;
    return r;
  };

  std::vector<Report> out;
  out.push_back(check("obstruction-123", "C(S_7) minus C(S_7(123)) is exactly the padded K_{1,3}", avoid123, star));
  out.push_back(check("obstruction-132", "C(S_7) minus C(S_7(132)) is exactly the padded P_3", avoid132, path));
  Report sanity{"obstruction-star-in-132", "the padded K_{1,3} occurs in C(S_7(132))"};
  sanity.params = {{"n", 7}};
  if (avoid132.contains(star)) {
    sanity.witnesses.push_back(avoid132.representatives.at(star).to_string());
  } else {
    sanity.fail(describe_graph(star_graph(3).padded(3)) + " has no 132-avoiding realizer");
  }
  out.push_back(sanity);
  const double seconds = clock.seconds();
  for (auto& r : out) r.runtime_seconds = seconds;
  return out;
}

std::vector<Report> verify_characterizations(int n, const SweepOptions& options) {
  check_scale("characterization sweep", n, options.limits.characterization, options.force);
  Stopwatch clock;
  SweepOptions inner = options;
  inner.force = true;
  const GraphClassSet all = competition_class(n, std::nullopt, inner);
  const GraphClassSet avoid132 = competition_class(n, kP132, inner);
  const GraphClassSet avoid123 = competition_class(n, kP123, inner);
  const SimpleGraph path = path_graph(3);
  const SimpleGraph star = star_graph(3);

  const std::string at = " (n = " + std::to_string(n) + ")";
  Report thm{"p3-free-iff-132", "G in C(S_n(132)) iff G has no induced P_3" + at};
  Report conj{"k13-free-iff-123", "G in C(S_n(123)) iff G has no induced K_{1,3}" + at};
  for (Report* r : {&thm, &conj}) r->params = {{"n", n}, {"graphs", all.size()}};
  std::size_t with_path = 0;
  std::size_t with_star = 0;
  for (const auto& [key, rep] : all.representatives) {
    const SimpleGraph g = competition_graph(rep);
    const bool has_path = has_induced(g, path);
    const bool has_star = has_induced(g, star);
    with_path += has_path;
    with_star += has_star;
    thm.require(has_path != avoid132.contains(key),
                rep.to_string() + (has_path ? " has an induced P_3 yet is 132-realizable"
                                            : " is P_3-free yet no 132-avoider realizes it"));
    conj.require(has_star != avoid123.contains(key),
                 rep.to_string() + (has_star ? " has an induced K_{1,3} yet is 123-realizable"
                                             : " is K_{1,3}-free yet no 123-avoider realizes it"));
  }
  thm.witnesses.push_back(std::to_string(with_path) + " of " + std::to_string(all.size()) + " graphs contain P_3");
  conj.witnesses.push_back(std::to_string(with_star) + " of " + std::to_string(all.size()) + " graphs contain K_{1,3}");
  thm.runtime_seconds = conj.runtime_seconds = clock.seconds();
  return {thm, conj};
}

Report verify_realize_132(int n, const SweepOptions& options) {
  check_scale("realize_132 sweep", n, options.limits.full_sn, options.force);
  Stopwatch clock;
  Report r{"realize-132", "realize_132 output avoids 132 and keeps C(pi) up to isomorphism"};
  const SimpleGraph path = path_graph(3);
  std::size_t tried = 0;
  for_each_permutation(n, {}, [&](const Permutation& p) {
    const SimpleGraph g = competition_graph(p);
    if (has_induced(g, path)) return;
    ++tried;
    try {
      const Permutation q = realize_132(p);
      r.require(q.size() == p.size() && avoids(q, kP132) && isomorphic(competition_graph(q), g),
                p.to_string() + " -> " + q.to_string());
    } catch (const Error& e) {
      r.fail(p.to_string() + ": " + e.what());
    }
  });
  r.params = {{"n", n}, {"instances", tried}};
  r.runtime_seconds = clock.seconds();
  return r;
}

Report verify_h_table(int max_m, int max_n, int brute_max_n, const SweepOptions& options, SequenceTable* table) {
  Stopwatch clock;
  Report r{"h-table", "h(m,n) by recurrence and brute force against the published table"};
  r.params = {{"max_m", max_m}, {"max_n", max_n}, {"brute_max_n", brute_max_n}};
  SequenceTable local;
  SequenceTable& t = table ? *table : local;
  const HTable rec(max_m, max_n);
  const auto& published = published_h_table();
  for (int m = 1; m <= max_m; ++m) {
    for (int n = 1; n <= max_n; ++n) {
      t.record(m, n, rec(m, n), SequenceTable::Method::Recurrence);
      if (n <= brute_max_n) {
        r.require(t.record(m, n, h_bruteforce(m, n, options), SequenceTable::Method::Brute),
                  cell(m, n) + " brute force disagrees with the recurrence");
      }
      if (m <= static_cast<int>(published.size()) && n <= static_cast<int>(published[m - 1].size())) {
        r.require(rec(m, n) == published[m - 1][n - 1],
                  cell(m, n) + " = " + rec(m, n).str() + ", published " + std::to_string(published[m - 1][n - 1]));
      }
    }
  }
  for (const auto& c : t.conflicts()) r.fail(c);
  r.witnesses.push_back("h(3,12) = " + rec(3, 12).str());
  r.witnesses.push_back("h(4,12) = " + rec(4, 12).str());
  r.runtime_seconds = clock.seconds();
  return r;
}

Report verify_closed_forms(int max_n) {
  Stopwatch clock;
  Report r{"closed-forms", "closed forms for m = 1, 2, 3 agree with the recurrence"};
  r.params = {{"max_n", max_n}};
  const HTable rec(3, max_n);
  for (int m = 1; m <= 3; ++m) {
    for (int n = closed_form_threshold(m); n <= max_n; ++n) {
      r.require(h_closed_form(m, n) == rec(m, n), cell(m, n) + " closed form " + h_closed_form(m, n).str() +
                                                      " vs recurrence " + rec(m, n).str());
    }
  }
  r.runtime_seconds = clock.seconds();
  return r;
}

Report verify_series(int max_m, int max_n) {
  Stopwatch clock;
  Report r{"generating-functions", "coefficients of F_m and H equal the recurrence"};
  r.params = {{"max_m", max_m}, {"max_n", max_n}};
  const HTable rec(max_m, max_n);
  const Grid h = series_H(max_m, max_n);
  for (int n = 0; n <= max_n; ++n) r.require(h[0][n] == 0, "[x^0 y^" + std::to_string(n) + "] H is nonzero");
  for (int m = 1; m <= max_m; ++m) {
    const auto f = series_Fm(m, max_n);
    for (int n = 0; n <= max_n; ++n) {
      r.require(f[n] == rec(m, n), "F_" + std::to_string(m) + " coefficient at " + cell(m, n) + " is " + f[n].str());
      r.require(h[m][n] == rec(m, n), "H coefficient at " + cell(m, n) + " is " + h[m][n].str());
    }
  }
  r.runtime_seconds = clock.seconds();
  return r;
}

Report verify_star_structure(int max_m, int max_n, const SweepOptions& options) {
  Stopwatch clock;
  Report r{"star-structure", "pair layout of 132-avoiding star realizers and the recurrence split"};
  r.params = {{"max_m", max_m}, {"max_n", max_n}};
  for (int m = 1; m <= max_m; ++m) {
    for (int n = 2 * m + 1; n <= max_n; ++n) {
      if (auto problem = yp_structure_violation(m, n, options)) r.fail(*problem);
      if (m >= 2) {
        const RecurrenceSplit split = recurrence_split(m, n, options);
        for (const auto& p : split.problems) r.fail(cell(m, n) + ": " + p);
        r.witnesses.push_back(cell(m, n) + " = " + std::to_string(split.accessory_branch) + " + " +
                              std::to_string(split.pair_branch));
      }
    }
  }
  r.runtime_seconds = clock.seconds();
  return r;
}

Report verify_path_star(BijectionKind kind, int m, int n_from, int n_to, const SweepOptions& options) {
  Stopwatch clock;
  const bool restricted = kind == BijectionKind::PathStar123To132;
  Report r{restricted ? "bijection-m" : "bijection-t",
           restricted ? "M is a bijection from 123-avoiding path realizers to 132-avoiding star realizers"
                      : "T^{m-2} is a bijection from path realizers to star realizers"};
  r.params = {{"m", m}, {"n_from", n_from}, {"n_to", n_to}};
  for (int n = n_from; n <= n_to; ++n) {
    const BijectionCheck check = verify_bijection(kind, m, n, options);
    for (const auto& p : check.problems) r.fail("n=" + std::to_string(n) + ": " + p);
    r.require(check.domain == check.codomain, "n=" + std::to_string(n) + ": sizes " + std::to_string(check.domain) +
                                                  " and " + std::to_string(check.codomain));
    r.witnesses.push_back("n=" + std::to_string(n) + ": " + std::to_string(check.domain) + " pairs");
  }
  if (restricted && m == 3) {
    const Permutation image = path123_to_star132(Permutation::parse("5736142"));
    r.require(image == Permutation::parse("5634127"), "M(5736142) = " + image.to_string());
    r.witnesses.push_back("M(5736142) = " + image.to_string());
  }
  r.runtime_seconds = clock.seconds();
  return r;
}

Report verify_base_permutations(int max_m, int max_length) {
  Stopwatch clock;
  Report r{"base-permutations", "B(K_{1,3}), B(K_{1,3};132) and the 132-avoiding star family"};
  r.params = {{"max_m", max_m}, {"max_length", max_length}};
  auto render = [](const std::set<Permutation>& s) {
    std::string out;
    for (const auto& p : s) out += (out.empty() ? "" : " ") + p.to_string();
    return "{" + out + "}";
  };
  const std::set<Permutation> all = base_permutations(unit_star(3), max_length);
  const std::set<Permutation> expected{Permutation::parse("5634127"), Permutation::parse("5634172"),
                                       Permutation::parse("5734126"), Permutation::parse("5734162")};
  r.require(all == expected, "B(K_{1,3}) = " + render(all));
  r.witnesses.push_back("B(K_{1,3}) = " + render(all));
  for (int m = 1; m <= max_m; ++m) {
    const auto found = base_permutations(unit_star(m), max_length, kP132);
    r.require(found == std::set<Permutation>{star_base_132(m)},
              "B(K_{1," + std::to_string(m) + "};132) = " + render(found));
    r.witnesses.push_back("B(K_{1," + std::to_string(m) + "};132) = " + render(found));
  }
  r.runtime_seconds = clock.seconds();
  return r;
}

Report verify_graph_properties(int max_n, const SweepOptions& options) {
  check_scale("graph property sweep", max_n, options.limits.full_sn, options.force);
  Stopwatch clock;
  Report r{"graph-properties", "C(pi) is an interval graph and total weight of W(pi) counts 123 and 132"};
  r.params = {{"max_n", max_n}};
  std::size_t classes = 0;
  for (int n = 1; n <= max_n; ++n) {
    std::set<CanonicalKey> checked;
    for_each_permutation(n, {}, [&](const Permutation& p) {
      const WeightedGraph w = weighted_competition_graph(p);
      const SimpleGraph g = competition_graph(p);
      r.require(w.underlying() == g, p.to_string() + ": W and C have different edges");
      const auto triples = count(p, kP123) + count(p, kP132);
      r.require(static_cast<std::size_t>(w.total_weight()) == triples,
                p.to_string() + ": total weight " + std::to_string(w.total_weight()) + " vs " +
                    std::to_string(triples) + " occurrences");
      if (checked.insert(canonical_key(g)).second) {
        r.require(is_interval(g), p.to_string() + ": C(pi) is not an interval graph");
      }
    });
    classes += checked.size();
  }
  r.witnesses.push_back(std::to_string(classes) + " isomorphism classes tested for the interval property");
  r.runtime_seconds = clock.seconds();
  return r;
}

Report verify_pointsets(int samples, int max_points, std::uint64_t seed) {
  Stopwatch clock;
  Report r{"pointsets", "point sets reduce to permutations with isomorphic competition graphs"};
  r.params = {{"samples", samples}, {"max_points", max_points}, {"seed", seed}};
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    std::uniform_int_distribution<int> size(1, max_points);
    const int k = size(rng);
    // Every other sample draws from a tiny grid so ties dominate.
    const bool ties = s % 2 == 0;
    std::uniform_int_distribution<int> coord(0, ties ? 2 : 1000);
    std::vector<Point> points;
    int attempts = 0;
    while (static_cast<int>(points.size()) < k && attempts++ < 1000) {
      Point p{coord(rng) / (ties ? 1.0 : 8.0), coord(rng) / (ties ? 1.0 : 8.0)};
      if (std::find(points.begin(), points.end(), p) == points.end()) points.push_back(p);
    }
    const SimpleGraph direct = pointset_competition_graph(points);
    const Permutation perm = pointset_to_permutation(points);
    if (!isomorphic(direct, competition_graph(perm))) {
      std::string text;
      for (const Point& p : points) text += "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
      r.fail(text + " -> " + perm.to_string());
    }
  }
  r.runtime_seconds = clock.seconds();
  return r;
}

}  // namespace permcomp
