#include <functional>

#include "permcomp/cli.hpp"
#include "permcomp/verify.hpp"

namespace permcomp::cli {

using nlohmann::json;

namespace {

// Runs `compute` unless the cache already holds reports for (op, params).
void collect(std::vector<Report>& out, ResultCache* cache, const std::string& op, const json& params,
             const std::function<std::vector<Report>()>& compute) {
  if (cache) {
    if (auto hit = cache->lookup(op, params)) {
      try {
        for (const auto& doc : *hit) out.push_back(Report::from_json(doc));
        return;
      } catch (const json::exception&) {
        // Fall through and recompute.
      }
    }
  }
  const auto reports = compute();
  if (cache) {
    json docs = json::array();
    for (const auto& r : reports) docs.push_back(r.to_json(true));
    cache->store(op, params, docs);
  }
  out.insert(out.end(), reports.begin(), reports.end());
}

}  // namespace

std::vector<Report> reproduce_all(const SweepOptions& options, ResultCache* cache) {
  std::vector<Report> out;
  auto one = [](Report r) { return std::vector<Report>{std::move(r)}; };
  collect(out, cache, "verify.catalan", {{"max_n", 10}}, [&] { return one(verify_catalan(10, options)); });
  collect(out, cache, "verify.avoider-classes", {{"max_n", 6}},
          [&] { return one(verify_avoider_class_agreement(6, options)); });
  collect(out, cache, "verify.lemma3.3", json::object(), [&] { return verify_seven_term_obstructions(options); });
  for (int n = 5; n <= 8; ++n) {
    collect(out, cache, "verify.characterizations", {{"n", n}}, [&] { return verify_characterizations(n, options); });
  }
  collect(out, cache, "verify.realize132", {{"n", 7}}, [&] { return one(verify_realize_132(7, options)); });
  collect(out, cache, "verify.h-table", {{"max_m", 5}, {"max_n", 12}, {"brute_max_n", 10}},
          [&] { return one(verify_h_table(5, 12, 10, options)); });
  collect(out, cache, "verify.closed-forms", {{"max_n", 30}}, [&] { return one(verify_closed_forms(30)); });
  collect(out, cache, "verify.series", {{"max_m", 5}, {"max_n", 20}}, [&] { return one(verify_series(5, 20)); });
  collect(out, cache, "verify.star-structure", {{"max_m", 3}, {"max_n", 9}},
          [&] { return one(verify_star_structure(3, 9, options)); });
  collect(out, cache, "verify.bijection-t", {{"m", 3}, {"n_from", 7}, {"n_to", 9}},
          [&] { return one(verify_path_star(BijectionKind::PathStar, 3, 7, 9, options)); });
  collect(out, cache, "verify.bijection-m", {{"m", 3}, {"n_from", 7}, {"n_to", 9}},
          [&] { return one(verify_path_star(BijectionKind::PathStar123To132, 3, 7, 9, options)); });
  collect(out, cache, "verify.base-perms", {{"max_m", 4}, {"max_length", 11}},
          [&] { return one(verify_base_permutations(4, 11)); });
  collect(out, cache, "verify.graph-properties", {{"max_n", 8}},
          [&] { return one(verify_graph_properties(8, options)); });
  collect(out, cache, "verify.pointsets", {{"samples", 1000}, {"max_points", 7}, {"seed", 20240601}},
          [&] { return one(verify_pointsets(1000, 7, 20240601)); });
  return out;
}

}  // namespace permcomp::cli
