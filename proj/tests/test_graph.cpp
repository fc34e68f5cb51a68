#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "permcomp/compgraph.hpp"
#include "permcomp/graph.hpp"
#include "permcomp/graph_io.hpp"

using namespace permcomp;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

SimpleGraph random_graph(std::mt19937& rng, int order, double density) {
  std::bernoulli_distribution coin(density);
  SimpleGraph g(order);
  for (int u = 0; u < order; ++u) {
    for (int v = u + 1; v < order; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

SimpleGraph relabel(const SimpleGraph& g, const std::vector<int>& map) {
  SimpleGraph out(g.order());
  for (const Edge& e : g.edges()) out.add_edge(map[e.u], map[e.v]);
  return out;
}

}  // namespace

TEST_CASE("graph invariants") {
  SimpleGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  CHECK(g.edge_count() == 1);
  CHECK_THROWS_AS(g.add_edge(2, 2), Error);
  CHECK_THROWS_AS(g.add_edge(0, 4), Error);
  WeightedGraph w(3);
  CHECK_THROWS_AS(w.set_weight(0, 1, 0), Error);
  w.add_weight(0, 1);
  w.add_weight(0, 1);
  CHECK(w.weight(1, 0) == 2);
  CHECK(w.total_weight() == 2);
}

TEST_CASE("canonical keys separate and identify") {
  CHECK(canonical_key(star_graph(3)) != canonical_key(path_graph(3)));
  CHECK(canonical_key(unit_weighted(star_graph(3))) != canonical_key(star_graph(3)));
  const CanonicalKey shared = canonical_key(competition_graph(P("5736124")));
  CHECK(canonical_key(competition_graph(P("5736142"))) == shared);
  CHECK_THROWS_AS(canonical_key(SimpleGraph(15)), Error);
  CHECK_NOTHROW(canonical_key(SimpleGraph(15), CanonicalOptions{16}));
}

TEST_CASE("canonical key agrees with brute-force isomorphism on random graphs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    const int order = 1 + trial % 7;
    const double density = 0.2 + 0.1 * (trial % 6);
    const SimpleGraph a = random_graph(rng, order, density);
    SimpleGraph b = random_graph(rng, order, density);
    if (trial % 3 == 0) {
      std::vector<int> map(order);
      std::iota(map.begin(), map.end(), 0);
      std::shuffle(map.begin(), map.end(), rng);
      b = relabel(a, map);
    }
    REQUIRE((canonical_key(a) == canonical_key(b)) == oracle::brute_isomorphic(a, b));
  }
}

TEST_CASE("weighted keys respect weights") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> weight(1, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const int order = 2 + trial % 5;
    WeightedGraph a(order);
    WeightedGraph b(order);
    for (int u = 0; u < order; ++u) {
      for (int v = u + 1; v < order; ++v) {
        if (rng() % 2) a.set_weight(u, v, weight(rng));
        if (rng() % 2) b.set_weight(u, v, weight(rng));
      }
    }
    REQUIRE((canonical_key(a) == canonical_key(b)) == oracle::brute_isomorphic(a, b));
  }
}

TEST_CASE("canonical key agrees with the oracle on every C(pi), pi in S_7") {
  std::map<CanonicalKey, SimpleGraph> reps;
  std::vector<std::pair<CanonicalKey, SimpleGraph>> sample;
  int index = 0;
  for_each_permutation(7, {}, [&](const Permutation& p) {
    const SimpleGraph g = competition_graph(p);
    const CanonicalKey key = canonical_key(g);
    reps.emplace(key, g);
    if (index++ % 5 == 0) sample.emplace_back(key, g);
  });
  CHECK(reps.size() == 17);
  for (auto a = reps.begin(); a != reps.end(); ++a) {
    for (auto b = std::next(a); b != reps.end(); ++b) REQUIRE_FALSE(oracle::brute_isomorphic(a->second, b->second));
  }
  for (const auto& [key, g] : sample) REQUIRE(oracle::brute_isomorphic(reps.at(key), g));
}

TEST_CASE("key cache") {
  CanonicalKeyCache cache;
  CHECK(cache.key(path_graph(3)) == canonical_key(path_graph(3)));
  CHECK(cache.key(path_graph(3)) == canonical_key(path_graph(3)));
  CHECK(cache.size() == 1);
}

TEST_CASE("iso modulo isolated vertices") {
  CHECK(iso_modulo_isolated(path_graph(3).padded(3), path_graph(3)));
  CHECK_FALSE(iso_modulo_isolated(star_graph(3).padded(3), path_graph(3).padded(3)));
  CHECK(iso_modulo_isolated(weighted_competition_graph(P("5736124")), unit_weighted(path_graph(3))));
  CHECK_FALSE(iso_modulo_isolated(weighted_competition_graph(P("1234")), unit_weighted(complete_graph(3))));

  // Equivalence relation on the C(S_5) family.
  std::vector<SimpleGraph> family;
  for_each_permutation(5, {}, [&](const Permutation& p) {
    if (p.value_at(5) >= 4) family.push_back(competition_graph(p));
  });
  for (std::size_t i = 0; i < family.size(); i += 7) {
    CHECK(iso_modulo_isolated(family[i], family[i]));
    for (std::size_t j = 0; j < family.size(); j += 5) {
      const bool ij = iso_modulo_isolated(family[i], family[j]);
      CHECK(ij == iso_modulo_isolated(family[j], family[i]));
      if (!ij) continue;
      for (std::size_t k = 0; k < family.size(); k += 11) {
        if (iso_modulo_isolated(family[j], family[k])) CHECK(iso_modulo_isolated(family[i], family[k]));
      }
    }
  }
}

TEST_CASE("induced subgraphs") {
  CHECK_FALSE(has_induced(complete_graph(4), path_graph(3)));
  CHECK(has_induced(star_graph(3).padded(3), star_graph(3)));
  CHECK_FALSE(has_induced(competition_graph(P("461532")), path_graph(3)));
  CHECK(has_induced(path_graph(5), path_graph(3)));
  CHECK_FALSE(has_induced(cycle_graph(4), path_graph(3)));
  CHECK_THROWS_AS(has_induced(complete_graph(8), complete_graph(7)), Error);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const SimpleGraph g = random_graph(rng, 6, 0.5);
    for (const auto& h : {path_graph(3), star_graph(3), cycle_graph(4)}) {
      if (has_induced(g, h)) CHECK(has_induced(g.padded(1), h));
    }
  }
}

TEST_CASE("connected components") {
  CHECK(connected_components(SimpleGraph(4)).size() == 4);
  const auto parts = connected_components(star_graph(3).padded(3));
  CHECK(parts.size() == 4);
  CHECK(parts[0] == std::vector<int>{0, 1, 2, 3});
  // C(461532): the terms 6,5,3,2 form one component; 4 and 1 are alone.
  const auto c = connected_components(competition_graph(P("461532")));
  CHECK(c == std::vector<std::vector<int>>{{0}, {1, 3, 4, 5}, {2}});
}

TEST_CASE("interval recognition") {
  CHECK(is_interval(path_graph(3)));
  CHECK_FALSE(is_interval(cycle_graph(4)));
  CHECK_FALSE(is_interval(cycle_graph(5)));
  CHECK(is_interval(complete_graph(5)));
  // The claw with subdivided edges is a tree that is not an interval graph.
  SimpleGraph spider(7);
  for (auto [u, v] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}}) spider.add_edge(u, v);
  CHECK_FALSE(is_interval(spider));
  CHECK_THROWS_AS(is_interval(SimpleGraph(15)), Error);
  for_each_permutation(6, {}, [&](const Permutation& p) { REQUIRE(is_interval(competition_graph(p))); });
}

TEST_CASE("both interval methods agree") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const SimpleGraph g = random_graph(rng, 4 + trial % 5, 0.4);
    if (maximal_cliques(g).size() > 8) continue;
    REQUIRE(is_interval(g, IntervalMethod::AllOrderings) == is_interval(g, IntervalMethod::ConsecutiveOnes));
  }
}

TEST_CASE("graph JSON round trip") {
  const SimpleGraph c = competition_graph(P("461532"));
  const auto doc = to_json(c);
  CHECK(doc["order"] == 6);
  CHECK(doc["edges"].size() == 4);
  CHECK(simple_graph_from_json(doc) == c);
  const WeightedGraph w = weighted_competition_graph(P("1234"));
  CHECK(weighted_graph_from_json(to_json(w)) == w);
  CHECK_THROWS_AS(simple_graph_from_json(nlohmann::json::parse(R"({"edges": []})")), Error);
  CHECK_THROWS_AS(simple_graph_from_json(nlohmann::json::parse(R"({"order": 2, "edges": [[0, 0]]})")), Error);
  CHECK(to_dot(digraph_of(P("132"))).find("3 -> 1") != std::string::npos);
}
