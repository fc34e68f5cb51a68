#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "permcomp/compgraph.hpp"
#include "permcomp/structure.hpp"

using namespace permcomp;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

const Permutation k123{1, 2, 3};
const Permutation k132{1, 3, 2};

bool p3_free(const Permutation& p) { return !has_induced(competition_graph(p), path_graph(3)); }

// Positions lying in some 123 or 132 occurrence, by subset scan.
std::set<int> pattern_positions(const Permutation& p) {
  std::set<int> out;
  const int n = p.size();
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      for (int c = b + 1; c <= n; ++c) {
        const int x = p.value_at(a);
        if (x < p.value_at(b) && x < p.value_at(c)) out.insert({a, b, c});
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("redundant terms") {
  CHECK_FALSE(is_redundant(P("1234"), 4));
  CHECK(is_redundant(P("4123"), 1));
  for (int i = 1; i <= 3; ++i) CHECK(is_redundant(P("321"), i));
  CHECK_THROWS_AS(is_redundant(P("321"), 4), Error);
}

TEST_CASE("minimize") {
  CHECK(minimize(P("321")).empty());
  CHECK(minimize(P("1234")) == P("1234"));
  CHECK(minimize(P("5634127")) == P("5634127"));
  for (int n = 1; n <= 7; ++n) {
    for_each_permutation(n, {}, [&](const Permutation& p) {
      const Minimized m = minimize_tracked(p);
      REQUIRE(m.perm == p.restrict_to(m.kept));
      REQUIRE(iso_modulo_isolated(competition_graph(m.perm), competition_graph(p)));
      for (int i = 1; i <= m.perm.size(); ++i) REQUIRE_FALSE(is_redundant(m.perm, i));
    });
  }
}

TEST_CASE("dominating vertex") {
  const int v = dominating_vertex(P("1234"));
  CHECK(v >= 2);
  CHECK(competition_graph(P("1234")).degree(v - 1) == 2);
  CHECK(dominating_vertex(P("5634127")) == 7);
  CHECK_THROWS_AS(dominating_vertex(P("4321")), Error);
  for_each_permutation(7, {}, [&](const Permutation& p) {
    const SimpleGraph g = competition_graph(p);
    if (nontrivial_components(g).size() != 1 || has_induced(g, path_graph(3))) return;
    const auto component = nontrivial_components(g)[0];
    const int d = dominating_vertex(p) - 1;
    for (int u : component) {
      if (u != d) REQUIRE(g.has_edge(u, d));
    }
  });
}

TEST_CASE("component partition") {
  const PartitionWitness edgeless = component_partition(decreasing(5));
  CHECK(edgeless.component_count() == 0);
  CHECK(edgeless.parts[0].size() == 5);
  const PartitionWitness w = component_partition(P("461532"));
  CHECK(w.component_count() == 1);
  CHECK_FALSE(partition_violation(P("461532"), w));
  for_each_permutation(7, {}, [&](const Permutation& p) {
    const auto problem = partition_violation(p, component_partition(p));
    REQUIRE_MESSAGE(!problem, p.to_string() << ": " << problem.value_or(""));
  });
}

TEST_CASE("realize_132") {
  CHECK(realize_132(decreasing(5)) == decreasing(5));
  const Permutation clique = realize_132(P("15432"));
  CHECK(avoids(clique, k132));
  CHECK(oracle::brute_isomorphic(competition_graph(clique), competition_graph(P("15432"))));
  CHECK_THROWS_AS(realize_132(P("5736124")), Error);
  for (int n = 1; n <= 6; ++n) {
    for_each_permutation(n, {}, [&](const Permutation& p) {
      if (!p3_free(p)) return;
      const Permutation r = realize_132(p);
      REQUIRE(r.size() == p.size());
      REQUIRE(avoids(r, k132));
      REQUIRE(oracle::brute_isomorphic(competition_graph(r), competition_graph(p)));
    });
  }
}

TEST_CASE("accessory terms") {
  CHECK(accessory_terms(P("321")) == std::vector<int>{1, 2, 3});
  CHECK(accessory_terms(P("123")).empty());
  CHECK(accessory_terms(P("3124")) == std::vector<int>{1});
  for_each_permutation(6, {}, [&](const Permutation& p) {
    const std::set<int> used = pattern_positions(p);
    std::vector<int> expected;
    for (int i = 1; i <= p.size(); ++i) {
      if (!used.count(i)) expected.push_back(i);
    }
    REQUIRE(accessory_terms(p) == expected);
    // Deleting an accessory term leaves W unchanged up to isolated vertices.
    for (int i : expected) {
      REQUIRE(iso_modulo_isolated(weighted_competition_graph(p.without(i)), weighted_competition_graph(p)));
    }
  });
}

TEST_CASE("base permutations") {
  const WeightedGraph star3 = unit_weighted(star_graph(3));
  const std::set<Permutation> all{P("5634127"), P("5634172"), P("5734126"), P("5734162")};
  CHECK(base_permutations(star3, 9) == all);
  CHECK(base_permutations(star3, 9, k132) == std::set<Permutation>{P("5634127")});
  for (int m = 1; m <= 3; ++m) {
    CHECK(base_permutations(unit_weighted(star_graph(m)), 2 * m + 3, k132) ==
          std::set<Permutation>{star_base_132(m)});
  }
  CHECK(star_base_132(1) == P("123"));
  CHECK(star_base_132(3) == P("5634127"));
  for (const Permutation& p : all) CHECK(accessory_terms(p).empty());
  CHECK_THROWS_AS(base_permutations(star3, 12), Error);
  BaseCatalog catalog(9);
  CHECK(&catalog.get(star3) == &catalog.get(star3));
  CHECK(catalog.get(star3, k132).size() == 1);
}

TEST_CASE("star layout") {
  const auto layout = yp_decompose(P("5634127"));
  REQUIRE(layout);
  CHECK(layout->pairs.size() == 3);
  CHECK(layout->final_predator == 7);
  CHECK(layout->accessory.empty());
  CHECK_FALSE(yp_decompose(P("5736124")));
  CHECK_FALSE(yp_violation(P("5634127"), *layout));
}
