#include <doctest.h>

#include <vector>

#include "oracles.hpp"
#include "permcomp/compgraph.hpp"

using namespace permcomp;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

std::vector<std::pair<int, int>> arcs_by_label(const Digraph& d) {
  std::vector<std::pair<int, int>> out;
  for (auto [from, to] : d.arcs()) out.emplace_back(d.label(from), d.label(to));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<int, int>> edges_by_label(const SimpleGraph& g) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : g.edges()) {
    const int a = g.label(e.u);
    const int b = g.label(e.v);
    out.emplace_back(std::max(a, b), std::min(a, b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("digraph") {
  CHECK(digraph_of(Permutation::identity(5)).arc_count() == 10);
  CHECK(digraph_of(decreasing(6)).arc_count() == 0);
  const auto arcs = arcs_by_label(digraph_of(P("461532")));
  CHECK(arcs == std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {5, 1}, {5, 4}, {6, 4}});
}

TEST_CASE("competition graph examples") {
  CHECK(competition_graph(decreasing(7)).edge_count() == 0);
  const SimpleGraph chain = competition_graph(Permutation::identity(6));
  CHECK(chain.edge_count() == 10);
  CHECK(chain.isolated_vertices() == std::vector<int>{0});
  const SimpleGraph c = competition_graph(P("461532"));
  CHECK(edges_by_label(c) == std::vector<std::pair<int, int>>{{3, 2}, {5, 2}, {5, 3}, {6, 5}});
  CHECK(c.isolated_vertices().size() == 2);
}

TEST_CASE("weighted competition graph examples") {
  const WeightedGraph w123 = weighted_competition_graph(P("123"));
  CHECK(w123.edges() == std::vector<WeightedEdge>{{1, 2, 1}});
  const WeightedGraph w = weighted_competition_graph(P("1234"));
  CHECK(w.weight(1, 2) == 1);
  CHECK(w.weight(1, 3) == 1);
  CHECK(w.weight(2, 3) == 2);
  CHECK(w.total_weight() == 4);
  const WeightedGraph p3 = weighted_competition_graph(P("5736124"));
  CHECK(p3.isolated_vertices().size() == 3);
  CHECK(iso_modulo_isolated(p3, unit_weighted(path_graph(3))));
}

TEST_CASE("competition graphs agree with the common-prey oracle for n <= 7") {
  const Permutation p123{1, 2, 3};
  const Permutation p132{1, 3, 2};
  for (int n = 1; n <= 7; ++n) {
    for_each_permutation(n, {}, [&](const Permutation& p) {
      const WeightedGraph w = weighted_competition_graph(p);
      REQUIRE(w == oracle::prey_graph(p));
      REQUIRE(competition_graph(p) == oracle::prey_simple(p));
      REQUIRE(w.underlying() == competition_graph(p));
      REQUIRE(static_cast<std::size_t>(w.total_weight()) ==
              oracle::subset_count(p, p123) + oracle::subset_count(p, p132));
    });
  }
}

TEST_CASE("edge witnesses") {
  const PreyMap m132 = edge_witnesses(P("132"));
  REQUIRE(m132.prey.size() == 1);
  CHECK(m132.prey.begin()->first == Edge(1, 2));
  CHECK(m132.prey.begin()->second == std::vector<int>{0});

  const Permutation p = P("52134");
  const PreyMap witnesses = edge_witnesses(p);
  // Values 3 and 4 sit at positions 4 and 5 and share the prey 2 and 1.
  REQUIRE(witnesses.prey.count(Edge(3, 4)) == 1);
  CHECK(witnesses.prey.at(Edge(3, 4)) == std::vector<int>{1, 2});

  CHECK(edge_witnesses(P("461532")).incidence_count() == 4);
  for_each_permutation(6, {}, [&](const Permutation& q) {
    const PreyMap map = edge_witnesses(q);
    REQUIRE(map.incidence_count() == count(q, Permutation{1, 2, 3}) + count(q, Permutation{1, 3, 2}));
    for (const auto& [edge, prey] : map.prey) {
      REQUIRE_FALSE(prey.empty());
      for (int w : prey) {
        REQUIRE(w < edge.u);
        REQUIRE(q.value_at(w + 1) < q.value_at(edge.u + 1));
        REQUIRE(q.value_at(w + 1) < q.value_at(edge.v + 1));
      }
    }
  });
}

TEST_CASE("point sets") {
  const std::vector<Point> grid{{1, 4}, {2, 6}, {3, 1}, {4, 5}, {5, 3}, {6, 2}};
  CHECK(pointset_to_permutation(grid) == P("461532"));
  CHECK(oracle::brute_isomorphic(pointset_competition_graph(grid), competition_graph(P("461532"))));

  const std::vector<Point> stack{{0, 0}, {0, 1}, {0, 2}};
  CHECK(pointset_to_permutation(stack) == P("321"));
  CHECK(pointset_competition_graph(stack).edge_count() == 0);

  const std::vector<Point> shared_x{{0, 0}, {1, 1}, {1, 2}};
  CHECK(pointset_to_permutation(shared_x) == P("132"));
  CHECK(oracle::brute_isomorphic(pointset_competition_graph(shared_x), competition_graph(P("132"))));

  const std::vector<Point> vee{{0, 0}, {1, 2}, {2, 1}};
  CHECK(pointset_competition_graph(vee).edges() == std::vector<Edge>{{1, 2}});

  const std::vector<Point> antichain{{0, 3}, {1, 2}, {2, 1}, {3, 0}};
  CHECK(pointset_competition_graph(antichain).edge_count() == 0);

  const std::vector<Point> duplicate{{0, 0}, {1, 1}, {0, 0}};
  CHECK_THROWS_AS(pointset_to_permutation(duplicate), Error);
  CHECK_THROWS_AS(pointset_competition_graph(duplicate), Error);
  const std::vector<Point> bad{{0, 0}, {std::numeric_limits<double>::infinity(), 1}};
  CHECK_THROWS_AS(pointset_to_permutation(bad), Error);
  CHECK(pointset_to_permutation(std::vector<Point>{}).empty());
}

TEST_CASE("point sets with ties on a small grid") {
  // Every 4-point subset of a 3x3 grid.
  std::vector<Point> grid;
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) grid.push_back({double(x), double(y)});
  }
  for (int mask = 0; mask < (1 << 9); ++mask) {
    if (__builtin_popcount(mask) != 4 && __builtin_popcount(mask) != 5) continue;
    std::vector<Point> pts;
    for (int i = 0; i < 9; ++i) {
      if (mask >> i & 1) pts.push_back(grid[i]);
    }
    REQUIRE(oracle::brute_isomorphic(pointset_competition_graph(pts),
                                     competition_graph(pointset_to_permutation(pts))));
  }
}
