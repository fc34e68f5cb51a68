#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "permcomp/bijections.hpp"
#include "permcomp/compgraph.hpp"

using namespace permcomp;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

const Permutation k123{1, 2, 3};
const Permutation k132{1, 3, 2};

std::vector<Permutation> unit_paths(int m, int n, const std::optional<Permutation>& avoid = std::nullopt) {
  std::vector<Permutation> out;
  for_each_permutation(n, {avoid, static_cast<std::size_t>(m), std::nullopt}, [&](const Permutation& p) {
    if (oracle::is_unit_path(p, m)) out.push_back(p);
  });
  return out;
}

std::vector<Permutation> unit_stars(int m, int n, const std::optional<Permutation>& avoid = std::nullopt) {
  std::vector<Permutation> out;
  for_each_permutation(n, {avoid, static_cast<std::size_t>(m), std::nullopt}, [&](const Permutation& p) {
    if (oracle::is_unit_star(p, m)) out.push_back(p);
  });
  return out;
}

}  // namespace

TEST_CASE("membership") {
  CHECK(path_size(P("5736124")) == 3);
  CHECK(star_size(P("5634127")) == 3);
  CHECK_FALSE(star_size(P("5736124")));
  CHECK_FALSE(path_size(P("5634127")));
  CHECK(path_size(P("123")) == 1);
  CHECK(star_size(P("123")) == 1);
  CHECK_FALSE(path_size(P("1234")));  // weight 2 edge
  CHECK_FALSE(path_size(P("321")));
}

TEST_CASE("path labelings") {
  CHECK(path_labeling(P("5736124")).positions == std::vector<int>{2, 4, 7, 6});
  CHECK(path_labeling(P("5736142")).positions == std::vector<int>{2, 4, 6, 7});
  CHECK(path_labeling(P("123")).positions == std::vector<int>{2, 3});
  CHECK_THROWS_AS(path_labeling(P("5634127")), Error);
  for (int n = 5; n <= 8; ++n) {
    for (const Permutation& p : unit_paths(3, n)) {
      const PathLabeling l = path_labeling(p);
      REQUIRE(l.edges() == 3);
      REQUIRE(l[0] < l[1]);
      REQUIRE(l[1] < l[2]);
      REQUIRE(l[3] > l[1]);
      REQUIRE(p.value_at(l[3]) < p.value_at(l[1]));
      const WeightedGraph w = weighted_competition_graph(p);
      for (int j = 0; j < 3; ++j) REQUIRE(w.weight(l[j] - 1, l[j + 1] - 1) == 1);
    }
  }
}

TEST_CASE("star labelings") {
  const StarLabeling a = star_labeling(P("5634127"));
  CHECK(a.centre == 7);
  CHECK(a.leaves == std::vector<int>{2, 4, 6});
  const StarLabeling b = star_labeling(P("5734162"));
  CHECK(b.centre == 6);
  CHECK(b.leaves == std::vector<int>{2, 4, 7});
  const StarLabeling c = star_labeling(P("123"));
  CHECK(c.centre == 3);
  CHECK(c.leaves == std::vector<int>{2});
  CHECK_THROWS_AS(star_labeling(P("5736124")), Error);
}

TEST_CASE("powers of T") {
  CHECK(shift_path(P("5736142"), 0) == P("5736142"));
  CHECK(shift_path(P("5736142"), 1) == P("5734162"));
  CHECK(shift_path(P("5736124"), 1) == P("5734126"));
  CHECK_THROWS_AS(shift_path(P("5736142"), 2), Error);
  CHECK_THROWS_AS(shift_path(P("5736142"), -1), Error);
  CHECK_THROWS_AS(shift_path(P("5634127"), 0), Error);
  CHECK(path_to_star(P("5736142")) == P("5734162"));
  CHECK(star_to_path(P("5734162")) == P("5736142"));
  CHECK(path_to_star(P("5736124")) == P("5734126"));
  CHECK(star_to_path(P("5734126")) == P("5736124"));
  CHECK(path_to_star(P("123")) == P("123"));
  CHECK_FALSE(shift_window_violation(P("5736142")));
}

TEST_CASE("T is a bijection from paths to stars, m = 3 and 4") {
  for (int m = 3; m <= 4; ++m) {
    for (int n = 2 * m + 1; n <= 2 * m + 2; ++n) {
      const auto paths = unit_paths(m, n);
      const auto stars = unit_stars(m, n);
      REQUIRE(paths.size() == stars.size());
      std::set<Permutation> images;
      for (const Permutation& p : paths) {
        REQUIRE_FALSE(shift_window_violation(p));
        const Permutation s = path_to_star(p);
        REQUIRE(oracle::is_unit_star(s, m));
        REQUIRE(star_to_path(s) == p);
        images.insert(s);
      }
      REQUIRE(images == std::set<Permutation>(stars.begin(), stars.end()));
    }
  }
}

TEST_CASE("M") {
  CHECK(path123_to_star132(P("5736142")) == P("5634127"));
  CHECK(star132_to_path123(P("5634127")) == P("5736142"));
  CHECK_THROWS_AS(path123_to_star132(P("5736124")), Error);  // contains 123
  CHECK_THROWS_AS(path123_to_star132(P("5634127")), Error);
  CHECK_THROWS_AS(star132_to_path123(P("5734162")), Error);  // contains 132
  for (int n = 7; n <= 8; ++n) {
    const auto paths = unit_paths(3, n, k123);
    const auto stars = unit_stars(3, n, k132);
    REQUIRE(paths.size() == stars.size());
    std::set<Permutation> images;
    for (const Permutation& p : paths) {
      const Permutation s = path123_to_star132(p);
      REQUIRE(avoids(s, k132));
      REQUIRE(oracle::is_unit_star(s, 3));
      REQUIRE(star132_to_path123(s) == p);
      images.insert(s);
    }
    REQUIRE(images.size() == stars.size());
  }
}
