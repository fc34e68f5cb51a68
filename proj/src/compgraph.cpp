#include "permcomp/compgraph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

namespace permcomp {

namespace {

std::vector<int> value_labels(const Permutation& perm) {
  return std::vector<int>(perm.begin(), perm.end());
}

void check_points(std::span<const Point> points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!std::isfinite(points[i].x) || !std::isfinite(points[i].y)) {
      throw Error(Errc::InvalidPoint, "point " + std::to_string(i) + " is not finite");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (points[i] == points[j]) {
        throw Error(Errc::DuplicatePoint,
                    "points " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
      }
    }
  }
}

using Rational = boost::multiprecision::cpp_rational;

struct ExactPoint {
  Rational x;
  Rational y;
};

// Spreads every run of equal `major` coordinates so that the member with the
// smallest `minor` coordinate stays put and each following member moves by a
// further step of d / run-length towards the previous distinct `major` value
// (d = 1 for the first run). Members keep their relative order; nothing
// crosses into the neighbouring run.
template <typename Major, typename Minor>
void spread_ties(std::vector<ExactPoint>& pts, Major major, Minor minor) {
  std::vector<std::size_t> order(pts.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (major(pts[a]) != major(pts[b])) return major(pts[a]) < major(pts[b]);
    return minor(pts[a]) < minor(pts[b]);
  });

  std::vector<Rational> original(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) original[i] = major(pts[i]);

  for (std::size_t start = 0; start < order.size();) {
    std::size_t stop = start + 1;
    while (stop < order.size() && original[order[stop]] == original[order[start]]) ++stop;
    const std::size_t run = stop - start;
    if (run > 1) {
      const Rational here = original[order[start]];
      const Rational gap = start == 0 ? Rational(1) : here - original[order[start - 1]];
      Rational step = gap / Rational(static_cast<long long>(run));
      // The shifted run lies in (previous, here]; re-check and halve the step
      // should it ever reach the previous distinct coordinate.
      const Rational floor = start == 0 ? here - Rational(1) : original[order[start - 1]];
      while (here - step * Rational(static_cast<long long>(run - 1)) <= floor) step /= 2;
      for (std::size_t i = 0; i < run; ++i) {
        major(pts[order[start + i]]) = here - step * Rational(static_cast<long long>(i));
      }
    }
    start = stop;
  }
}

}  // namespace

Digraph digraph_of(const Permutation& perm) {
  const int n = perm.size();
  const auto v = perm.values();
  Digraph d(n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (v[i] < v[j]) d.add_arc(j, i);
    }
  }
  d.set_labels(value_labels(perm));
  return d;
}

WeightedGraph weighted_competition_graph(const Permutation& perm) {
  const int n = perm.size();
  const auto v = perm.values();
  WeightedGraph g(n);
  for (int w = 0; w < n; ++w) {
    for (int a = w + 1; a < n; ++a) {
      if (v[a] < v[w]) continue;
      for (int b = a + 1; b < n; ++b) {
        if (v[b] > v[w]) g.add_weight(a, b);
      }
    }
  }
  g.set_labels(value_labels(perm));
  return g;
}

SimpleGraph competition_graph(const Permutation& perm) {
  const int n = perm.size();
  const auto v = perm.values();
  SimpleGraph g(n);
  // The smallest earlier value is the best possible common prey.
  int running_min = n + 1;
  std::vector<int> min_before(n);
  for (int i = 0; i < n; ++i) {
    min_before[i] = running_min;
    running_min = std::min(running_min, v[i]);
  }
  for (int b = 0; b < n; ++b) {
    for (int a = 0; a < b; ++a) {
      if (min_before[a] < std::min(v[a], v[b])) g.add_edge(a, b);
    }
  }
  g.set_labels(value_labels(perm));
  return g;
}

std::size_t PreyMap::incidence_count() const {
  std::size_t total = 0;
  for (const auto& [edge, list] : prey) total += list.size();
  return total;
}

PreyMap edge_witnesses(const Permutation& perm) {
  const int n = perm.size();
  const auto v = perm.values();
  PreyMap out;
  for (int w = 0; w < n; ++w) {
    for (int a = w + 1; a < n; ++a) {
      if (v[a] < v[w]) continue;
      for (int b = a + 1; b < n; ++b) {
        if (v[b] > v[w]) out.prey[Edge(a, b)].push_back(w);
      }
    }
  }
  return out;
}

Permutation pointset_to_permutation(std::span<const Point> points) {
  check_points(points);
  std::vector<ExactPoint> pts;
  pts.reserve(points.size());
  // Every finite double is a dyadic rational, so the conversion is exact.
  for (const Point& p : points) pts.push_back({Rational(p.x), Rational(p.y)});

  spread_ties(
      pts, [](ExactPoint& p) -> Rational& { return p.x; },
      [](const ExactPoint& p) { return p.y; });
  spread_ties(
      pts, [](ExactPoint& p) -> Rational& { return p.y; },
      [](const ExactPoint& p) { return p.x; });

  std::vector<std::size_t> by_x(pts.size());
  std::iota(by_x.begin(), by_x.end(), 0);
  std::sort(by_x.begin(), by_x.end(), [&](std::size_t a, std::size_t b) { return pts[a].x < pts[b].x; });
  std::vector<Rational> heights;
  heights.reserve(pts.size());
  for (std::size_t i : by_x) heights.push_back(pts[i].y);
  return reduce(heights);
}

SimpleGraph pointset_competition_graph(std::span<const Point> points) {
  check_points(points);
  const int n = static_cast<int>(points.size());
  auto below = [&](int a, int b) { return points[a].x < points[b].x && points[a].y < points[b].y; };
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      for (int w = 0; w < n; ++w) {
        if (w != u && w != v && below(w, u) && below(w, v)) {
          g.add_edge(u, v);
          break;
        }
      }
    }
  }
  return g;
}

}  // namespace permcomp
