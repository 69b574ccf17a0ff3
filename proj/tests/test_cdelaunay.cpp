#include <doctest.h>

#include "oracles.hpp"

using namespace spanloc;

TEST_CASE("two points give one edge") {
  PointSet P({{0, 0}, {1, 0.3}});
  DelaunayResult r = c_delaunay(make_shape(ConvexShape::square()), P);
  CHECK(r.graph.edge_count() == 1);
  CHECK(r.graph.has_edge(0, 1));
}

TEST_CASE("square corners are degenerate until perturbed") {
  PointSet P({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  ShapePtr sq = make_shape(ConvexShape::square());
  CHECK_THROWS_AS(c_delaunay(sq, P), DegenerateError);
  DelaunayResult r = c_delaunay(sq, perturbed(P, 1));
  CHECK(r.graph.edge_count() == 5);
  for (auto [u, v] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {0, 3}}) CHECK(r.graph.has_edge(u, v));
}

TEST_CASE("witnesses are empty and touch both endpoints") {
  for (int k : {3, 4, 6}) {
    ShapePtr c = make_shape(ConvexShape::regular(k));
    PointSet P = gen_random(40, Distribution::Uniform, 100 + k);
    DelaunayResult r = c_delaunay(c, P);
    CHECK(r.witnesses.size() == r.graph.edge_count());
    for (const auto& e : r.witnesses) {
      CHECK(interior_count(e.witness, P, e.u, e.v) == 0);
      auto poly = e.witness.vertices();
      for (std::size_t i = 0; i < P.size(); ++i)
        if (static_cast<int>(i) != e.u && static_cast<int>(i) != e.v)
          CHECK_FALSE(oracle::strictly_in_polygon(poly, P[i], 1e-9 * e.witness.scale));
      double tol = 1e-9 * (1 + e.witness.scale);
      CHECK(oracle::in_polygon(poly, P[e.u], tol));
      CHECK(oracle::in_polygon(poly, P[e.v], tol));
    }
  }
}

TEST_CASE("edge set matches the centre-search oracle") {
  for (int k : {3, 4, 6}) {
    ConvexShape shape = ConvexShape::regular(k);
    PointSet P = gen_random(14, Distribution::Uniform, 40 + k);
    DelaunayResult r = c_delaunay(make_shape(shape), P);
    int n = static_cast<int>(P.size());
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        double margin = 0;
        bool expect = oracle::sampled_delaunay_edge(shape.vertices(), P.coords(), u, v, &margin);
        // the search finds a positive margin for true edges; a very thin region may be missed
        if (expect || margin < -1e-3) CHECK_MESSAGE(r.graph.has_edge(u, v) == expect, "k=" << k << " pair " << u << "," << v);
      }
  }
}

TEST_CASE("planar and at most 3n-6 edges") {
  for (int k : {4, 5, 16}) {
    PointSet P = gen_random(80, Distribution::Clustered, 7 * k);
    DelaunayResult r = c_delaunay(make_shape(ConvexShape::regular(k)), P);
    CHECK(r.graph.edge_count() <= 3 * P.size() - 6);
    auto edges = r.graph.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
      for (std::size_t j = i + 1; j < edges.size(); ++j) {
        auto [a, b] = edges[i];
        auto [c, d] = edges[j];
        if (a == c || a == d || b == c || b == d) continue;
        CHECK_FALSE(oracle::segments_cross(P[a], P[b], P[c], P[d]));
      }
    CHECK(oracle::connected(r.graph, [&] {
      std::vector<int> all(P.size());
      for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
      return all;
    }()));
  }
}

TEST_CASE("many-sided polygon approaches the classical triangulation") {
  PointSet P = gen_random(40, Distribution::Uniform, 17);
  auto classical = oracle::incircle_delaunay(P.coords());
  double prev = 0;
  for (int k : {16, 32, 64}) {
    DelaunayResult r = c_delaunay(make_shape(ConvexShape::regular(k)), P);
    double j = oracle::jaccard(oracle::edge_set(r.graph), classical);
    CHECK(j >= prev - 1e-12);
    prev = j;
  }
  CHECK(prev >= 0.95);
}

TEST_CASE("independent of input order") {
  PointSet P = gen_random(30, Distribution::Uniform, 23);
  std::vector<Vec2> rev(P.coords().rbegin(), P.coords().rend());
  ShapePtr c = make_shape(ConvexShape::regular(5));
  auto a = c_delaunay(c, P).graph.edges();
  auto b = c_delaunay(c, PointSet(rev)).graph.edges();
  std::set<std::pair<int, int>> mapped;
  int n = static_cast<int>(P.size());
  for (auto [u, v] : b) mapped.insert({std::min(n - 1 - u, n - 1 - v), std::max(n - 1 - u, n - 1 - v)});
  CHECK(mapped == std::set<std::pair<int, int>>(a.begin(), a.end()));
}

TEST_CASE("cross edges come from the sub-triangulation") {
  PointSet P = gen_random(30, Distribution::Uniform, 31);
  ShapePtr c = make_shape(ConvexShape::square());
  std::vector<int> left, right;
  for (int i = 0; i < 30; ++i) (P[i].x < 0.5 ? left : right).push_back(i);
  auto cross = delaunay_cross_edges(c, P, left, right);
  auto full = c_delaunay(c, P).graph;
  std::size_t expected = 0;
  for (auto [u, v] : full.edges())
    if ((P[u].x < 0.5) != (P[v].x < 0.5)) ++expected;
  CHECK(cross.size() == expected);
  for (auto [u, v] : cross) {
    CHECK(full.has_edge(u, v));
    CHECK((P[u].x < 0.5) != (P[v].x < 0.5));
  }
}

TEST_CASE("restricted and minus") {
  PointSet P({{0, 0}, {2, 0}, {1, 1}, {1, -1}});
  SpannerGraph G = complete_graph(P);
  ShapePtr sq = make_shape(ConvexShape::square());

  InducedGraph all = restricted(G, P, Homothet{sq, {1, 0}, 5});
  CHECK(all.vertices.size() == 4);
  CHECK(all.graph.edge_count() == 6);

  InducedGraph one = restricted(G, P, Homothet{sq, {0, 0}, 0.5});
  CHECK(one.vertices == std::vector<int>{0});
  CHECK(one.graph.edge_count() == 0);

  // thin sliver across the segment 2-3 only
  Region sliver = Rect{0.9, 1.1, -0.2, 0.2};
  InducedGraph m = minus(G, P, sliver);
  CHECK(m.vertices.size() == 4);
  CHECK(m.graph.edge_count() == 4);
  CHECK_FALSE(m.graph.has_edge(2, 3));
  CHECK_FALSE(m.graph.has_edge(0, 1));

  Region far = Rect{10, 11, 10, 11};
  CHECK(minus(G, P, far).graph.edge_count() == 6);
}

TEST_CASE("restricted connectivity") {
  PointSet P = gen_random(60, Distribution::Uniform, 61);
  ConnectivityReport rep = check_restricted_connectivity(make_shape(ConvexShape::regular(6)), P, 200, 5);
  CHECK(rep.trials == 200);
  CHECK(rep.failures.empty());
}

TEST_CASE("disk Delaunay matches the incircle oracle") {
  for (std::uint64_t seed : {1, 2, 3}) {
    PointSet P = gen_random(35, Distribution::Clustered, seed);
    CHECK(oracle::edge_set(disk_delaunay(P)) == oracle::incircle_delaunay(P.coords()));
  }
  PointSet L({{0, 0}, {1, 0}, {2, 0}});
  SpannerGraph g = disk_delaunay(L);
  CHECK(g.edge_count() == 2);
  CHECK_FALSE(g.has_edge(0, 2));
  // witnesses pass through both endpoints and are empty
  PointSet P = gen_random(25, Distribution::Uniform, 8);
  for (int i = 0; i < 25; ++i)
    for (int j = i + 1; j < 25; ++j) {
      auto d = disk_witness(P.coords(), i, j);
      if (!d) continue;
      CHECK(std::abs(dist(d->c, P[i]) - d->r) <= 1e-9 * (1 + d->r));
      CHECK(std::abs(dist(d->c, P[j]) - d->r) <= 1e-9 * (1 + d->r));
      for (int o = 0; o < 25; ++o)
        if (o != i && o != j) CHECK(dist(d->c, P[o]) >= d->r * (1 - 1e-9));
    }
}
