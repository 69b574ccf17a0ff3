#include <doctest.h>

#include <random>

#include "oracles.hpp"

using namespace spanloc;

namespace {

std::vector<int> all_ids(const PointSet& P) {
  std::vector<int> ids(P.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
  return ids;
}

}  // namespace

TEST_CASE("dilation basics") {
  PointSet P = gen_random(25, Distribution::Uniform, 1);
  CHECK(dilation(complete_graph(P), P, all_ids(P)).max_dilation == 1);

  PointSet L({{0, 0}, {1, 0}, {2, 0}});
  SpannerGraph path(3);
  path.add_edge(L, 0, 1);
  path.add_edge(L, 1, 2);
  CHECK(dilation(path, L, all_ids(L)).max_dilation == doctest::Approx(1));

  SpannerGraph empty(3);
  DilationReport rep = dilation(empty, L, all_ids(L), 2.0);
  CHECK_FALSE(rep.ok());
  CHECK(rep.max_dilation == kInf);
}

TEST_CASE("dilation agrees with Floyd-Warshall") {
  PointSet P = gen_random(30, Distribution::Clustered, 2);
  for (double eps : {0.1, 0.5}) {
    SpannerGraph G = build_theta_spanner(P, eps);
    double fw = oracle::max_dilation_fw(G, P, all_ids(P));
    CHECK(std::abs(dilation(G, P, all_ids(P)).max_dilation - fw) <= 1e-12);
  }
}

TEST_CASE("dilation is monotone under edge insertion") {
  PointSet P = gen_random(30, Distribution::Uniform, 3);
  SpannerGraph G = build_theta_spanner(P, 0.5);
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> pick(0, 29);
  double prev = dilation(G, P, all_ids(P)).max_dilation;
  for (int i = 0; i < 50; ++i) {
    G.add_edge(P, pick(rng), pick(rng));
    double now = dilation(G, P, all_ids(P)).max_dilation;
    CHECK(now <= prev + 1e-15);
    prev = now;
  }
}

TEST_CASE("region sampling") {
  PointSet P = gen_random(40, Distribution::Uniform, 4);
  ShapePtr c = make_shape(ConvexShape::regular(5));
  CHECK(sample_homothets(P, c, 0, 1).empty());
  auto a = sample_homothets(P, c, 100, 7);
  auto b = sample_homothets(P, c, 100, 7);
  REQUIRE(a.size() == 100);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& ha = std::get<Homothet>(a[i]);
    const auto& hb = std::get<Homothet>(b[i]);
    CHECK(ha.scale > 0);
    CHECK(ha.shape == c);
    CHECK(ha.t == hb.t);
    CHECK(ha.scale == hb.scale);
  }
  // critical regions: smallest enclosing homothets contain their defining points
  auto crit = sample_homothets(P, c, 60, 3, SampleStrategy::Critical);
  for (const Region& r : crit) {
    const auto& h = std::get<Homothet>(r);
    auto poly = h.vertices();
    int inside = 0;
    for (std::size_t i = 0; i < P.size(); ++i) inside += oracle::in_polygon(poly, P[i], 1e-9 * (1 + h.scale));
    CHECK(inside >= 2);
  }
  auto rects = sample_rects(P, 50, 2);
  CHECK(rects.size() == 50);
  for (const Region& r : rects) CHECK(std::get<Rect>(r).width() > 0);
  auto bodies = sample_convex_bodies(P, 30, 2);
  CHECK(bodies.size() == 30);
  for (const Homothet& h : bodies) CHECK(h.shape->self_consistent());
}

TEST_CASE("local spanner check") {
  PointSet P = gen_random(30, Distribution::Uniform, 5);
  ShapePtr c = make_shape(ConvexShape::square());
  DilationReport full = check_local_spanner(complete_graph(P), P, c, 0, 100, 1);
  CHECK(full.ok());
  CHECK(full.max_dilation == 1);
  DilationReport none = check_local_spanner(SpannerGraph(30), P, c, 0.5, 100, 1);
  CHECK_FALSE(none.ok());
  CHECK(none.max_dilation == kInf);
}

TEST_CASE("fault tolerance") {
  PointSet P = gen_random(30, Distribution::Uniform, 6);
  ShapePtr c = make_shape(ConvexShape::square());
  SpannerGraph G = build_homothet_spanner(P, c, 0.25);
  // a far-away fault changes nothing
  Homothet far{c, {100, 100}, 1};
  CHECK(check_fault_tolerance(G, P, {far}, 0.25).ok());
  auto bodies = sample_convex_bodies(P, 20, 9);
  CHECK(check_fault_tolerance(G, P, bodies, 0.25).ok());
}

TEST_CASE("disk lower bound") {
  DiskLowerBound lb = gen_lower_bound_disk(2, 2);
  CHECK(lb.certified);
  CHECK(lb.M == 2);
  REQUIRE(lb.points.size() == 4);
  CHECK(lb.points[0] == Vec2{-1, 0});
  CHECK(lb.points[1] == Vec2{-2, 0});
  CHECK(lb.points[2] == Vec2{8, -1});
  CHECK(lb.points.spread() <= 2 * std::pow(2.0, lb.M + 1));

  for (double phi : {16.0, 256.0}) {
    DiskLowerBound d = gen_lower_bound_disk(6, phi);
    CHECK(d.certified);
    CHECK(d.M == 1 + static_cast<int>(std::ceil(std::log2(phi))));
    CHECK(d.forced.size() == static_cast<std::size_t>(6 * (d.M - 1)));
    CHECK(d.min_detour >= 4.0 / 3);
    // independent recheck: the disk centred on a_i's vertical line through
    // a_i and b_j holds no a_l and no later b_k in its interior
    for (auto [ai, bj] : d.forced) {
      Vec2 a = d.points[ai], b = d.points[bj];
      double cy = ((b.x - a.x) * (b.x - a.x) + b.y * b.y) / (2 * b.y);
      Vec2 ctr{a.x, cy};
      double r = std::abs(cy);
      for (std::size_t o = 0; o < d.points.size(); ++o) {
        if (static_cast<int>(o) == ai || (static_cast<int>(o) >= 6 && static_cast<int>(o) <= bj)) continue;
        CHECK(dist(d.points[o], ctr) >= r * (1 - 1e-12));
      }
    }
  }
}

TEST_CASE("triangle lower bound") {
  TriangleLowerBound lb = gen_lower_bound_triangle(4, 4);
  CHECK(lb.certified);
  CHECK(lb.h == 2);
  REQUIRE(lb.points.size() == 6);
  CHECK(lb.points[0] == Vec2{4, 0.5});
  CHECK(lb.points[1] == Vec2{8, 0});
  CHECK(lb.points[2].x == doctest::Approx(0.25 - 1));
  CHECK(lb.points[2].y == doctest::Approx(-0.25));
  CHECK(lb.points.spread() <= 8 * 4 * 4);

  TriangleLowerBound t = gen_lower_bound_triangle(8, 64);
  CHECK(t.certified);
  CHECK(t.min_detour >= 12.0 / 7 - 1e-12);
  REQUIRE(t.witnesses.size() == t.forced.size());
  for (std::size_t e = 0; e < t.forced.size(); ++e) {
    auto [bi, cj] = t.forced[e];
    auto poly = t.witnesses[e].vertices();
    std::set<int> inside;
    for (std::size_t o = 0; o < t.points.size(); ++o)
      if (oracle::in_polygon(poly, t.points[o], 1e-9 * (1 + t.witnesses[e].scale))) inside.insert(static_cast<int>(o));
    std::set<int> expect{cj};
    for (int k = bi; k < t.h; ++k) expect.insert(k);
    CHECK(inside == expect);
  }
}

TEST_CASE("random point sets") {
  CHECK(gen_random(1, Distribution::Uniform, 1).size() == 1);
  for (auto d : {Distribution::Uniform, Distribution::Clustered, Distribution::GridPerturbed}) {
    PointSet a = gen_random(200, d, 9), b = gen_random(200, d, 9);
    CHECK(a.coords() == b.coords());
  }
  PointSet u = gen_random(1000, Distribution::Uniform, 12);
  CHECK(u.spread() >= std::sqrt(1000.0) / 4);
  CHECK(u.spread() <= 10 * 1000);
  CHECK(parse_distribution("grid-perturbed") == Distribution::GridPerturbed);
  CHECK_THROWS_AS(parse_distribution("nope"), PreconditionError);
}
