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

// Dilation inside sampled homothets recomputed with Floyd-Warshall and
// vertex-list membership.
double fw_local_dilation(const SpannerGraph& G, const PointSet& P, const std::vector<Region>& regions) {
  double worst = 1;
  for (const Region& r : regions) {
    const Homothet& h = std::get<Homothet>(r);
    auto poly = h.vertices();
    std::vector<int> ids;
    for (std::size_t i = 0; i < P.size(); ++i)
      if (oracle::in_polygon(poly, P[i], 1e-9 * (1 + h.scale))) ids.push_back(static_cast<int>(i));
    if (ids.size() >= 2) worst = std::max(worst, oracle::max_dilation_fw(G, P, ids));
  }
  return worst;
}

bool cone_holds(Vec2 lo, Vec2 hi, Vec2 d) {
  return oracle::cross2({0, 0}, lo, d) >= -1e-12 * std::hypot(d.x, d.y) &&
         oracle::cross2({0, 0}, d, hi) >= -1e-12 * std::hypot(d.x, d.y);
}

}  // namespace

TEST_CASE("homothet spanner") {
  ShapePtr sq = make_shape(ConvexShape::square());
  PointSet two({{0, 0}, {1, 2}});
  SpannerGraph g2 = build_homothet_spanner(two, sq, 0.25);
  CHECK(g2.edge_count() == 1);
  CHECK_THROWS_AS(build_homothet_spanner(two, sq, 0.5), PreconditionError);
  CHECK_THROWS_AS(build_homothet_spanner(two, sq, 0), PreconditionError);

  for (int k : {4, 5}) {
    ShapePtr c = make_shape(ConvexShape::regular(k));
    PointSet P = gen_random(60, Distribution::Clustered, 3 + k);
    SpannerGraph G = build_homothet_spanner(P, c, 0.25);
    auto regions = sample_homothets(P, c, 150, 9);
    CHECK(fw_local_dilation(G, P, regions) <= 1.25 + 1e-9);
    CHECK(check_local_spanner(G, P, regions, 0.25).ok());
  }
}

TEST_CASE("disk spanner") {
  PointSet P = gen_random(60, Distribution::Clustered, 11);
  SpannerGraph G = build_disk_spanner(P, 0.25);
  auto regions = sample_disks(P, 150, 4);
  double worst = 1;
  for (const Region& r : regions) {
    const Disk& d = std::get<Disk>(r);
    std::vector<int> ids;
    for (std::size_t i = 0; i < P.size(); ++i)
      if (std::hypot(P[i].x - d.c.x, P[i].y - d.c.y) <= d.r * (1 + 1e-9) + 1e-9) ids.push_back(static_cast<int>(i));
    if (ids.size() >= 2) worst = std::max(worst, oracle::max_dilation_fw(G, P, ids));
  }
  CHECK(worst <= 1.25 + 1e-9);
  CHECK(check_local_spanner(G, P, regions, 0.25).ok());
  CHECK_THROWS_AS(build_disk_spanner(P, 0.5), PreconditionError);
}

TEST_CASE("fat triangle spanner") {
  ConvexShape tri = ConvexShape::regular(3);
  CHECK(triangle_fatness(tri) == doctest::Approx(kPi / 3));
  PointSet two({{0, 0}, {1, 0.5}});
  CHECK(build_fat_triangle_spanner(two, tri, 0.2).graph.edge_count() == 1);

  PointSet P = gen_random(80, Distribution::Uniform, 21);
  double eps = 0.2;
  FatTriangleSpanner S = build_fat_triangle_spanner(P, tri, eps);
  double alpha = kPi / 3, gamma = 64;
  CHECK(S.graph.edge_count() <= 3 * std::ceil(4 * kPi * gamma / (eps * alpha)) * P.size());

  // sub-cones of each vertex tile that vertex's cone
  for (const auto& family : S.cones) {
    double total = 0;
    for (const Cone& c : family) {
      total += c.angle;
      CHECK(c.angle <= S.beta + 1e-12);
      CHECK(c.angle >= S.beta / 2 - 1e-12);
    }
    CHECK(total == doctest::Approx(alpha));
  }

  // nearest-in-cone inequality for every cone edge and every point behind it
  long checked = 0;
  for (const ConeEdge& e : S.cone_edges) {
    const Cone& c = S.cones[e.vertex][e.cone];
    Vec2 a = P[e.from], cc = P[e.to];
    for (std::size_t b = 0; b < P.size(); ++b) {
      if (static_cast<int>(b) == e.from || !cone_holds(c.dir_lo, c.dir_hi, P[b] - a)) continue;
      CHECK(dist(a, cc) + (1 + eps) * dist(P[b], cc) <= (1 + eps) * dist(a, P[b]) + 1e-12);
      CHECK(dist(P[b], cc) <= dist(a, P[b]) + 1e-12);
      ++checked;
    }
  }
  CHECK(checked > 0);

  auto regions = sample_homothets(P, make_shape(tri), 150, 4);
  CHECK(fw_local_dilation(S.graph, P, regions) <= 1 + eps + 1e-9);
}

TEST_CASE("theta spanner") {
  CHECK(build_theta_spanner(PointSet({{0, 0}, {1, 1}}), 0.1).edge_count() == 1);
  PointSet P = gen_random(100, Distribution::Uniform, 77);
  SpannerGraph G = build_theta_spanner(P, 0.1);
  CHECK(oracle::max_dilation_fw(G, P, all_ids(P)) <= 1.1 + 1e-9);

  std::vector<Vec2> line;
  for (int i = 0; i < 20; ++i) line.push_back({i * 0.37 + 0.01 * i * i, 0});
  PointSet L(line);
  CHECK(oracle::max_dilation_fw(build_theta_spanner(L, 0.1), L, all_ids(L)) == doctest::Approx(1));
}

TEST_CASE("weak convex spanner") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 1000; ++i) {
    double et = u(rng), l = 10 * u(rng);
    CHECK(std::sqrt(et * (2 + et)) / 2 * l <= std::sqrt(et) * l + 1e-15);
  }
  PointSet P = gen_random(80, Distribution::Uniform, 13);
  SpannerGraph G = build_weak_convex_spanner(P, 0.3, 0.3);
  auto bodies = sample_convex_bodies(P, 100, 2);
  DilationReport rep = check_weak_convex_spanner(G, P, bodies, 0.3, 0.3);
  CHECK(rep.ok());
  CHECK(rep.pairs_tested > 0);
  // delta = 1 leaves nothing deep enough to test
  CHECK(check_weak_convex_spanner(SpannerGraph(static_cast<int>(P.size())), P, bodies, 0.3, 1).ok());
}

TEST_CASE("trapezoid decomposition") {
  ConvexShape sq = ConvexShape::square();
  TrapezoidCover cov = decompose_trapezoids(sq, 4, 0.2, 2, 1);
  CHECK_FALSE(cov.trapezoids.empty());
  for (const Trapezoid& t : cov.trapezoids) {
    CHECK(t.narrowness() <= 0.2 + 1e-9);
    CHECK(t.bases_parallel(1e-9));
  }
  for (Vec2 v : sq.vertices()) {
    bool found = false;
    for (Vec2 m : cov.markers) found = found || dist(m, v) < 1e-12;
    CHECK(found);
  }

  // leg coverage for non-adjacent edge pairs of a hexagon
  ConvexShape hex = ConvexShape::regular(6);
  TrapezoidCover hc = decompose_trapezoids(hex, 6, 0.3, 2, 1);
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0, 1);
  std::uniform_int_distribution<int> edge(0, 5);
  int covered = 0, trials = 300;
  for (int s = 0; s < trials; ++s) {
    int i = edge(rng), j = edge(rng);
    while (j == i || (j + 1) % 6 == i || (i + 1) % 6 == j) j = edge(rng);
    Vec2 a = hex.vertex(i) + (hex.vertex(i + 1) - hex.vertex(i)) * u(rng);
    Vec2 b = hex.vertex(j) + (hex.vertex(j + 1) - hex.vertex(j)) * u(rng);
    bool ok = false;
    for (const Trapezoid& t : hc.trapezoids) {
      auto on = [&](int leg, Vec2 p) {
        Vec2 x = leg == 0 ? t.v[1] : t.v[3], y = leg == 0 ? t.v[2] : t.v[0];
        return oracle::segment_point_distance(x, y, p) <= 1e-9;
      };
      if ((on(0, a) && on(1, b)) || (on(1, a) && on(0, b))) {
        ok = true;
        break;
      }
    }
    covered += ok;
  }
  CHECK(covered == trials);

  ConvexShape sliver = ConvexShape::from_vertices({{0, 0}, {10, 0}, {10, 0.01}, {0, 0.01}});
  CHECK_THROWS_AS(decompose_trapezoids(sliver, 4, 0.2), PreconditionError);
}

TEST_CASE("trapezoid jump") {
  Trapezoid T{{Vec2{0, 0}, Vec2{4, 0}, Vec2{4, 1}, Vec2{0, 1}}};
  PointSet P({{0, 0.5}, {4, 0.5}});
  JumpResult r = trap_jump(T, P, {0}, {1}, 0, 1, 0.1);
  REQUIRE(r.edge);
  CHECK(*r.edge == std::pair<int, int>{0, 1});
  CHECK(r.lhs <= r.rhs + 1e-12);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0, 1);
  int ok = 0, trials = 200;
  for (int s = 0; s < trials; ++s) {
    std::vector<Vec2> pts{{0, u(rng)}, {40, u(rng)}};
    for (int i = 0; i < 6; ++i) pts.push_back({0.05 + 0.2 * u(rng), u(rng)});
    for (int i = 0; i < 6; ++i) pts.push_back({39.75 + 0.2 * u(rng), u(rng)});
    PointSet Q(pts);
    std::vector<int> X{0, 2, 3, 4, 5, 6, 7}, Y{1, 8, 9, 10, 11, 12, 13};
    Trapezoid TT{{Vec2{0, 0}, Vec2{40, 0}, Vec2{40, 1}, Vec2{0, 1}}};
    JumpResult j = trap_jump(TT, Q, X, Y, 0, 1, 0.5);
    if (j.edge && j.lhs <= j.rhs + 1e-9) ++ok;
  }
  CHECK(ok == trials);
}

TEST_CASE("nice polygon spanner") {
  ConvexShape sq = ConvexShape::square();
  CHECK(build_nice_polygon_spanner(PointSet({{0, 0}, {1, 0.2}}), sq, 4, 0.5).edge_count() == 1);
  PointSet P = gen_random(50, Distribution::Uniform, 31);
  SpannerGraph G = build_nice_polygon_spanner(P, sq, 4, 0.5);
  auto regions = sample_homothets(P, make_shape(sq), 100, 6);
  CHECK(fw_local_dilation(G, P, regions) <= 1.5 + 1e-9);
}

TEST_CASE("rectangle grid cells") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.01, 1);
  double eps = 0.25, delta = 0.25;
  int tau = default_tau(eps, delta);
  CHECK(tau == 160);
  for (int s = 0; s < 20; ++s) {
    double x = u(rng), y = u(rng);
    auto cells = rect_grid_cells(x, y, tau);
    CHECK(cells.size() == 4u * tau * tau);
    double area = 0;
    for (const GridCell& c : cells) {
      area += c.rect.width() * c.rect.height();
      // cell diameter against the distance from a = (-x,-y)
      double dx = std::max(0.0, c.rect.x0 + x), dy = std::max(0.0, c.rect.y0 + y);
      CHECK(c.rect.diameter() <= eps / 4 * std::hypot(dx, dy) + 1e-12);
    }
    CHECK(area == doctest::Approx((x + y) * (x + y)));
  }
}

TEST_CASE("rectangle weak spanner") {
  CHECK(build_rectangle_weak_spanner(PointSet({{0, 0}, {1, 1}}), 0.25, 0.25).edge_count() == 1);
  CHECK_THROWS_AS(build_rectangle_weak_spanner(PointSet({{0, 0}, {1, 1}}), 0.25, 0.25, 10), PreconditionError);
  PointSet P = gen_random(80, Distribution::Uniform, 19);
  SpannerGraph G = build_rectangle_weak_spanner(P, 0.25, 0.25);
  auto rects = sample_rects(P, 200, 3);
  CHECK(check_weak_rect_spanner(G, P, rects, 0.25, 0.25).ok());
  // independent recheck of a few rectangles
  for (int i = 0; i < 40; ++i) {
    Rect r = std::get<Rect>(rects[i]);
    Rect s = r.scaled(0.75);
    std::vector<int> in, inner;
    for (std::size_t p = 0; p < P.size(); ++p) {
      if (P[p].x >= r.x0 && P[p].x <= r.x1 && P[p].y >= r.y0 && P[p].y <= r.y1) in.push_back(static_cast<int>(p));
      if (P[p].x >= s.x0 && P[p].x <= s.x1 && P[p].y >= s.y0 && P[p].y <= s.y1) inner.push_back(static_cast<int>(p));
    }
    auto d = oracle::floyd_warshall(G, in);
    for (std::size_t a = 0; a < in.size(); ++a)
      for (std::size_t b = a + 1; b < in.size(); ++b) {
        bool qa = std::count(inner.begin(), inner.end(), in[a]) > 0;
        bool qb = std::count(inner.begin(), inner.end(), in[b]) > 0;
        if (qa && qb) CHECK(d[a][b] <= 1.25 * dist(P[in[a]], P[in[b]]) + 1e-9);
      }
  }
}
