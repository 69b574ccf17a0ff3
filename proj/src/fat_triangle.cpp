#include <algorithm>

#include "spanloc/spanners.hpp"

namespace spanloc {

double triangle_fatness(const ConvexShape& tri) {
  if (tri.size() != 3) throw PreconditionError("triangle shape required");
  auto a = interior_angles(tri.vertices());
  return *std::min_element(a.begin(), a.end());
}

FatTriangleSpanner build_fat_triangle_spanner(const PointSet& P, const ConvexShape& tri, double eps,
                                              double gamma) {
  if (!(eps > 0 && eps < 1)) throw PreconditionError("eps must lie in (0,1)");
  if (!(gamma >= 1)) throw PreconditionError("gamma must be >= 1");
  FatTriangleSpanner out;
  out.alpha = triangle_fatness(tri);
  if (!(out.alpha > 1e-9)) throw PreconditionError("degenerate triangle");
  out.beta = eps * out.alpha / gamma;
  const auto& v = tri.vertices();
  const auto angles = interior_angles(v);

  struct Family {
    Vec2 start;  // unit direction of the first cone boundary
    double width;
    int count;
    Vec2 normal;
  };
  std::vector<Family> fam;
  for (int i = 0; i < 3; ++i) {
    Vec2 next = v[(i + 1) % 3], prev = v[(i + 2) % 3];
    Family f;
    f.start = normalized(next - v[i]);
    f.count = std::max(1, static_cast<int>(std::ceil(angles[i] / out.beta)));
    f.width = angles[i] / f.count;
    // Outer normal of the opposite edge (next -> prev).
    f.normal = normalized(Vec2{prev.y - next.y, next.x - prev.x});
    fam.push_back(f);
    out.normals.push_back(f.normal);
    std::vector<Cone> cones;
    for (int j = 0; j < f.count; ++j) {
      Vec2 lo = from_angle(std::atan2(f.start.y, f.start.x) + j * f.width);
      Vec2 hi = from_angle(std::atan2(f.start.y, f.start.x) + (j + 1) * f.width);
      cones.push_back(Cone::between({0, 0}, lo, hi));
    }
    out.cones.push_back(std::move(cones));
  }

  const int n = static_cast<int>(P.size());
  out.graph = SpannerGraph(n);
  struct Best {
    double proj;
    double d;
    int id;
  };
  for (int i = 0; i < 3; ++i) {
    const Family& f = fam[i];
    std::vector<Best> best(static_cast<std::size_t>(f.count));
    for (int p = 0; p < n; ++p) {
      std::fill(best.begin(), best.end(), Best{kInf, kInf, -1});
      for (int x = 0; x < n; ++x) {
        if (x == p) continue;
        Vec2 d = P[x] - P[p];
        double phi = std::atan2(cross(f.start, d), dot(f.start, d));
        if (phi < -1e-12 || phi > angles[i] + 1e-12) continue;
        double proj = dot(f.normal, d), len = norm(d);
        // A direction on the boundary between two sub-cones belongs to both.
        double pos = std::clamp(phi, 0.0, angles[i]) / f.width;
        int j0 = std::min(f.count - 1, static_cast<int>(pos));
        int j1 = j0;
        if (pos - j0 < 1e-9 && j0 > 0) j1 = j0 - 1;
        for (int j : {j0, j1}) {
          Best& b = best[j];
          if (proj < b.proj || (proj == b.proj && (len < b.d || (len == b.d && x < b.id))))
            b = {proj, len, x};
          if (j0 == j1) break;
        }
      }
      for (int j = 0; j < f.count; ++j) {
        if (best[j].id < 0) continue;
        out.graph.add_edge(P, p, best[j].id);
        out.cone_edges.push_back({p, best[j].id, i, j});
      }
    }
  }
  return out;
}

SpannerGraph build_theta_spanner(const PointSet& P, double eps_base) {
  if (!(eps_base > 0 && eps_base < 1)) throw PreconditionError("eps must lie in (0,1)");
  // 1 / (1 - 2 sin(theta/2)) <= 1 + eps
  double theta = 2 * std::asin(eps_base / (2 * (1 + eps_base)));
  int m = static_cast<int>(std::ceil(2 * kPi / theta));
  theta = 2 * kPi / m;
  const int n = static_cast<int>(P.size());
  SpannerGraph G(n);
  std::vector<std::pair<double, int>> best(static_cast<std::size_t>(m));
  for (int p = 0; p < n; ++p) {
    std::fill(best.begin(), best.end(), std::pair{kInf, -1});
    for (int x = 0; x < n; ++x) {
      if (x == p) continue;
      Vec2 d = P[x] - P[p];
      double a = std::atan2(d.y, d.x);
      if (a < 0) a += 2 * kPi;
      int j = std::min(m - 1, static_cast<int>(a / theta));
      double proj = dot(d, from_angle((j + 0.5) * theta));
      if (proj < best[j].first || (proj == best[j].first && x < best[j].second)) best[j] = {proj, x};
    }
    for (const auto& [proj, x] : best)
      if (x >= 0) G.add_edge(P, p, x);
  }
  return G;
}

SpannerGraph build_weak_convex_spanner(const PointSet& P, double eps, double delta) {
  if (!(eps > 0 && eps < 1) || !(delta > 0 && delta < 1))
    throw PreconditionError("eps and delta must lie in (0,1)");
  return build_theta_spanner(P, std::min(eps, delta * delta));
}

}  // namespace spanloc
