#include "spanloc/spanners.hpp"

#include <algorithm>
#include <set>

#include "spanloc/cdelaunay.hpp"
#include "spanloc/parallel.hpp"

namespace spanloc {

namespace {

template <class Cross>
SpannerGraph wspd_delaunay_spanner(const PointSet& P, double eps, Cross cross_edges) {
  if (!(eps > 0 && eps < 0.5)) throw PreconditionError("eps must lie in (0, 1/2)");
  const int n = static_cast<int>(P.size());
  SpannerGraph G(n);
  if (n < 2) return G;
  PairDecomposition ws = build_wspd(P, 6 / eps);
  std::vector<std::vector<std::pair<int, int>>> found(ws.pairs.size());
  parallel_for(ws.pairs.size(), [&](std::size_t i) {
    const Pair& p = ws.pairs[i];
    if (p.left.size() == 1 && p.right.size() == 1)
      found[i] = {{p.left[0], p.right[0]}};
    else
      found[i] = cross_edges(p.left, p.right);
  });
  for (const auto& edges : found)
    for (auto [u, v] : edges) G.add_edge(P, u, v);
  return G;
}

}  // namespace

SpannerGraph build_homothet_spanner(const PointSet& P, ShapePtr C, double eps) {
  return wspd_delaunay_spanner(P, eps, [&](const auto& l, const auto& r) { return delaunay_cross_edges(C, P, l, r); });
}

SpannerGraph build_disk_spanner(const PointSet& P, double eps) {
  return wspd_delaunay_spanner(P, eps, [&](const auto& l, const auto& r) { return disk_delaunay_cross_edges(P, l, r); });
}

SpannerGraph build_nice_polygon_spanner(const PointSet& P, const ConvexShape& C, int k, double eps,
                                        const NiceOptions& opt) {
  if (!(eps > 0 && eps < 1)) throw PreconditionError("eps must lie in (0,1)");
  if (!(opt.c4 >= 1)) throw PreconditionError("c4 must be >= 1");
  if (!analyze_polygon(C).is_nice(k)) throw PreconditionError("polygon is not k-nice");
  const int n = static_cast<int>(P.size());
  const double et = eps / opt.c4;
  SpannerGraph G(n);
  if (n < 2) return G;

  // Fat triangles spanned by a vertex and a non-adjacent edge.
  const auto& v = C.vertices();
  const int m = static_cast<int>(v.size());
  std::set<std::array<int, 3>> triangles;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int j1 = (j + 1) % m;
      if (i == j || i == j1) continue;
      std::array<int, 3> t{i, j, j1};
      std::sort(t.begin(), t.end());
      triangles.insert(t);
    }
  for (const auto& t : triangles) {
    ConvexShape tri = ConvexShape::from_vertices({v[t[0]], v[t[1]], v[t[2]]});
    G.merge(build_fat_triangle_spanner(P, tri, et, opt.gamma).graph);
  }

  // Trapezoid-Delaunay cross edges of an angular semi-separated decomposition.
  PairDecomposition ws = refine_double_wedge(P, build_sspd(P, 1 / et), et);
  std::vector<const Pair*> open;
  for (const Pair& p : ws.pairs) {
    bool done = true;
    for (int a : p.left)
      for (int b : p.right)
        if (!G.has_edge(a, b)) done = false;
    if (!done) open.push_back(&p);
  }
  if (open.empty()) return G;

  TrapezoidCover cover = decompose_trapezoids(C, k, opt.trap_eps, opt.c2, opt.c3);
  std::vector<ShapePtr> shapes;
  for (const Trapezoid& T : cover.trapezoids) shapes.push_back(make_shape(T.shape()));
  std::vector<std::vector<std::pair<int, int>>> found(open.size());
  parallel_for(open.size(), [&](std::size_t i) {
    const Pair& p = *open[i];
    std::set<std::pair<int, int>> edges;
    for (const ShapePtr& s : shapes) {
      for (auto e : delaunay_cross_edges(s, P, p.left, p.right)) edges.insert(e);
      if (edges.size() == p.left.size() * p.right.size()) break;
    }
    found[i].assign(edges.begin(), edges.end());
  });
  for (const auto& edges : found)
    for (auto [a, b] : edges) G.add_edge(P, a, b);
  return G;
}

}  // namespace spanloc
