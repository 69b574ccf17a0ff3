#pragma once

// Brute-force reference computations used to cross-check the library.

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "spanloc/spanloc.hpp"

namespace oracle {

using spanloc::Vec2;

inline double cross2(Vec2 o, Vec2 a, Vec2 b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

/// Point in a CCW convex polygon given by its vertices.
inline bool in_polygon(const std::vector<Vec2>& poly, Vec2 p, double tol = 1e-12) {
  for (std::size_t i = 0; i < poly.size(); ++i) {
    Vec2 a = poly[i], b = poly[(i + 1) % poly.size()];
    if (cross2(a, b, p) / std::hypot(b.x - a.x, b.y - a.y) < -tol) return false;
  }
  return true;
}

inline bool strictly_in_polygon(const std::vector<Vec2>& poly, Vec2 p, double tol) {
  for (std::size_t i = 0; i < poly.size(); ++i) {
    Vec2 a = poly[i], b = poly[(i + 1) % poly.size()];
    double len = std::hypot(b.x - a.x, b.y - a.y);
    if (cross2(a, b, p) / len <= tol) return false;
  }
  return true;
}

inline std::vector<Vec2> scaled_polygon(const std::vector<Vec2>& shape, Vec2 t, double lambda) {
  std::vector<Vec2> out;
  for (Vec2 v : shape) out.push_back({t.x + lambda * v.x, t.y + lambda * v.y});
  return out;
}

/// Convex distance by bisection on the scale using only vertex membership.
inline double convex_distance(const std::vector<Vec2>& shape, Vec2 t, Vec2 p) {
  double lo = 0, hi = 1;
  while (!in_polygon(scaled_polygon(shape, t, hi), p)) hi *= 2;
  for (int it = 0; it < 200; ++it) {
    double mid = (lo + hi) / 2;
    (in_polygon(scaled_polygon(shape, t, mid), p) ? hi : lo) = mid;
  }
  return hi;
}

/// Closed-form convex distance from the edge list of a CCW polygon around
/// the origin: the largest ratio of p - t against each edge's supporting line.
inline double gauge(const std::vector<Vec2>& shape, Vec2 t, Vec2 p) {
  double best = 0;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    Vec2 a = shape[i], b = shape[(i + 1) % shape.size()];
    double mx = b.y - a.y, my = a.x - b.x;
    best = std::max(best, (mx * (p.x - t.x) + my * (p.y - t.y)) / (mx * a.x + my * a.y));
  }
  return best;
}

/// All-pairs shortest paths over the induced subgraph on `ids`.
inline std::vector<std::vector<double>> floyd_warshall(const spanloc::SpannerGraph& G,
                                                       const std::vector<int>& ids) {
  const double inf = std::numeric_limits<double>::infinity();
  std::size_t m = ids.size();
  std::map<int, std::size_t> pos;
  for (std::size_t i = 0; i < m; ++i) pos[ids[i]] = i;
  std::vector<std::vector<double>> d(m, std::vector<double>(m, inf));
  for (std::size_t i = 0; i < m; ++i) {
    d[i][i] = 0;
    for (auto arc : G.neighbors(ids[i])) {
      auto it = pos.find(arc.to);
      if (it != pos.end()) d[i][it->second] = std::min(d[i][it->second], arc.w);
    }
  }
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline double max_dilation_fw(const spanloc::SpannerGraph& G, const spanloc::PointSet& P,
                              const std::vector<int>& ids) {
  auto d = floyd_warshall(G, ids);
  double worst = 1;
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      worst = std::max(worst, d[i][j] / spanloc::dist(P[ids[i]], P[ids[j]]));
  return worst;
}

/// Classical Delaunay edges: pq is an edge iff some triangle pqr has a
/// circumcircle with no point strictly inside.
inline std::set<std::pair<int, int>> incircle_delaunay(const std::vector<Vec2>& pts) {
  int n = static_cast<int>(pts.size());
  std::set<std::pair<int, int>> edges;
  if (n == 2) edges.insert({0, 1});
  auto incircle = [](Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
    double adx = a.x - d.x, ady = a.y - d.y, bdx = b.x - d.x, bdy = b.y - d.y, cdx = c.x - d.x,
           cdy = c.y - d.y;
    return (adx * adx + ady * ady) * (bdx * cdy - cdx * bdy) -
           (bdx * bdx + bdy * bdy) * (adx * cdy - cdx * ady) +
           (cdx * cdx + cdy * cdy) * (adx * bdy - bdx * ady);
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vec2 a = pts[i], b = pts[j], c = pts[k];
        double orient = cross2(a, b, c);
        if (std::abs(orient) < 1e-15) continue;
        if (orient < 0) std::swap(b, c);
        bool empty = true;
        for (int l = 0; l < n && empty; ++l)
          if (l != i && l != j && l != k && incircle(a, b, c, pts[l]) > 0) empty = false;
        if (empty) {
          edges.insert({i, j});
          edges.insert({i, k});
          edges.insert({j, k});
        }
      }
  return edges;
}

/// Convex-distance Delaunay edge test by searching homothet centres: {p,q}
/// is an edge iff some centre t has max(d(t,p), d(t,q)) < d(t,r) for all
/// other r. Grid search followed by repeated zooms on the best centre.
inline bool sampled_delaunay_edge(const std::vector<Vec2>& shape, const std::vector<Vec2>& pts, int p,
                                  int q, double* margin_out = nullptr) {
  double span = 0;
  Vec2 lo{1e300, 1e300}, hi{-1e300, -1e300};
  for (Vec2 v : pts) {
    lo = {std::min(lo.x, v.x), std::min(lo.y, v.y)};
    hi = {std::max(hi.x, v.x), std::max(hi.y, v.y)};
  }
  span = std::max(hi.x - lo.x, hi.y - lo.y);
  auto score = [&](Vec2 t) {
    double need = std::max(gauge(shape, t, pts[p]), gauge(shape, t, pts[q]));
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < pts.size(); ++r)
      if (static_cast<int>(r) != p && static_cast<int>(r) != q)
        best = std::min(best, gauge(shape, t, pts[r]));
    return (best - need) / std::max(need, 1e-300);
  };
  Vec2 mid{(pts[p].x + pts[q].x) / 2, (pts[p].y + pts[q].y) / 2};
  double best = score(mid);
  const int g = 24;
  for (double start : {3.0, 1e4}) {
    Vec2 best_t = mid;
    double local = score(mid);
    double radius = start * span;
    for (int round = 0; round < 60 && best <= 0; ++round) {
      Vec2 c = best_t;
      for (int a = -g; a <= g; ++a)
        for (int b = -g; b <= g; ++b) {
          Vec2 t{c.x + radius * a / g, c.y + radius * b / g};
          double s = score(t);
          if (s > local) local = s, best_t = t;
        }
      radius /= 2;
    }
    best = std::max(best, local);
  }
  if (margin_out) *margin_out = best;
  return best > 0;
}

inline bool segments_cross(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  double d1 = cross2(a, b, c), d2 = cross2(a, b, d), d3 = cross2(c, d, a), d4 = cross2(c, d, b);
  return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

inline double segment_point_distance(Vec2 a, Vec2 b, Vec2 p) {
  double dx = b.x - a.x, dy = b.y - a.y;
  double t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / (dx * dx + dy * dy);
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(a.x + t * dx - p.x, a.y + t * dy - p.y);
}

inline double segment_distance(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  if (segments_cross(a, b, c, d)) return 0;
  return std::min({segment_point_distance(a, b, c), segment_point_distance(a, b, d),
                   segment_point_distance(c, d, a), segment_point_distance(c, d, b)});
}

/// Minimum distance between non-adjacent edges of a polygon.
inline double pairwise_sensitivity(const std::vector<Vec2>& poly) {
  std::size_t k = poly.size();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 2; j < k; ++j) {
      if (i == 0 && j == k - 1) continue;
      best = std::min(best, segment_distance(poly[i], poly[(i + 1) % k], poly[j], poly[(j + 1) % k]));
    }
  return best;
}

inline bool connected(const spanloc::SpannerGraph& G, const std::vector<int>& ids) {
  if (ids.empty()) return true;
  std::set<int> in(ids.begin(), ids.end()), seen{ids[0]};
  std::queue<int> q;
  q.push(ids[0]);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (auto arc : G.neighbors(u))
      if (in.count(arc.to) && seen.insert(arc.to).second) q.push(arc.to);
  }
  return seen.size() == in.size();
}

/// Counts how many pairs of the decomposition cover each unordered point pair;
/// returns the number of pairs {a,b} not covered exactly once.
inline long coverage_defects(const spanloc::PairDecomposition& D, int n) {
  std::vector<int> count(static_cast<std::size_t>(n) * n, 0);
  for (const auto& pr : D.pairs)
    for (int a : pr.left)
      for (int b : pr.right) {
        int u = std::min(a, b), v = std::max(a, b);
        ++count[static_cast<std::size_t>(u) * n + v];
      }
  long bad = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (count[static_cast<std::size_t>(u) * n + v] != 1) ++bad;
  return bad;
}

inline double jaccard(const std::set<std::pair<int, int>>& a, const std::set<std::pair<int, int>>& b) {
  std::size_t inter = 0;
  for (const auto& e : a) inter += b.count(e);
  std::size_t uni = a.size() + b.size() - inter;
  return uni == 0 ? 1.0 : double(inter) / uni;
}

inline std::set<std::pair<int, int>> edge_set(const spanloc::SpannerGraph& G) {
  auto e = G.edges();
  return {e.begin(), e.end()};
}

}  // namespace oracle
