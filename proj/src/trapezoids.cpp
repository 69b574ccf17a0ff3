#include <algorithm>
#include <queue>

#include "spanloc/cdelaunay.hpp"
#include "spanloc/spanners.hpp"

namespace spanloc {

namespace {

struct Chord {
  Vec2 left;   // smaller coordinate along u
  Vec2 right;
};

/// Intersection of the line {w . z = o} with the polygon.
std::optional<Chord> chord_at(const std::vector<Vec2>& v, Vec2 u, Vec2 w, double o) {
  const std::size_t k = v.size();
  double lo = kInf, hi = -kInf;
  Vec2 plo, phi;
  auto take = [&](Vec2 z) {
    double s = dot(u, z);
    if (s < lo) lo = s, plo = z;
    if (s > hi) hi = s, phi = z;
  };
  for (std::size_t i = 0; i < k; ++i) {
    Vec2 a = v[i], b = v[(i + 1) % k];
    double fa = dot(w, a) - o, fb = dot(w, b) - o;
    if (fa == 0) take(a);
    if (fb == 0) take(b);
    if ((fa < 0 && fb > 0) || (fa > 0 && fb < 0)) take(a + (b - a) * (fa / (fa - fb)));
  }
  if (lo > hi) return std::nullopt;
  return Chord{plo, phi};
}

int edge_of(const std::vector<Vec2>& v, Vec2 a, Vec2 b) {
  Vec2 m = (a + b) / 2;
  int best = 0;
  double bd = kInf;
  for (std::size_t i = 0; i < v.size(); ++i) {
    double d = segment_distance(m, v[i], v[(i + 1) % v.size()]);
    if (d < bd) bd = d, best = static_cast<int>(i);
  }
  return best;
}

}  // namespace

TrapezoidCover decompose_trapezoids(const ConvexShape& C, int t, double eps_prime, double c2,
                                    double c3) {
  if (!(eps_prime > 0 && eps_prime < 1)) throw PreconditionError("eps' must lie in (0,1)");
  if (!(c2 > 0) || !(c3 > 0)) throw PreconditionError("cover constants must be positive");
  if (C.size() < 4) throw PreconditionError("trapezoid cover needs at least 4 vertices");
  PolygonAnalysis an = analyze_polygon(C);
  if (!an.is_nice(t)) throw PreconditionError("polygon is not t-nice");

  const auto& v = C.vertices();
  const int k = static_cast<int>(v.size());
  const double c1 = eps_prime * an.sensitivity / c2;
  TrapezoidCover out;
  out.eps = eps_prime;

  std::vector<Vec2> refined;
  const int extra = static_cast<int>(std::ceil(c3 * t));
  for (int i = 0; i < k; ++i) {
    Vec2 a = v[i], b = v[(i + 1) % k];
    int m = std::max(1, static_cast<int>(std::floor(dist(a, b) / c1)));
    for (int s = 0; s < m; ++s) {
      Vec2 p = a + (b - a) * (static_cast<double>(s) / m);
      Vec2 q = a + (b - a) * (static_cast<double>(s + 1) / m);
      out.markers.push_back(p);
      refined.push_back(p);
      for (int r = 1; r <= extra; ++r) refined.push_back(p + (q - p) * (static_cast<double>(r) / (extra + 1)));
    }
  }

  std::vector<double> angles;
  for (Vec2 p : out.markers)
    for (Vec2 a : refined) {
      if (p == a) continue;
      double th = std::atan2(a.y - p.y, a.x - p.x);
      if (th < 0) th += kPi;
      if (th >= kPi) th -= kPi;
      angles.push_back(th);
    }
  std::sort(angles.begin(), angles.end());
  std::vector<double> uniq;
  for (double a : angles)
    if (uniq.empty() || a - uniq.back() > 1e-12) uniq.push_back(a);
  if (uniq.size() > 1 && uniq.front() + kPi - uniq.back() <= 1e-12) uniq.pop_back();

  const double tiny = 1e-12 * C.diameter();
  for (double th : uniq) {
    Vec2 u = from_angle(th), w = perp(u);
    out.directions.push_back(u);
    std::vector<double> offs;
    for (Vec2 p : out.markers) offs.push_back(dot(w, p));
    std::sort(offs.begin(), offs.end());
    offs.erase(std::unique(offs.begin(), offs.end(),
                           [&](double a, double b) { return b - a <= tiny; }),
               offs.end());
    std::optional<Chord> prev;
    for (std::size_t s = 0; s < offs.size(); ++s) {
      std::optional<Chord> cur = chord_at(v, u, w, offs[s]);
      if (prev && cur) {
        Trapezoid T{{prev->left, prev->right, cur->right, cur->left}};
        bool degenerate = dist(prev->left, prev->right) <= tiny || dist(cur->left, cur->right) <= tiny;
        if (!degenerate) {
          int e0 = edge_of(v, T.v[1], T.v[2]);
          int e1 = edge_of(v, T.v[3], T.v[0]);
          int gap = std::abs(e0 - e1);
          bool adjacent = gap <= 1 || gap == k - 1;
          if (!adjacent) out.trapezoids.push_back(T);
        }
      }
      prev = cur;
    }
  }
  return out;
}

JumpResult trap_jump(const Trapezoid& T, const PointSet& P, const std::vector<int>& X,
                     const std::vector<int>& Y, int a, int b, double eps) {
  if (std::find(X.begin(), X.end(), a) == X.end() || std::find(Y.begin(), Y.end(), b) == Y.end())
    throw PreconditionError("trap_jump: a must lie in X and b in Y");
  const double tol = 1e-9;
  bool legs = (T.on_leg(0, P[a], tol) && T.on_leg(1, P[b], tol)) ||
              (T.on_leg(1, P[a], tol) && T.on_leg(0, P[b], tol));
  if (!legs) throw PreconditionError("trap_jump: a and b must lie on the two legs");

  ShapePtr shape = make_shape(T.shape());
  Homothet region = Homothet::placed(shape);
  std::vector<int> ids;
  std::vector<char> in_x;
  for (int i : X) ids.push_back(i), in_x.push_back(1);
  for (int i : Y) ids.push_back(i), in_x.push_back(0);
  std::vector<Vec2> pts;
  for (int i : ids) pts.push_back(P[i]);
  DelaunaySolver solver(shape, pts);

  const int m = static_cast<int>(ids.size());
  std::vector<int> inside;
  for (int i = 0; i < m; ++i)
    if (region.contains(pts[i], tol)) inside.push_back(i);
  std::vector<std::vector<int>> adj(m);
  for (std::size_t s = 0; s < inside.size(); ++s)
    for (std::size_t r = s + 1; r < inside.size(); ++r)
      if (solver.witness(inside[s], inside[r])) {
        adj[inside[s]].push_back(inside[r]);
        adj[inside[r]].push_back(inside[s]);
      }

  int la = static_cast<int>(std::find(ids.begin(), ids.end(), a) - ids.begin());
  int lb = static_cast<int>(X.size() + (std::find(Y.begin(), Y.end(), b) - Y.begin()));
  std::vector<char> seen(m, 0);
  std::queue<int> bfs;
  bfs.push(la);
  seen[la] = 1;
  while (!bfs.empty()) {
    int x = bfs.front();
    bfs.pop();
    for (int y : adj[x])
      if (!seen[y]) seen[y] = 1, bfs.push(y);
  }

  JumpResult res;
  res.rhs = (1 + eps) * dist(P[a], P[b]);
  if (!seen[lb]) {
    res.diagnostic = "restricted Delaunay graph does not connect a and b";
    return res;
  }
  for (int x = 0; x < m; ++x) {
    if (!seen[x] || !in_x[x]) continue;
    for (int y : adj[x]) {
      if (in_x[y]) continue;
      double lhs = (1 + eps) * dist(P[a], pts[x]) + dist(pts[x], pts[y]) + (1 + eps) * dist(pts[y], P[b]);
      if (lhs < res.lhs) {
        res.lhs = lhs;
        res.edge = std::pair{ids[x], ids[y]};
      }
    }
  }
  if (res.lhs > res.rhs * (1 + 1e-12)) res.diagnostic = "no cross edge satisfies the detour bound";
  return res;
}

}  // namespace spanloc
