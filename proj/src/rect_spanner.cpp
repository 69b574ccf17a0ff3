#include <algorithm>
#include <unordered_map>

#include "spanloc/spanners.hpp"

namespace spanloc {

int default_tau(double eps, double delta) {
  return static_cast<int>(std::ceil(20 / eps + 20 / delta));
}

std::vector<GridCell> rect_grid_cells(double x, double y, int tau) {
  std::vector<GridCell> out;
  struct Sub {
    Quadrant q;
    double x0, y0, w, h;
  };
  const Sub subs[] = {{Quadrant::SW, 0, 0, x, y},
                      {Quadrant::SE, x, 0, y, y},
                      {Quadrant::NW, 0, y, x, x},
                      {Quadrant::NE, x, y, y, x}};
  for (const Sub& s : subs)
    for (int i = 0; i < tau; ++i)
      for (int j = 0; j < tau; ++j) {
        double cw = s.w / tau, ch = s.h / tau;
        out.push_back({{s.x0 + i * cw, s.x0 + (i + 1) * cw, s.y0 + j * ch, s.y0 + (j + 1) * ch}, s.q});
      }
  return out;
}

namespace {

/// Key of the grid cell of b (canonical frame, a = (-x,-y)); -1 if b lies
/// outside [0, x+y]^2.
long cell_key(double x, double y, Vec2 b, int tau) {
  double s = x + y;
  if (b.x < 0 || b.y < 0 || b.x > s || b.y > s) return -1;
  auto idx = [&](double v, double lo, double len) {
    return std::clamp(static_cast<int>((v - lo) / len * tau), 0, tau - 1);
  };
  bool east = b.x > x, north = b.y > y;
  int quad = (north ? 2 : 0) + (east ? 1 : 0);
  int ix = east ? idx(b.x, x, y) : idx(b.x, 0, x);
  int iy = north ? idx(b.y, y, x) : idx(b.y, 0, y);
  return (static_cast<long>(quad) * tau + ix) * tau + iy;
}

void connect_side(const PointSet& P, const std::vector<int>& X, const std::vector<int>& Y, Vec2 c,
                  Vec2 flip, int tau, SpannerGraph& G) {
  auto canon = [&](Vec2 z) { return Vec2{(z.x - c.x) * flip.x, (z.y - c.y) * flip.y}; };
  std::vector<Vec2> ys;
  for (int b : Y) ys.push_back(canon(P[b]));
  struct Extremes {
    int left = -1, bottom = -1;
  };
  std::unordered_map<long, Extremes> cells;
  for (int a : X) {
    Vec2 ca = canon(P[a]);
    double x = -ca.x, y = -ca.y;
    cells.clear();
    for (std::size_t i = 0; i < Y.size(); ++i) {
      long key = cell_key(x, y, ys[i], tau);
      if (key < 0) continue;
      Extremes& e = cells[key];
      if (e.left < 0 || ys[i].x < ys[e.left].x) e.left = static_cast<int>(i);
      if (e.bottom < 0 || ys[i].y < ys[e.bottom].y) e.bottom = static_cast<int>(i);
    }
    for (const auto& [key, e] : cells) {
      G.add_edge(P, a, Y[e.left]);
      G.add_edge(P, a, Y[e.bottom]);
    }
  }
}

}  // namespace

SpannerGraph build_rectangle_weak_spanner(const PointSet& P, double eps, double delta, int tau) {
  if (!(eps > 0 && eps < 1) || !(delta > 0 && delta < 1))
    throw PreconditionError("eps and delta must lie in (0,1)");
  if (tau == 0) tau = default_tau(eps, delta);
  if (tau < default_tau(eps, delta)) throw PreconditionError("tau must be >= ceil(20/eps + 20/delta)");
  const int n = static_cast<int>(P.size());
  SpannerGraph G(n);
  if (n < 2) return G;
  PairDecomposition qs = build_qspd(P);
  for (const Pair& p : qs.pairs) {
    Vec2 c = p.center;
    Vec2 l = P[p.left.front()];
    // Reflect so that the left side sits in the negative quadrant.
    Vec2 flip{l.x < c.x ? 1.0 : -1.0, l.y < c.y ? 1.0 : -1.0};
    connect_side(P, p.left, p.right, c, flip, tau, G);
    connect_side(P, p.right, p.left, c, -flip, tau, G);
  }
  return G;
}

}  // namespace spanloc
