#include "spanloc/graph.hpp"

#include <algorithm>

namespace spanloc {

std::uint64_t SpannerGraph::key(int u, int v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

bool SpannerGraph::add_edge(int u, int v, double w) {
  if (u == v) return false;
  if (u < 0 || v < 0 || u >= n() || v >= n()) throw PreconditionError("edge endpoint out of range");
  if (!keys_.insert(key(u, v)).second) return false;
  adj_[u].push_back({v, w});
  adj_[v].push_back({u, w});
  return true;
}

bool SpannerGraph::has_edge(int u, int v) const { return keys_.count(key(u, v)) > 0; }

std::vector<std::pair<int, int>> SpannerGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(keys_.size());
  for (std::uint64_t k : keys_) out.emplace_back(static_cast<int>(k >> 32), static_cast<int>(k & 0xffffffffu));
  std::sort(out.begin(), out.end());
  return out;
}

void SpannerGraph::merge(const SpannerGraph& other) {
  if (other.n() > n()) adj_.resize(other.adj_.size());
  for (int u = 0; u < other.n(); ++u)
    for (const Arc& a : other.adj_[u])
      if (u < a.to) add_edge(u, a.to, a.w);
}

std::vector<int> SpannerGraph::degrees() const {
  std::vector<int> out;
  out.reserve(adj_.size());
  for (const auto& a : adj_) out.push_back(static_cast<int>(a.size()));
  return out;
}

bool region_contains(const Region& R, Vec2 p, double tol) {
  return std::visit([&](const auto& r) { return r.contains(p, tol); }, R);
}

double region_diameter(const Region& R) {
  return std::visit([](const auto& r) { return r.diameter(); }, R);
}

namespace {

// Clips the parameter range [lo, hi] of a + s (b - a) to {x : n . x <= c}.
void clip_segment(Vec2 a, Vec2 b, Vec2 n, double c, double& lo, double& hi) {
  double g0 = dot(n, a) - c;
  double g1 = dot(n, b - a);
  if (g1 == 0) {
    if (g0 >= 0) hi = lo - 1;
    return;
  }
  double s = -g0 / g1;
  if (g1 > 0)
    hi = std::min(hi, s);
  else
    lo = std::max(lo, s);
}

}  // namespace

bool segment_hits_interior(const Region& R, Vec2 a, Vec2 b) {
  double lo = 0, hi = 1;
  if (const auto* h = std::get_if<Homothet>(&R)) {
    const auto& fs = h->shape->facets();
    for (const Facet& f : fs) {
      double c = dot(f.normal, h->t) + h->scale * f.offset;
      clip_segment(a, b, f.normal, c - kTol * (1 + h->scale * f.offset), lo, hi);
    }
  } else if (const auto* d = std::get_if<Disk>(&R)) {
    // distance from the centre to the segment
    Vec2 ab = b - a;
    double len2 = dot(ab, ab);
    double s = len2 > 0 ? std::clamp(dot(d->c - a, ab) / len2, 0.0, 1.0) : 0.0;
    return dist(a + ab * s, d->c) < d->r - kTol * (1 + d->r);
  } else {
    const Rect& r = std::get<Rect>(R);
    double eps = kTol * (1 + std::max(r.width(), r.height()));
    clip_segment(a, b, {1, 0}, r.x1 - eps, lo, hi);
    clip_segment(a, b, {-1, 0}, -r.x0 - eps, lo, hi);
    clip_segment(a, b, {0, 1}, r.y1 - eps, lo, hi);
    clip_segment(a, b, {0, -1}, -r.y0 - eps, lo, hi);
  }
  return lo < hi;
}

InducedGraph restricted(const SpannerGraph& G, const PointSet& P, const Region& R) {
  InducedGraph out{{}, SpannerGraph(G.n())};
  std::vector<char> in(P.size(), 0);
  for (std::size_t i = 0; i < P.size(); ++i) {
    if (region_contains(R, P[i])) {
      in[i] = 1;
      out.vertices.push_back(static_cast<int>(i));
    }
  }
  for (int u : out.vertices)
    for (const auto& a : G.neighbors(u))
      if (u < a.to && in[a.to]) out.graph.add_edge(u, a.to, a.w);
  return out;
}

InducedGraph minus(const SpannerGraph& G, const PointSet& P, const Region& R) {
  InducedGraph out{{}, SpannerGraph(G.n())};
  std::vector<char> keep(P.size(), 0);
  for (std::size_t i = 0; i < P.size(); ++i) {
    if (!region_contains(R, P[i])) {
      keep[i] = 1;
      out.vertices.push_back(static_cast<int>(i));
    }
  }
  for (int u : out.vertices)
    for (const auto& a : G.neighbors(u))
      if (u < a.to && keep[a.to] && !segment_hits_interior(R, P[u], P[a.to]))
        out.graph.add_edge(u, a.to, a.w);
  return out;
}

SpannerGraph complete_graph(const PointSet& P) {
  SpannerGraph G(static_cast<int>(P.size()));
  for (int i = 0; i < G.n(); ++i)
    for (int j = i + 1; j < G.n(); ++j) G.add_edge(P, i, j);
  return G;
}

}  // namespace spanloc
