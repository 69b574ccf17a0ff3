#pragma once

#include <cstdint>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "spanloc/geom.hpp"

namespace spanloc {

/// Undirected graph over point ids 0..n-1 with Euclidean edge weights.
class SpannerGraph {
 public:
  struct Arc {
    int to;
    double w;
  };

  SpannerGraph() = default;
  explicit SpannerGraph(int n) : adj_(static_cast<std::size_t>(n)) {}

  int n() const { return static_cast<int>(adj_.size()); }
  /// Adds {u,v} with weight w; returns false for loops and duplicates.
  bool add_edge(int u, int v, double w);
  bool add_edge(const PointSet& P, int u, int v) { return add_edge(u, v, dist(P[u], P[v])); }
  bool has_edge(int u, int v) const;
  std::size_t edge_count() const { return keys_.size(); }
  const std::vector<Arc>& neighbors(int u) const { return adj_[u]; }
  /// Edges as (i, j) with i < j, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;
  void merge(const SpannerGraph& other);
  std::vector<int> degrees() const;

 private:
  static std::uint64_t key(int u, int v);

  std::vector<std::vector<Arc>> adj_;
  std::unordered_set<std::uint64_t> keys_;
};

using Region = std::variant<Homothet, Rect, Disk>;

bool region_contains(const Region& R, Vec2 p, double tol = kTol);
/// True iff the open segment ab meets the interior of R.
bool segment_hits_interior(const Region& R, Vec2 a, Vec2 b);
double region_diameter(const Region& R);

/// A vertex subset together with the edges that survive on it.
struct InducedGraph {
  std::vector<int> vertices;
  SpannerGraph graph;
};

/// G|_R: points of P in R and the edges with both endpoints in R.
InducedGraph restricted(const SpannerGraph& G, const PointSet& P, const Region& R);
/// G minus R: points outside R and the edges whose segment misses int(R).
InducedGraph minus(const SpannerGraph& G, const PointSet& P, const Region& R);

SpannerGraph complete_graph(const PointSet& P);

}  // namespace spanloc
