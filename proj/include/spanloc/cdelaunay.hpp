#pragma once

#include <optional>
#include <span>
#include <vector>

#include "spanloc/geom.hpp"
#include "spanloc/graph.hpp"

namespace spanloc {

/// Decides Delaunay edges under the convex distance of one shape: {p,q} is an
/// edge iff some homothet has p and q on its boundary and no other point in
/// its interior.
class DelaunaySolver {
 public:
  DelaunaySolver(ShapePtr shape, std::span<const Vec2> pts);

  /// An empty witness homothet for {u,v}, or nullopt if none exists. Throws
  /// DegenerateError when the only witnesses have two further points on
  /// their boundary.
  std::optional<Homothet> witness(int u, int v) const;

 private:
  ShapePtr shape_;
  std::vector<Vec2> pts_;
  Vec2 origin_;
  double scale_ = 1;
};

struct DelaunayEdge {
  int u;
  int v;
  Homothet witness;
};

struct DelaunayResult {
  SpannerGraph graph;
  std::vector<DelaunayEdge> witnesses;
};

DelaunayResult c_delaunay(ShapePtr C, const PointSet& P);

/// Delaunay edges of the points `ids` of P that join `left` to `right`
/// (global ids). `left` and `right` partition `ids`.
std::vector<std::pair<int, int>> delaunay_cross_edges(ShapePtr C, const PointSet& P,
                                                      const std::vector<int>& left,
                                                      const std::vector<int>& right);

/// Euclidean (disk) Delaunay: {u,v} is an edge iff some disk through both
/// has no other point of `pts` in its interior.
std::optional<Disk> disk_witness(std::span<const Vec2> pts, int u, int v);
SpannerGraph disk_delaunay(const PointSet& P);
std::vector<std::pair<int, int>> disk_delaunay_cross_edges(const PointSet& P, const std::vector<int>& left,
                                                           const std::vector<int>& right);

/// Number of points of P other than u, v strictly inside h.
int interior_count(const Homothet& h, const PointSet& P, int u, int v);

struct ConnectivityReport {
  int trials = 0;
  int checked = 0;
  std::vector<Homothet> failures;
};

/// Samples homothets and checks that the restricted Delaunay graph is
/// connected on every one of them.
ConnectivityReport check_restricted_connectivity(ShapePtr C, const PointSet& P, int trials,
                                                 std::uint64_t seed);

}  // namespace spanloc
