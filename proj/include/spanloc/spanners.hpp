#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spanloc/geom.hpp"
#include "spanloc/graph.hpp"
#include "spanloc/pair_decomp.hpp"

namespace spanloc {

struct SpannerConfig {
  double eps = 0.25;
  double delta = 0.25;
  double gamma = 64;  // fat-triangle cone constant
  int tau = 0;        // rectangle grid resolution; 0 = ceil(20/eps + 20/delta)
  double c2 = 16;     // trapezoid marker spacing constant
  double c3 = 8;      // trapezoid refinement constant
  double c4 = 32;     // nice-polygon master constant
  std::uint64_t seed = 1;
};

/// WSPD with separation 6/eps, then the cross edges of the C-Delaunay
/// triangulation of every pair. Requires eps in (0, 1/2).
SpannerGraph build_homothet_spanner(const PointSet& P, ShapePtr C, double eps);
/// The same construction with Euclidean disks in place of homothets.
SpannerGraph build_disk_spanner(const PointSet& P, double eps);

struct ConeEdge {
  int from;
  int to;
  int vertex;  // triangle vertex whose cone family contains the edge
  int cone;    // sub-cone index
};

struct FatTriangleSpanner {
  SpannerGraph graph;
  std::vector<ConeEdge> cone_edges;
  /// Sub-cones (apex at the origin) per triangle vertex.
  std::vector<std::vector<Cone>> cones;
  /// Outer normal of the edge opposite each vertex.
  std::vector<Vec2> normals;
  double alpha = 0;
  double beta = 0;
};

/// Smallest interior angle of a triangle.
double triangle_fatness(const ConvexShape& tri);

FatTriangleSpanner build_fat_triangle_spanner(const PointSet& P, const ConvexShape& tri, double eps,
                                              double gamma = 64);

/// Classic cone graph with dilation at most 1 + eps_base.
SpannerGraph build_theta_spanner(const PointSet& P, double eps_base);
/// Theta graph with eps~ = min(eps, delta^2).
SpannerGraph build_weak_convex_spanner(const PointSet& P, double eps, double delta);

struct TrapezoidCover {
  std::vector<Trapezoid> trapezoids;
  std::vector<Vec2> markers;
  std::vector<Vec2> directions;
  double eps = 0;
};

/// Narrow trapezoids whose legs lie on the boundary of C, one family per
/// direction spanned by boundary markers. Requires C to be t-nice.
TrapezoidCover decompose_trapezoids(const ConvexShape& C, int t, double eps_prime, double c2 = 16,
                                    double c3 = 8);

struct JumpResult {
  std::optional<std::pair<int, int>> edge;
  double lhs = kInf;  // (1+eps)|aa'| + |a'b'| + (1+eps)|b'b|
  double rhs = 0;     // (1+eps)|ab|
  std::string diagnostic;
};

/// A cross edge of the T-Delaunay triangulation of X u Y on a path from a to
/// b inside T, chosen to minimise the detour.
JumpResult trap_jump(const Trapezoid& T, const PointSet& P, const std::vector<int>& X,
                     const std::vector<int>& Y, int a, int b, double eps);

struct NiceOptions {
  double c4 = 32;
  double gamma = 64;
  /// Narrowness and constants of the trapezoid cover used for the
  /// pair edges.
  double trap_eps = 0.2;
  double c2 = 2;
  double c3 = 1;
};

SpannerGraph build_nice_polygon_spanner(const PointSet& P, const ConvexShape& C, int k, double eps,
                                        const NiceOptions& opt = {});

enum class Quadrant { NW, NE, SW, SE };

struct GridCell {
  Rect rect;
  Quadrant quadrant;
};

/// Cells of the grid of a point (-x,-y) against the positive quadrant.
std::vector<GridCell> rect_grid_cells(double x, double y, int tau);
int default_tau(double eps, double delta);

SpannerGraph build_rectangle_weak_spanner(const PointSet& P, double eps, double delta, int tau = 0);

}  // namespace spanloc
