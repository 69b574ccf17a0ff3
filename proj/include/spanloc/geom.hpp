#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace spanloc {

/// Absolute tolerance for boundary and containment predicates.
inline constexpr double kTol = 1e-9;
inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kPi = 3.14159265358979323846;

/// Thrown when an operation's precondition or parameter range is violated.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Thrown when the input is not in general position and needs perturbation.
struct DegenerateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Vec2 {
  double x = 0;
  double y = 0;

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
  constexpr bool operator==(const Vec2&) const = default;
};

constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }
constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double dist(Vec2 a, Vec2 b) { return norm(a - b); }
/// Counter-clockwise perpendicular.
constexpr Vec2 perp(Vec2 a) { return {-a.y, a.x}; }
inline Vec2 normalized(Vec2 a) { return a / norm(a); }
inline Vec2 from_angle(double theta) { return {std::cos(theta), std::sin(theta)}; }
/// Orientation of (a, b, c): positive for a left turn.
constexpr double orient(Vec2 a, Vec2 b, Vec2 c) { return cross(b - a, c - a); }

double segment_distance(Vec2 p, Vec2 a, Vec2 b);
double segment_segment_distance(Vec2 a, Vec2 b, Vec2 c, Vec2 d);
bool segments_properly_cross(Vec2 a, Vec2 b, Vec2 c, Vec2 d);
/// Angle in [0, pi/2] between the lines spanned by u and v.
double line_angle(Vec2 u, Vec2 v);

struct Point2 {
  double x = 0;
  double y = 0;
  int id = 0;

  Vec2 vec() const { return {x, y}; }
};

/// Points with ids 0..n-1, pairwise distinct. Diameter, closest pair and
/// spread are computed once on construction.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Vec2> coords);

  std::size_t size() const { return coords_.size(); }
  bool empty() const { return coords_.empty(); }
  Vec2 operator[](std::size_t i) const { return coords_[i]; }
  Point2 point(int id) const { return {coords_[id].x, coords_[id].y, id}; }
  const std::vector<Vec2>& coords() const { return coords_; }

  double diameter() const { return diameter_; }
  /// +inf for fewer than two points.
  double closest_pair() const { return closest_pair_; }
  /// 1 for fewer than two points.
  double spread() const;

 private:
  std::vector<Vec2> coords_;
  double diameter_ = 0;
  double closest_pair_ = kInf;
};

double diameter_of(std::span<const Vec2> pts);
double closest_pair_of(std::span<const Vec2> pts);
std::vector<Vec2> convex_hull(std::vector<Vec2> pts);

/// Deterministic offset of magnitude <= 1e-7 * diameter per point, keyed by
/// the point's coordinates and `seed` so the result does not depend on the
/// order of the input.
PointSet perturbed(const PointSet& P, std::uint64_t seed);

struct Facet {
  Vec2 normal;    // unit outward normal
  double offset;  // > 0, the origin is interior
};

/// Convex polygon containing the origin in its interior, stored both as a CCW
/// vertex list and as facets {z : normal_i . z <= offset_i}. Facet i is the
/// edge from vertex i to vertex i+1.
class ConvexShape {
 public:
  /// Accepts CW or CCW input; translates the area centroid to the origin.
  static ConvexShape from_vertices(std::vector<Vec2> vertices);
  /// Regular k-gon with circumradius 1 and a horizontal bottom edge.
  static ConvexShape regular(int k);
  /// The square [-1,1]^2.
  static ConvexShape square();

  const std::vector<Vec2>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  std::size_t size() const { return vertices_.size(); }
  Vec2 vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
  /// Translation removed by `from_vertices`: input = vertices() + centroid().
  Vec2 centroid() const { return centroid_; }
  double diameter() const { return diameter_; }
  double in_radius() const { return in_radius_; }

  /// Re-derives the facet form from the vertices and checks both agree.
  bool self_consistent() const;

 private:
  std::vector<Vec2> vertices_;
  std::vector<Facet> facets_;
  Vec2 centroid_;
  double diameter_ = 0;
  double in_radius_ = 0;
};

using ShapePtr = std::shared_ptr<const ConvexShape>;
ShapePtr make_shape(ConvexShape shape);

/// min{lambda >= 0 : p in t + lambda C}.
double convex_distance(const ConvexShape& C, Vec2 t, Vec2 p);

/// t + scale * C. Membership is closed; `interior_contains` is strict.
struct Homothet {
  ShapePtr shape;
  Vec2 t;
  double scale = 1;

  bool contains(Vec2 p, double tol = kTol) const;
  bool interior_contains(Vec2 p, double tol = kTol) const;
  /// Scale-normalised convex distance: <= 1 iff contained.
  double gauge(Vec2 p) const;
  std::vector<Vec2> vertices() const;
  double diameter() const { return scale * shape->diameter(); }
  Vec2 vertex(std::size_t i) const { return t + shape->vertex(i) * scale; }
  /// Signed slack of facet i at p: negative inside.
  double facet_slack(std::size_t i, Vec2 p) const;
  /// Indices of facets whose line passes through p (within tol).
  std::vector<int> facets_through(Vec2 p, double tol = 1e-9) const;
  Homothet scaled_about(Vec2 center, double beta) const;
  /// The polygon the shape was created from (translation restored, scale 1).
  static Homothet placed(ShapePtr shape);
};

struct Cone {
  Vec2 apex;
  Vec2 dir_lo;
  Vec2 dir_hi;
  double angle = 0;

  static Cone between(Vec2 apex, Vec2 lo, Vec2 hi);
  bool contains(Vec2 p, double tol = kTol) const;
};

/// Vertices v0..v3 with bases v0v1 and v2v3 and legs v1v2 and v3v0.
struct Trapezoid {
  std::array<Vec2, 4> v;

  double diameter() const;
  double leg_length(int leg) const;
  /// max leg length / diameter.
  double narrowness() const;
  bool bases_parallel(double tol = 1e-9) const;
  bool on_leg(int leg, Vec2 p, double tol = 1e-9) const;
  ConvexShape shape() const;
};

struct Rect {
  double x0 = 0, x1 = 0, y0 = 0, y1 = 0;

  bool contains(Vec2 p, double tol = kTol) const;
  /// Scaling by `factor` about the centre.
  Rect scaled(double factor) const;
  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
  double diameter() const { return std::hypot(width(), height()); }
  Vec2 center() const { return {(x0 + x1) / 2, (y0 + y1) / 2}; }
};

/// Closed Euclidean disk.
struct Disk {
  Vec2 c;
  double r = 0;

  bool contains(Vec2 p, double tol = kTol) const { return dist(p, c) <= r + tol * (1 + r); }
  bool interior_contains(Vec2 p, double tol = kTol) const { return dist(p, c) < r - tol * (1 + r); }
  double diameter() const { return 2 * r; }
};

/// Smallest lambda (then the centre of the optimal translation set) such that
/// t + lambda C contains every point of S.
Homothet smallest_enclosing_homothet(ShapePtr C, std::span<const Vec2> S);

/// Two-stage shrink: around p until q reaches the boundary, then around q
/// until p does. The result is contained in H with p, q on its boundary.
Homothet shrink_to_two_boundary(const Homothet& H, Vec2 p, Vec2 q);

struct TriangleShrink {
  Homothet homothet;
  bool p_is_vertex = true;  // false: q is the vertex, p on the opposite edge
};

/// For a triangular shape: a homothet inside T with one point at a vertex and
/// the other on the opposite edge.
TriangleShrink shrink_triangle_vertex_edge(const Homothet& T, Vec2 p, Vec2 q);

/// True iff the distance from p to the complement of `body` is at least
/// delta * diameter(body).
bool erode_contains(const Homothet& body, double delta, Vec2 p);

struct PolygonAnalysis {
  double sensitivity = kInf;  // min distance between non-adjacent edges
  bool sensitivity_defined = false;
  double min_outer_angle = 0;
  double max_edge = 0;
  double in_radius = 0;
  double out_radius = 0;
  double aspect_ratio = 0;

  bool is_nice(int t, double c_nice = 4.0) const;
};

PolygonAnalysis analyze_polygon(const ConvexShape& C);

/// Interior angle at each vertex of a CCW polygon.
std::vector<double> interior_angles(std::span<const Vec2> poly);

}  // namespace spanloc
