#include "spanloc/geom.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace spanloc {

namespace {

/// Clips a convex polygon (CCW) to the half-plane {z : a . z <= c}.
std::vector<Vec2> clip(const std::vector<Vec2>& poly, Vec2 a, double c) {
  std::vector<Vec2> out;
  const std::size_t m = poly.size();
  out.reserve(m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    Vec2 u = poly[i];
    Vec2 w = poly[(i + 1) % m];
    double su = dot(a, u) - c;
    double sw = dot(a, w) - c;
    if (su <= 0) out.push_back(u);
    if ((su < 0 && sw > 0) || (su > 0 && sw < 0)) {
      double s = su / (su - sw);
      out.push_back(u + (w - u) * s);
    }
  }
  return out;
}

std::vector<Vec2> box(Vec2 lo, Vec2 hi) {
  return {{lo.x, lo.y}, {hi.x, lo.y}, {hi.x, hi.y}, {lo.x, hi.y}};
}

/// Intersection of {z : normals[i] . z <= offsets[i]} inside a bounding box.
std::vector<Vec2> halfplane_polygon(std::span<const Vec2> normals,
                                    std::span<const double> offsets, Vec2 lo,
                                    Vec2 hi) {
  std::vector<Vec2> poly = box(lo, hi);
  for (std::size_t i = 0; i < normals.size() && !poly.empty(); ++i) {
    poly = clip(poly, normals[i], offsets[i]);
  }
  return poly;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double unit_from_bits(std::uint64_t h) {
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

/// Largest beta <= 1 such that shrinking H about `center` by beta keeps
/// `target` inside; facets through `center` are unaffected and skipped.
double shrink_factor(const Homothet& H, Vec2 center, Vec2 target) {
  double beta = 0;
  const auto& facets = H.shape->facets();
  for (std::size_t i = 0; i < facets.size(); ++i) {
    const Facet& f = facets[i];
    double num = dot(f.normal, target - center);
    double den = H.scale * f.offset - dot(f.normal, center - H.t);
    double scale = 1 + H.scale * f.offset;
    if (den <= kTol * scale) continue;
    if (num <= 0) continue;
    beta = std::max(beta, num / den);
  }
  return std::min(beta, 1.0);
}

}  // namespace

double segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  Vec2 d = b - a;
  double len2 = dot(d, d);
  if (len2 == 0) return dist(p, a);
  double s = std::clamp(dot(p - a, d) / len2, 0.0, 1.0);
  return dist(p, a + d * s);
}

bool segments_properly_cross(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  double scale = std::max({norm(b - a), norm(d - c), 1e-300});
  double eps = 1e-12 * scale * scale;
  double o1 = orient(a, b, c), o2 = orient(a, b, d);
  double o3 = orient(c, d, a), o4 = orient(c, d, b);
  return ((o1 > eps && o2 < -eps) || (o1 < -eps && o2 > eps)) &&
         ((o3 > eps && o4 < -eps) || (o3 < -eps && o4 > eps));
}

double segment_segment_distance(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  if (segments_properly_cross(a, b, c, d)) return 0;
  return std::min({segment_distance(a, c, d), segment_distance(b, c, d),
                   segment_distance(c, a, b), segment_distance(d, a, b)});
}

double line_angle(Vec2 u, Vec2 v) {
  double a = std::atan2(std::abs(cross(u, v)), dot(u, v));
  return a > kPi / 2 ? kPi - a : a;
}

// ---------------------------------------------------------------- PointSet

std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Vec2> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, lo = k + 1; i-- > 0;) {
    while (k >= lo && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

double diameter_of(std::span<const Vec2> pts) {
  if (pts.size() < 2) return 0;
  std::vector<Vec2> hull = convex_hull({pts.begin(), pts.end()});
  double best = 0;
  for (std::size_t i = 0; i < hull.size(); ++i)
    for (std::size_t j = i + 1; j < hull.size(); ++j)
      best = std::max(best, dist(hull[i], hull[j]));
  return best;
}

double closest_pair_of(std::span<const Vec2> pts) {
  std::vector<Vec2> s(pts.begin(), pts.end());
  std::sort(s.begin(), s.end(), [](Vec2 a, Vec2 b) { return a.x < b.x; });
  double best = kInf;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size() && s[j].x - s[i].x < best; ++j) {
      best = std::min(best, dist(s[i], s[j]));
    }
  }
  return best;
}

PointSet::PointSet(std::vector<Vec2> coords) : coords_(std::move(coords)) {
  for (Vec2 p : coords_) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw PreconditionError("point coordinates must be finite");
  }
  closest_pair_ = closest_pair_of(coords_);
  if (coords_.size() >= 2 && !(closest_pair_ > 0))
    throw PreconditionError("point set contains coincident points");
  diameter_ = diameter_of(coords_);
}

double PointSet::spread() const {
  if (coords_.size() < 2) return 1;
  return diameter_ / closest_pair_;
}

PointSet perturbed(const PointSet& P, std::uint64_t seed) {
  const double mag = 1e-7 * P.diameter();
  std::vector<Vec2> out;
  out.reserve(P.size());
  for (Vec2 p : P.coords()) {
    std::uint64_t h = splitmix64(seed ^ splitmix64(std::bit_cast<std::uint64_t>(p.x)) ^
                                 splitmix64(std::bit_cast<std::uint64_t>(p.y) + 0x51ed27));
    double r = mag * std::sqrt(unit_from_bits(h));
    double theta = 2 * kPi * unit_from_bits(splitmix64(h));
    out.push_back(p + from_angle(theta) * r);
  }
  return PointSet(std::move(out));
}

// ------------------------------------------------------------- ConvexShape

std::vector<double> interior_angles(std::span<const Vec2> poly) {
  const std::size_t k = poly.size();
  std::vector<double> out(k);
  for (std::size_t i = 0; i < k; ++i) {
    Vec2 a = poly[(i + k - 1) % k] - poly[i];
    Vec2 b = poly[(i + 1) % k] - poly[i];
    out[i] = std::atan2(std::abs(cross(a, b)), dot(a, b));
  }
  return out;
}

ConvexShape ConvexShape::from_vertices(std::vector<Vec2> v) {
  const std::size_t k = v.size();
  if (k < 3) throw PreconditionError("convex shape needs at least 3 vertices");
  for (Vec2 p : v)
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw PreconditionError("shape coordinates must be finite");

  double area2 = 0;
  for (std::size_t i = 0; i < k; ++i) area2 += cross(v[i], v[(i + 1) % k]);
  if (area2 < 0) {
    std::reverse(v.begin(), v.end());
    area2 = -area2;
  }
  double scale = diameter_of(v);
  if (!(area2 > 1e-14 * scale * scale)) throw PreconditionError("degenerate shape");

  double turning = 0;
  for (std::size_t i = 0; i < k; ++i) {
    Vec2 a = v[(i + k - 1) % k], b = v[i], c = v[(i + 1) % k];
    if (!(orient(a, b, c) > 1e-12 * scale * scale))
      throw PreconditionError("shape vertices must be strictly convex");
    turning += kPi - interior_angles(std::array{a, b, c})[1];
  }
  if (std::abs(turning - 2 * kPi) > 1e-6)
    throw PreconditionError("shape vertices must form a simple convex polygon");

  Vec2 c{};
  for (std::size_t i = 0; i < k; ++i) {
    double w = cross(v[i], v[(i + 1) % k]);
    c = c + (v[i] + v[(i + 1) % k]) * w;
  }
  c = c / (3 * area2);

  ConvexShape s;
  s.centroid_ = c;
  s.vertices_.reserve(k);
  for (Vec2 p : v) s.vertices_.push_back(p - c);
  for (std::size_t i = 0; i < k; ++i) {
    Vec2 a = s.vertices_[i], b = s.vertices_[(i + 1) % k];
    Vec2 n = normalized(Vec2{b.y - a.y, a.x - b.x});
    double off = dot(n, a);
    if (!(off > 0)) throw PreconditionError("shape must contain its centroid");
    s.facets_.push_back({n, off});
  }
  s.diameter_ = scale;

  // Largest inscribed disk: bisection on the radius.
  std::vector<Vec2> normals;
  std::vector<double> offsets(k);
  for (const Facet& f : s.facets_) normals.push_back(f.normal);
  double lo = 0;
  double hi = std::numeric_limits<double>::max();
  for (const Facet& f : s.facets_) hi = std::min(hi, f.offset);
  Vec2 blo{-scale, -scale}, bhi{scale, scale};
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    double mid = (lo + hi) / 2;
    for (std::size_t i = 0; i < k; ++i) offsets[i] = s.facets_[i].offset - mid;
    if (halfplane_polygon(normals, offsets, blo, bhi).empty())
      hi = mid;
    else
      lo = mid;
  }
  s.in_radius_ = lo;
  return s;
}

ConvexShape ConvexShape::regular(int k) {
  if (k < 3) throw PreconditionError("regular polygon needs k >= 3");
  std::vector<Vec2> v;
  const double start = -kPi / 2 - kPi / k;
  for (int j = 0; j < k; ++j) v.push_back(from_angle(start + 2 * kPi * j / k));
  return from_vertices(std::move(v));
}

ConvexShape ConvexShape::square() {
  return from_vertices({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}});
}

bool ConvexShape::self_consistent() const {
  const std::size_t k = vertices_.size();
  if (facets_.size() != k) return false;
  const double tol = 1e-9 * std::max(1.0, diameter_);
  for (std::size_t i = 0; i < k; ++i) {
    if (!(facets_[i].offset > 0)) return false;
    // Vertex form inside facet form.
    for (Vec2 p : vertices_)
      if (dot(facets_[i].normal, p) > facets_[i].offset + tol) return false;
    // Both endpoints of edge i lie on facet i.
    for (Vec2 p : {vertices_[i], vertices_[(i + 1) % k]})
      if (std::abs(dot(facets_[i].normal, p) - facets_[i].offset) > tol) return false;
  }
  return true;
}

ShapePtr make_shape(ConvexShape shape) {
  return std::make_shared<const ConvexShape>(std::move(shape));
}

double convex_distance(const ConvexShape& C, Vec2 t, Vec2 p) {
  double best = 0;
  for (const Facet& f : C.facets()) best = std::max(best, dot(f.normal, p - t) / f.offset);
  return best;
}

// ---------------------------------------------------------------- Homothet

double Homothet::facet_slack(std::size_t i, Vec2 p) const {
  const Facet& f = shape->facets()[i];
  return dot(f.normal, p - t) - scale * f.offset;
}

bool Homothet::contains(Vec2 p, double tol) const {
  const auto& fs = shape->facets();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (facet_slack(i, p) > tol * (1 + scale * fs[i].offset)) return false;
  }
  return true;
}

bool Homothet::interior_contains(Vec2 p, double tol) const {
  const auto& fs = shape->facets();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (facet_slack(i, p) >= -tol * (1 + scale * fs[i].offset)) return false;
  }
  return true;
}

double Homothet::gauge(Vec2 p) const {
  double d = convex_distance(*shape, t, p);
  if (scale > 0) return d / scale;
  return d == 0 ? 0 : kInf;
}

std::vector<Vec2> Homothet::vertices() const {
  std::vector<Vec2> out;
  out.reserve(shape->size());
  for (Vec2 v : shape->vertices()) out.push_back(t + v * scale);
  return out;
}

std::vector<int> Homothet::facets_through(Vec2 p, double tol) const {
  std::vector<int> out;
  const auto& fs = shape->facets();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (std::abs(facet_slack(i, p)) <= tol * (1 + scale * fs[i].offset))
      out.push_back(static_cast<int>(i));
  }
  return out;
}

Homothet Homothet::scaled_about(Vec2 center, double beta) const {
  return {shape, (t - center) * beta + center, scale * beta};
}

Homothet Homothet::placed(ShapePtr shape) {
  Vec2 c = shape->centroid();
  return {std::move(shape), c, 1.0};
}

// -------------------------------------------------------- Cone / Trapezoid

Cone Cone::between(Vec2 apex, Vec2 lo, Vec2 hi) {
  Cone c{apex, normalized(lo), normalized(hi), 0};
  c.angle = std::atan2(cross(c.dir_lo, c.dir_hi), dot(c.dir_lo, c.dir_hi));
  if (!(c.angle > 0)) throw PreconditionError("cone angle must lie in (0, pi)");
  return c;
}

bool Cone::contains(Vec2 p, double tol) const {
  Vec2 d = p - apex;
  double len = norm(d);
  if (len == 0) return true;
  return cross(dir_lo, d) >= -tol * len && cross(d, dir_hi) >= -tol * len;
}

double Trapezoid::diameter() const {
  double best = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) best = std::max(best, dist(v[i], v[j]));
  return best;
}

double Trapezoid::leg_length(int leg) const {
  return leg == 0 ? dist(v[1], v[2]) : dist(v[3], v[0]);
}

double Trapezoid::narrowness() const {
  return std::max(leg_length(0), leg_length(1)) / diameter();
}

bool Trapezoid::bases_parallel(double tol) const {
  Vec2 a = v[1] - v[0], b = v[3] - v[2];
  return std::abs(cross(a, b)) <= tol * std::max(1e-300, norm(a) * norm(b));
}

bool Trapezoid::on_leg(int leg, Vec2 p, double tol) const {
  Vec2 a = leg == 0 ? v[1] : v[3];
  Vec2 b = leg == 0 ? v[2] : v[0];
  return segment_distance(p, a, b) <= tol * std::max(1.0, diameter());
}

ConvexShape Trapezoid::shape() const {
  return ConvexShape::from_vertices({v.begin(), v.end()});
}

// -------------------------------------------------------------------- Rect

bool Rect::contains(Vec2 p, double tol) const {
  double s = tol * (1 + std::max(std::abs(width()), std::abs(height())));
  return p.x >= x0 - s && p.x <= x1 + s && p.y >= y0 - s && p.y <= y1 + s;
}

Rect Rect::scaled(double factor) const {
  Vec2 c = center();
  double hw = width() / 2 * factor, hh = height() / 2 * factor;
  return {c.x - hw, c.x + hw, c.y - hh, c.y + hh};
}

// ------------------------------------------------------ homothet operations

Homothet smallest_enclosing_homothet(ShapePtr C, std::span<const Vec2> S) {
  if (S.empty()) throw PreconditionError("empty input");
  const auto& fs = C->facets();
  const std::size_t k = fs.size();

  double lam_hi = 0;
  for (Vec2 p : S) lam_hi = std::max(lam_hi, convex_distance(*C, S[0], p));
  if (lam_hi == 0) return {C, S[0], 0};

  // t is feasible for lambda iff a_i . t >= h_i - lambda b_i for every facet.
  std::vector<double> h(k, -kInf);
  for (std::size_t i = 0; i < k; ++i)
    for (Vec2 p : S) h[i] = std::max(h[i], dot(fs[i].normal, p));

  std::vector<Vec2> normals(k);
  std::vector<double> offsets(k);
  for (std::size_t i = 0; i < k; ++i) normals[i] = -fs[i].normal;
  double reach = 0;
  for (Vec2 v : C->vertices()) reach = std::max(reach, norm(v));
  double pad = 2 * lam_hi * reach + 1;
  Vec2 lo = S[0], hi = S[0];
  for (Vec2 p : S) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  }
  lo = lo - Vec2{pad, pad};
  hi = hi + Vec2{pad, pad};

  auto feasible = [&](double lam) {
    for (std::size_t i = 0; i < k; ++i) offsets[i] = lam * fs[i].offset - h[i];
    return halfplane_polygon(normals, offsets, lo, hi);
  };

  double a = 0, b = lam_hi;
  for (int it = 0; it < 300 && b - a > 4e-16 * b; ++it) {
    double mid = (a + b) / 2;
    if (feasible(mid).empty())
      a = mid;
    else
      b = mid;
  }
  std::vector<Vec2> poly = feasible(b);
  if (poly.empty()) poly = feasible(lam_hi);
  // Midpoint of the two farthest vertices: the centre of the optimal set.
  Vec2 best_a = poly[0], best_b = poly[0];
  double far = -1;
  for (std::size_t i = 0; i < poly.size(); ++i)
    for (std::size_t j = i; j < poly.size(); ++j) {
      double d = dist(poly[i], poly[j]);
      if (d > far) far = d, best_a = poly[i], best_b = poly[j];
    }
  return {C, (best_a + best_b) / 2, b};
}

Homothet shrink_to_two_boundary(const Homothet& H, Vec2 p, Vec2 q) {
  if (dist(p, q) <= kTol * (1 + H.diameter())) throw PreconditionError("coincident points");
  if (!H.contains(p) || !H.contains(q))
    throw PreconditionError("shrink_to_two_boundary: point outside the homothet");
  Homothet h1 = H.scaled_about(p, shrink_factor(H, p, q));
  return h1.scaled_about(q, shrink_factor(h1, q, p));
}

TriangleShrink shrink_triangle_vertex_edge(const Homothet& T, Vec2 p, Vec2 q) {
  if (T.shape->size() != 3) throw PreconditionError("triangle shape required");
  Homothet cur = shrink_to_two_boundary(T, p, q);
  const double tol = 1e-8;

  // Vertex m lies on facets m-1 and m; its opposite edge is facet m+1.
  auto opposite = [](const std::vector<int>& fv) {
    int a = fv[0], b = fv[1];
    if ((a + 1) % 3 == b) return (b + 1) % 3;
    return (a + 1) % 3;
  };
  auto has = [](const std::vector<int>& f, int i) {
    return std::find(f.begin(), f.end(), i) != f.end();
  };

  for (int step = 0; step < 8; ++step) {
    std::vector<int> fp = cur.facets_through(p, tol);
    std::vector<int> fq = cur.facets_through(q, tol);
    if (fp.size() >= 2 && has(fq, opposite(fp))) return {cur, true};
    if (fq.size() >= 2 && has(fp, opposite(fq))) return {cur, false};

    if (fp.size() == 1 && fq.size() == 1 && fp[0] != fq[0]) {
      // Push the free edge towards the vertex shared by the two occupied edges.
      int e3 = 3 - fp[0] - fq[0];
      int shared = (e3 + 2) % 3;  // vertex opposite facet e3
      Vec2 apex = cur.vertex(static_cast<std::size_t>(shared));
      const Facet& f = cur.shape->facets()[e3];
      double D = cur.scale * f.offset - dot(f.normal, apex - cur.t);
      double beta = std::max(dot(f.normal, p - apex), dot(f.normal, q - apex)) / D;
      cur = cur.scaled_about(apex, std::clamp(beta, 0.0, 1.0));
      continue;
    }
    // One point is more constrained: shrink about it until the other point
    // reaches a new edge.
    bool about_p = fp.size() >= fq.size();
    Vec2 c = about_p ? p : q, o = about_p ? q : p;
    double beta = shrink_factor(cur, c, o);
    if (beta >= 1 - 1e-15) break;
    cur = cur.scaled_about(c, beta);
  }
  throw std::logic_error("shrink_triangle_vertex_edge did not converge");
}

bool erode_contains(const Homothet& body, double delta, Vec2 p) {
  if (!(delta > 0 && delta <= 1)) throw PreconditionError("delta must lie in (0,1]");
  double depth = kInf;
  const auto& fs = body.shape->facets();
  for (std::size_t i = 0; i < fs.size(); ++i) depth = std::min(depth, -body.facet_slack(i, p));
  return depth >= delta * body.diameter();
}

// --------------------------------------------------------- polygon analysis

bool PolygonAnalysis::is_nice(int t, double c_nice) const {
  if (min_outer_angle < 2 * kPi / t - 1e-12) return false;
  if (!sensitivity_defined) return true;
  return max_edge <= c_nice * sensitivity * (1 + 1e-12);
}

namespace {

struct Circle {
  Vec2 c;
  double r;
};

bool covers(const Circle& c, std::span<const Vec2> pts) {
  for (Vec2 p : pts)
    if (dist(p, c.c) > c.r * (1 + 1e-12) + 1e-15) return false;
  return true;
}

}  // namespace

PolygonAnalysis analyze_polygon(const ConvexShape& C) {
  const auto& v = C.vertices();
  const std::size_t k = v.size();
  PolygonAnalysis out;
  for (std::size_t i = 0; i < k; ++i) {
    out.max_edge = std::max(out.max_edge, dist(v[i], v[(i + 1) % k]));
    for (std::size_t j = i + 2; j < k; ++j) {
      if (i == 0 && j == k - 1) continue;
      out.sensitivity_defined = true;
      out.sensitivity = std::min(
          out.sensitivity, segment_segment_distance(v[i], v[(i + 1) % k], v[j], v[(j + 1) % k]));
    }
  }
  out.min_outer_angle = kInf;
  for (double a : interior_angles(v)) out.min_outer_angle = std::min(out.min_outer_angle, kPi - a);
  out.in_radius = C.in_radius();

  // Smallest enclosing circle of the vertices: it is spanned by two or three
  // of them.
  Circle best{{}, kInf};
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      Circle c{(v[i] + v[j]) / 2, dist(v[i], v[j]) / 2};
      if (c.r < best.r && covers(c, v)) best = c;
      for (std::size_t l = j + 1; l < k; ++l) {
        Vec2 a = v[i], b = v[j], d = v[l];
        double den = 2 * orient(a, b, d);
        if (den == 0) continue;
        Vec2 ba = b - a, da = d - a;
        Vec2 cc = a + Vec2{(da.y * dot(ba, ba) - ba.y * dot(da, da)) / den,
                           (ba.x * dot(da, da) - da.x * dot(ba, ba)) / den};
        Circle c3{cc, dist(cc, a)};
        if (c3.r < best.r && covers(c3, v)) best = c3;
      }
    }
  out.out_radius = best.r;
  out.aspect_ratio = out.out_radius / out.in_radius;
  return out;
}

}  // namespace spanloc
