#include "spanloc/cdelaunay.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "spanloc/parallel.hpp"

namespace spanloc {

namespace {

using Vec3 = std::array<double, 3>;

double dot3(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross3(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

struct Piece {
  double lo;
  double hi;
};

/// Removes the open interval (lo, hi) from a list of closed pieces.
void subtract(std::vector<Piece>& pieces, double lo, double hi) {
  if (!(lo < hi)) return;
  std::vector<Piece> out;
  for (const Piece& p : pieces) {
    if (hi <= p.lo || lo >= p.hi) {
      out.push_back(p);
      continue;
    }
    if (p.lo <= lo && lo > -kInf) out.push_back({p.lo, lo});
    if (hi <= p.hi && hi < kInf) out.push_back({hi, p.hi});
  }
  pieces.swap(out);
}

}  // namespace

DelaunaySolver::DelaunaySolver(ShapePtr shape, std::span<const Vec2> pts) : shape_(std::move(shape)) {
  Vec2 lo{kInf, kInf}, hi{-kInf, -kInf};
  for (Vec2 p : pts) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  }
  origin_ = pts.empty() ? Vec2{} : (lo + hi) / 2;
  for (Vec2 p : pts) pts_.push_back(p - origin_);
  scale_ = pts.size() < 2 ? 1.0 : std::max(dist(lo, hi), 1e-300);
}

std::optional<Homothet> DelaunaySolver::witness(int u, int v) const {
  const Vec2 p = pts_[u], q = pts_[v];
  const auto& fs = shape_->facets();
  const int k = static_cast<int>(fs.size());
  const double tol_valid = 1e-12 * scale_;
  const double tol_in = 1e-12 * scale_;
  const double tiny = 1e-10 * scale_;
  // Unbounded witnesses (half-planes and wedges) are represented at this scale.
  const double lam_max = 1e4 * scale_ / shape_->in_radius();

  std::vector<int> others;
  for (int r = 0; r < static_cast<int>(pts_.size()); ++r)
    if (r != u && r != v) others.push_back(r);
  Vec2 mid = (p + q) / 2;
  std::sort(others.begin(), others.end(), [&](int a, int b) {
    double da = dist(pts_[a], mid), db = dist(pts_[b], mid);
    return da < db || (da == db && a < b);
  });

  std::vector<Vec3> F(k);
  for (int l = 0; l < k; ++l) F[l] = {fs[l].normal.x, fs[l].normal.y, fs[l].offset};

  std::optional<Homothet> marginal;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      Vec3 n = cross3(F[i], F[j]);
      double nn = std::sqrt(dot3(n, n));
      if (nn < 1e-12) continue;
      for (double& c : n) c /= nn;
      double r1 = dot(fs[i].normal, p), r2 = dot(fs[j].normal, q);
      double g11 = dot3(F[i], F[i]), g12 = dot3(F[i], F[j]), g22 = dot3(F[j], F[j]);
      double det = g11 * g22 - g12 * g12;
      double c1 = (r1 * g22 - r2 * g12) / det, c2 = (r2 * g11 - r1 * g12) / det;
      Vec3 z0{c1 * F[i][0] + c2 * F[j][0], c1 * F[i][1] + c2 * F[j][1],
              c1 * F[i][2] + c2 * F[j][2]};

      // slack_l(x, s) = a_l . x - F_l . z0 - s F_l . n; <= 0 inside.
      double lo = -kInf, hi = kInf;
      auto keep_below = [&](double c, double d, double tol) {
        // c - s d <= tol
        if (d > 0)
          lo = std::max(lo, (c - tol) / d);
        else if (d < 0)
          hi = std::min(hi, (c - tol) / d);
        else if (c > tol)
          hi = -kInf;
      };
      for (int l : {(i + k - 1) % k, (i + 1) % k})
        keep_below(dot(fs[l].normal, p) - dot3(F[l], z0), dot3(F[l], n), tol_valid);
      for (int l : {(j + k - 1) % k, (j + 1) % k})
        keep_below(dot(fs[l].normal, q) - dot3(F[l], z0), dot3(F[l], n), tol_valid);
      // 0 < lambda(s) = z0[2] + s n[2] <= lam_max
      keep_below(-z0[2], n[2], -tiny);
      keep_below(z0[2] - lam_max, -n[2], 0);
      if (!(lo <= hi) || lo == kInf || hi == -kInf) continue;

      std::vector<Piece> pieces{{lo, hi}};
      for (int r : others) {
        double ilo = -kInf, ihi = kInf;
        for (int l = 0; l < k && ilo < ihi; ++l) {
          double c = dot(fs[l].normal, pts_[r]) - dot3(F[l], z0);
          double d = dot3(F[l], n);
          // interior: c - s d < -tol_in
          if (d > 0)
            ilo = std::max(ilo, (c + tol_in) / d);
          else if (d < 0)
            ihi = std::min(ihi, (c + tol_in) / d);
          else if (c >= -tol_in)
            ihi = -kInf;
        }
        subtract(pieces, ilo, ihi);
        if (pieces.empty()) break;
      }
      if (pieces.empty()) continue;

      const Piece* best = &pieces[0];
      for (const Piece& pc : pieces)
        if (pc.hi - pc.lo > best->hi - best->lo) best = &pc;
      double s;
      if (std::isinf(best->lo) && std::isinf(best->hi))
        s = 0;
      else if (std::isinf(best->hi))
        s = best->lo + scale_;
      else if (std::isinf(best->lo))
        s = best->hi - scale_;
      else
        s = (best->lo + best->hi) / 2;
      Homothet h{shape_, Vec2{z0[0] + s * n[0], z0[1] + s * n[1]} + origin_, z0[2] + s * n[2]};
      if (best->hi - best->lo > tiny) return h;

      // An isolated witness: degenerate when two more points touch it.
      int touching = 0;
      for (int r : others) {
        Vec2 x = pts_[r] + origin_;
        double worst = -kInf;
        for (int l = 0; l < k; ++l) worst = std::max(worst, h.facet_slack(l, x));
        if (std::abs(worst) <= 1e-9 * scale_) ++touching;
      }
      if (touching >= 2)
        throw DegenerateError("degenerate configuration: four points on one homothet boundary; "
                              "perturb the input");
      marginal = h;
    }
  }
  return marginal;
}

DelaunayResult c_delaunay(ShapePtr C, const PointSet& P) {
  const int n = static_cast<int>(P.size());
  DelaunaySolver solver(C, P.coords());
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<std::optional<Homothet>> found(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t e) {
    found[e] = solver.witness(pairs[e].first, pairs[e].second);
  });
  DelaunayResult out{SpannerGraph(n), {}};
  for (std::size_t e = 0; e < pairs.size(); ++e) {
    if (!found[e]) continue;
    out.graph.add_edge(P, pairs[e].first, pairs[e].second);
    out.witnesses.push_back({pairs[e].first, pairs[e].second, *found[e]});
  }
  if (n >= 3 && static_cast<int>(out.graph.edge_count()) > 3 * n - 6)
    throw DegenerateError("Delaunay graph exceeds 3n-6 edges; perturb the input");
  return out;
}

std::vector<std::pair<int, int>> delaunay_cross_edges(ShapePtr C, const PointSet& P,
                                                      const std::vector<int>& left,
                                                      const std::vector<int>& right) {
  std::vector<Vec2> pts;
  for (int i : left) pts.push_back(P[i]);
  for (int i : right) pts.push_back(P[i]);
  DelaunaySolver solver(std::move(C), pts);
  const int nl = static_cast<int>(left.size());
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < nl; ++a)
    for (int b = 0; b < static_cast<int>(right.size()); ++b)
      if (solver.witness(a, nl + b)) out.emplace_back(left[a], right[b]);
  return out;
}

std::optional<Disk> disk_witness(std::span<const Vec2> pts, int u, int v) {
  const Vec2 p = pts[u], q = pts[v];
  const Vec2 m = (p + q) / 2;
  const double half = dist(p, q) / 2;
  if (half == 0) return std::nullopt;
  // centres m + s w, with w the unit normal of pq
  const Vec2 w = Vec2{-(q - p).y, (q - p).x} / (2 * half);
  double lo = -kInf, hi = kInf;
  for (int r = 0; r < static_cast<int>(pts.size()); ++r) {
    if (r == u || r == v) continue;
    Vec2 d = pts[r] - m;
    // r is interior iff a < b s
    double a = dot(d, d) - half * half, b = 2 * dot(w, d);
    if (b > 0)
      hi = std::min(hi, a / b);
    else if (b < 0)
      lo = std::max(lo, a / b);
    else if (a < 0)
      return std::nullopt;
    if (lo > hi + 1e-12 * (half + std::max(std::abs(lo), std::abs(hi)))) return std::nullopt;
  }
  double s;
  if (std::isinf(lo) && std::isinf(hi))
    s = 0;
  else if (std::isinf(hi))
    s = lo + half;
  else if (std::isinf(lo))
    s = hi - half;
  else
    s = (lo + hi) / 2;
  Vec2 c = m + w * s;
  return Disk{c, dist(c, p)};
}

SpannerGraph disk_delaunay(const PointSet& P) {
  const int n = static_cast<int>(P.size());
  std::vector<char> edge(static_cast<std::size_t>(n) * n, 0);
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
    for (int j = static_cast<int>(i) + 1; j < n; ++j)
      edge[i * n + j] = disk_witness(P.coords(), static_cast<int>(i), j).has_value();
  });
  SpannerGraph G(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (edge[static_cast<std::size_t>(i) * n + j]) G.add_edge(P, i, j);
  return G;
}

std::vector<std::pair<int, int>> disk_delaunay_cross_edges(const PointSet& P, const std::vector<int>& left,
                                                           const std::vector<int>& right) {
  std::vector<Vec2> pts;
  for (int i : left) pts.push_back(P[i]);
  for (int i : right) pts.push_back(P[i]);
  const int nl = static_cast<int>(left.size());
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < nl; ++a)
    for (int b = 0; b < static_cast<int>(right.size()); ++b)
      if (disk_witness(pts, a, nl + b)) out.emplace_back(left[a], right[b]);
  return out;
}

int interior_count(const Homothet& h, const PointSet& P, int u, int v) {
  int c = 0;
  for (int i = 0; i < static_cast<int>(P.size()); ++i)
    if (i != u && i != v && h.interior_contains(P[i])) ++c;
  return c;
}

}  // namespace spanloc
