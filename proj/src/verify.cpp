#include "spanloc/verify.hpp"

#include <algorithm>
#include <queue>

#include "spanloc/cdelaunay.hpp"
#include "spanloc/parallel.hpp"

namespace spanloc {

void DilationReport::absorb(const DilationReport& other) {
  if (other.max_dilation > max_dilation) {
    max_dilation = other.max_dilation;
    witness = other.witness;
  }
  regions_tested += other.regions_tested;
  pairs_tested += other.pairs_tested;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

namespace {

std::vector<double> dijkstra(const SpannerGraph& G, const std::vector<char>& allowed, int src) {
  std::vector<double> d(static_cast<std::size_t>(G.n()), kInf);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  d[src] = 0;
  pq.push({0, src});
  while (!pq.empty()) {
    auto [du, u] = pq.top();
    pq.pop();
    if (du > d[u]) continue;
    for (const auto& a : G.neighbors(u)) {
      if (!allowed[a.to]) continue;
      double nd = du + a.w;
      if (nd < d[a.to]) {
        d[a.to] = nd;
        pq.push({nd, a.to});
      }
    }
  }
  return d;
}

std::vector<char> mask_of(int n, const std::vector<int>& ids) {
  std::vector<char> m(static_cast<std::size_t>(n), 0);
  for (int i : ids) m[i] = 1;
  return m;
}

}  // namespace

DilationReport dilation(const SpannerGraph& G, const PointSet& P, const std::vector<int>& allowed,
                        const std::vector<int>& queries, double threshold) {
  DilationReport rep;
  std::vector<char> mask = mask_of(G.n(), allowed);
  for (std::size_t s = 0; s < queries.size(); ++s) {
    int u = queries[s];
    std::vector<double> d = dijkstra(G, mask, u);
    for (std::size_t r = s + 1; r < queries.size(); ++r) {
      int v = queries[r];
      double ratio = d[v] / dist(P[u], P[v]);
      ++rep.pairs_tested;
      if (ratio > rep.max_dilation) {
        rep.max_dilation = ratio;
        rep.witness = {std::min(u, v), std::max(u, v)};
      }
      if (ratio > threshold || std::isinf(ratio)) rep.failures.push_back({std::nullopt, u, v, ratio});
    }
  }
  return rep;
}

DilationReport dilation(const SpannerGraph& G, const PointSet& P, const std::vector<int>& ids,
                        double threshold) {
  return dilation(G, P, ids, ids, threshold);
}

// ------------------------------------------------------------- sampling

namespace {

struct Bounds {
  Vec2 lo, hi;
};

Bounds bounds_of(const PointSet& P) {
  Bounds b{{kInf, kInf}, {-kInf, -kInf}};
  for (Vec2 p : P.coords()) {
    b.lo = {std::min(b.lo.x, p.x), std::min(b.lo.y, p.y)};
    b.hi = {std::max(b.hi.x, p.x), std::max(b.hi.y, p.y)};
  }
  Vec2 pad = (b.hi - b.lo) * 0.1;
  b.lo = b.lo - pad;
  b.hi = b.hi + pad;
  return b;
}

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

std::vector<Vec2> pick(const PointSet& P, std::mt19937_64& rng, int count) {
  std::vector<int> idx;
  std::uniform_int_distribution<int> ui(0, static_cast<int>(P.size()) - 1);
  while (static_cast<int>(idx.size()) < count) {
    int i = ui(rng);
    if (std::find(idx.begin(), idx.end(), i) == idx.end()) idx.push_back(i);
  }
  std::vector<Vec2> out;
  for (int i : idx) out.push_back(P[i]);
  return out;
}

constexpr double kInflate[] = {1.0, 1.1, 2.0};

}  // namespace

std::vector<Region> sample_homothets(const PointSet& P, ShapePtr C, int trials, std::uint64_t seed,
                                     SampleStrategy strategy) {
  std::vector<Region> out;
  if (trials <= 0 || P.empty()) return out;
  std::mt19937_64 rng(seed);
  Bounds b = bounds_of(P);
  double dmax = std::max(P.diameter(), 1.0);
  double dmin = P.size() >= 2 ? P.closest_pair() : dmax;
  std::uniform_real_distribution<double> ux(b.lo.x, b.hi.x), uy(b.lo.y, b.hi.y);
  for (int i = 0; i < trials; ++i) {
    bool critical = P.size() >= 2 && (strategy == SampleStrategy::Critical ||
                                      (strategy == SampleStrategy::Mixed && i % 2 == 1));
    if (critical) {
      int count = P.size() >= 3 && (i / 2) % 2 == 1 ? 3 : 2;
      std::vector<Vec2> s = pick(P, rng, count);
      Homothet h = smallest_enclosing_homothet(C, s);
      double f = kInflate[(i / 4) % 3];
      out.push_back(Homothet{C, h.t, h.scale * f});
    } else {
      Vec2 t{ux(rng), uy(rng)};
      double d = log_uniform(rng, dmin, 2 * dmax);
      out.push_back(Homothet{C, t, d / C->diameter()});
    }
  }
  return out;
}

std::vector<Region> sample_rects(const PointSet& P, int trials, std::uint64_t seed,
                                 SampleStrategy strategy) {
  std::vector<Region> out;
  if (trials <= 0 || P.empty()) return out;
  std::mt19937_64 rng(seed);
  Bounds b = bounds_of(P);
  double dmax = std::max(P.diameter(), 1.0);
  double dmin = P.size() >= 2 ? P.closest_pair() : dmax;
  std::uniform_real_distribution<double> ux(b.lo.x, b.hi.x), uy(b.lo.y, b.hi.y);
  for (int i = 0; i < trials; ++i) {
    bool critical = P.size() >= 2 && (strategy == SampleStrategy::Critical ||
                                      (strategy == SampleStrategy::Mixed && i % 2 == 1));
    if (critical) {
      int count = P.size() >= 3 && (i / 2) % 2 == 1 ? 3 : 2;
      Rect r{kInf, -kInf, kInf, -kInf};
      for (Vec2 p : pick(P, rng, count)) {
        r.x0 = std::min(r.x0, p.x), r.x1 = std::max(r.x1, p.x);
        r.y0 = std::min(r.y0, p.y), r.y1 = std::max(r.y1, p.y);
      }
      out.push_back(r.scaled(kInflate[(i / 4) % 3]));
    } else {
      Vec2 c{ux(rng), uy(rng)};
      double w = log_uniform(rng, dmin, 2 * dmax), h = log_uniform(rng, dmin, 2 * dmax);
      out.push_back(Rect{c.x - w / 2, c.x + w / 2, c.y - h / 2, c.y + h / 2});
    }
  }
  return out;
}

std::vector<Region> sample_disks(const PointSet& P, int trials, std::uint64_t seed,
                                 SampleStrategy strategy) {
  std::vector<Region> out;
  if (trials <= 0 || P.empty()) return out;
  std::mt19937_64 rng(seed);
  Bounds b = bounds_of(P);
  double dmax = std::max(P.diameter(), 1.0);
  double dmin = P.size() >= 2 ? P.closest_pair() : dmax;
  std::uniform_real_distribution<double> ux(b.lo.x, b.hi.x), uy(b.lo.y, b.hi.y);
  for (int i = 0; i < trials; ++i) {
    bool critical = P.size() >= 2 && (strategy == SampleStrategy::Critical ||
                                      (strategy == SampleStrategy::Mixed && i % 2 == 1));
    if (critical) {
      int count = P.size() >= 3 && (i / 2) % 2 == 1 ? 3 : 2;
      std::vector<Vec2> s = pick(P, rng, count);
      Disk d{(s[0] + s[1]) / 2, dist(s[0], s[1]) / 2};
      if (count == 3) {
        // circumcircle, unless the triangle is close to degenerate
        Vec2 a = s[1] - s[0], c = s[2] - s[0];
        double den = 2 * cross(a, c);
        if (std::abs(den) > 1e-12 * dot(a, a) * (1 + dot(c, c))) {
          Vec2 o{(c.y * dot(a, a) - a.y * dot(c, c)) / den, (a.x * dot(c, c) - c.x * dot(a, a)) / den};
          d = Disk{s[0] + o, norm(o)};
        }
      }
      d.r *= kInflate[(i / 4) % 3];
      out.push_back(d);
    } else {
      out.push_back(Disk{{ux(rng), uy(rng)}, log_uniform(rng, dmin, 2 * dmax) / 2});
    }
  }
  return out;
}

std::vector<Homothet> sample_convex_bodies(const PointSet& P, int trials, std::uint64_t seed) {
  std::vector<Homothet> out;
  if (trials <= 0 || P.empty()) return out;
  std::mt19937_64 rng(seed);
  Bounds b = bounds_of(P);
  double dmax = std::max(P.diameter(), 1.0);
  std::uniform_real_distribution<double> ux(b.lo.x, b.hi.x), uy(b.lo.y, b.hi.y), ua(0, 2 * kPi),
      u01(0, 1);
  std::uniform_int_distribution<int> uk(3, 10);
  while (static_cast<int>(out.size()) < trials) {
    Vec2 c{ux(rng), uy(rng)};
    double r = log_uniform(rng, dmax / 8, dmax);
    // Alternate thin random hulls with fat, nearly regular polygons whose
    // eroded copies still hold points.
    bool fat = out.size() % 2 == 0;
    double stretch = fat ? 0.85 + 0.15 * u01(rng) : 0.3 + 0.7 * u01(rng), rot = ua(rng);
    std::vector<Vec2> pts;
    int k = fat ? 6 + uk(rng) : uk(rng);
    for (int j = 0; j < k; ++j) {
      Vec2 d = fat ? from_angle(2 * kPi * (j + 0.4 * u01(rng)) / k) * (r * (0.9 + 0.1 * u01(rng)))
                   : from_angle(ua(rng)) * (r * std::sqrt(u01(rng)));
      d.y *= stretch;
      Vec2 e{d.x * std::cos(rot) - d.y * std::sin(rot), d.x * std::sin(rot) + d.y * std::cos(rot)};
      pts.push_back(c + e);
    }
    std::vector<Vec2> hull = convex_hull(pts);
    if (hull.size() < 3) continue;
    try {
      out.push_back(Homothet::placed(make_shape(ConvexShape::from_vertices(hull))));
    } catch (const PreconditionError&) {
      continue;
    }
  }
  return out;
}

// ---------------------------------------------------------------- checks

DilationReport check_local_spanner(const SpannerGraph& G, const PointSet& P,
                                   const std::vector<Region>& regions, double eps) {
  std::vector<DilationReport> parts(regions.size());
  parallel_for(regions.size(), [&](std::size_t i) {
    InducedGraph sub = restricted(G, P, regions[i]);
    parts[i] = dilation(sub.graph, P, sub.vertices, 1 + eps + 1e-9);
    for (auto& f : parts[i].failures) f.region = regions[i];
    parts[i].regions_tested = 1;
  });
  DilationReport rep;
  for (const auto& p : parts) rep.absorb(p);
  return rep;
}

DilationReport check_local_spanner(const SpannerGraph& G, const PointSet& P, ShapePtr C, double eps,
                                   int trials, std::uint64_t seed) {
  return check_local_spanner(G, P, sample_homothets(P, std::move(C), trials, seed), eps);
}

DilationReport check_weak_rect_spanner(const SpannerGraph& G, const PointSet& P,
                                       const std::vector<Region>& rects, double eps, double delta) {
  std::vector<DilationReport> parts(rects.size());
  parallel_for(rects.size(), [&](std::size_t i) {
    const Rect& r = std::get<Rect>(rects[i]);
    InducedGraph sub = restricted(G, P, r);
    Rect inner = r.scaled(1 - delta);
    std::vector<int> queries;
    for (int v : sub.vertices)
      if (inner.contains(P[v], 0)) queries.push_back(v);
    parts[i] = dilation(sub.graph, P, sub.vertices, queries, 1 + eps + 1e-9);
    for (auto& f : parts[i].failures) f.region = rects[i];
    parts[i].regions_tested = 1;
  });
  DilationReport rep;
  for (const auto& p : parts) rep.absorb(p);
  return rep;
}

DilationReport check_weak_convex_spanner(const SpannerGraph& G, const PointSet& P,
                                         const std::vector<Homothet>& bodies, double eps,
                                         double delta) {
  std::vector<DilationReport> parts(bodies.size());
  parallel_for(bodies.size(), [&](std::size_t i) {
    InducedGraph sub = restricted(G, P, bodies[i]);
    std::vector<int> queries;
    for (int v : sub.vertices)
      if (erode_contains(bodies[i], delta, P[v])) queries.push_back(v);
    parts[i] = dilation(sub.graph, P, sub.vertices, queries, 1 + eps + 1e-9);
    for (auto& f : parts[i].failures) f.region = bodies[i];
    parts[i].regions_tested = 1;
  });
  DilationReport rep;
  for (const auto& p : parts) rep.absorb(p);
  return rep;
}

DilationReport check_fault_tolerance(const SpannerGraph& G, const PointSet& P,
                                     const std::vector<Homothet>& faults, double eps) {
  std::vector<DilationReport> parts(faults.size());
  parallel_for(faults.size(), [&](std::size_t f) {
    const Region D = faults[f];
    InducedGraph rest = minus(G, P, D);
    SpannerGraph safe(G.n());
    const auto& vs = rest.vertices;
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (!segment_hits_interior(D, P[vs[i]], P[vs[j]])) safe.add_edge(P, vs[i], vs[j]);
    std::vector<char> mask = mask_of(G.n(), vs);
    DilationReport& rep = parts[f];
    rep.regions_tested = 1;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      std::vector<double> dg = dijkstra(rest.graph, mask, vs[i]);
      std::vector<double> ds = dijkstra(safe, mask, vs[i]);
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        int v = vs[j];
        if (std::isinf(ds[v])) continue;
        ++rep.pairs_tested;
        double ratio = dg[v] / ds[v];
        if (ratio > rep.max_dilation) rep.max_dilation = ratio, rep.witness = {vs[i], v};
        if (!(dg[v] <= (1 + eps) * ds[v] + 1e-9 * ds[v])) rep.failures.push_back({D, vs[i], v, ratio});
      }
    }
  });
  DilationReport rep;
  for (const auto& p : parts) rep.absorb(p);
  return rep;
}

ConnectivityReport check_restricted_connectivity(ShapePtr C, const PointSet& P, int trials,
                                                 std::uint64_t seed) {
  ConnectivityReport rep;
  rep.trials = trials;
  DelaunayResult dt = c_delaunay(C, P);
  for (const Region& R : sample_homothets(P, C, trials, seed)) {
    InducedGraph sub = restricted(dt.graph, P, R);
    if (sub.vertices.empty()) continue;
    ++rep.checked;
    std::vector<char> seen(P.size(), 0);
    std::vector<int> stack{sub.vertices[0]};
    seen[sub.vertices[0]] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const auto& a : sub.graph.neighbors(u))
        if (!seen[a.to]) seen[a.to] = 1, ++reached, stack.push_back(a.to);
    }
    if (reached != sub.vertices.size()) rep.failures.push_back(std::get<Homothet>(R));
  }
  return rep;
}

// ------------------------------------------------------------ generators

DiskLowerBound gen_lower_bound_disk(int n, double phi) {
  if (n < 2) throw PreconditionError("n must be >= 2");
  if (!(phi >= 1)) throw PreconditionError("spread must be >= 1");
  DiskLowerBound out;
  out.n = n;
  out.M = 1 + static_cast<int>(std::ceil(std::log2(phi)));
  const int M = out.M;
  std::vector<Vec2> a, b;
  for (int i = 1; i <= n; ++i) a.push_back({-static_cast<double>(i), 0});
  b.push_back({n * std::ldexp(1.0, M), -1});

  // Disk through a (on the axis) and z (below it) centred on a's vertical:
  // centre (a.x, -R) with R = ((z.x - a.x)^2 + z.y^2) / (2 |z.y|).
  auto radius = [](Vec2 a, Vec2 z) { return ((z.x - a.x) * (z.x - a.x) + z.y * z.y) / (2 * -z.y); };
  for (int j = 2; j <= M; ++j) {
    double xj = n * std::ldexp(1.0, M - j + 1);
    double yj = -kInf;
    for (const Vec2& bk : b)
      for (const Vec2& ai : a) {
        double R = radius(ai, bk), dx = xj - ai.x;
        if (dx > R) continue;
        // Top of the disk at x = xj, computed without cancellation.
        double top = -dx * dx / (R + std::sqrt(R * R - dx * dx));
        yj = std::max(yj, top);
      }
    if (!std::isfinite(yj)) {
      out.failure = "no disk meets the line x = x_j";
      return out;
    }
    b.push_back({xj, 0.99 * yj});
  }
  std::vector<Vec2> coords = a;
  coords.insert(coords.end(), b.begin(), b.end());
  out.points = PointSet(coords);
  for (int i = 0; i < n; ++i)
    for (int j = 2; j <= M; ++j) out.forced.emplace_back(i, n + j - 1);

  out.certified = true;
  for (int i = 0; i < n; ++i)
    for (int j = 2; j <= M; ++j) {
      double R = radius(a[i], b[j - 1]);
      for (int k = 1; k <= M; ++k) {
        if (k > j && radius(a[i], b[k - 1]) < R) {
          out.certified = false;
          out.failure = "disk D(a_" + std::to_string(i + 1) + ", b_" + std::to_string(j) +
                        ") contains b_" + std::to_string(k);
        }
        if (k < j)
          out.min_detour = std::min(out.min_detour, dist(a[i], b[k - 1]) / dist(a[i], b[j - 1]));
      }
    }
  if (out.certified && out.min_detour < 4.0 / 3.0) {
    out.certified = false;
    out.failure = "detour ratio below 4/3";
  }
  return out;
}

TriangleLowerBound gen_lower_bound_triangle(int n, double phi) {
  if (n < 1) throw PreconditionError("n must be >= 1");
  if (!(phi >= n)) throw PreconditionError("spread must be >= n");
  TriangleLowerBound out;
  out.n = n;
  out.h = std::max(1, static_cast<int>(std::ceil(std::log2(phi))));
  const int h = out.h;
  const double L = 8 * phi * h;
  out.triangle = make_shape(ConvexShape::from_vertices({{0, 0}, {0, 1}, {L, 0}}));
  std::vector<Vec2> coords;
  for (int i = 1; i <= h; ++i) coords.push_back({std::ldexp(1.0, i + 1), 1 - static_cast<double>(i) / h});
  for (int j = 1; j <= n; ++j)
    coords.push_back({static_cast<double>(j) / n - 1, -static_cast<double>(j) / n});
  out.points = PointSet(coords);
  const Vec2 centroid = out.triangle->centroid();

  out.certified = true;
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < n; ++j) {
      Vec2 bi = coords[i], cj = coords[h + j];
      double lambda = (bi.x - cj.x) / L + (bi.y - cj.y);
      Homothet tri{out.triangle, cj + centroid * lambda, lambda};
      out.forced.emplace_back(i, h + j);
      out.witnesses.push_back(tri);
      for (int z = 0; z < static_cast<int>(coords.size()); ++z) {
        bool expected = z == h + j || (z < h && z >= i);
        if (tri.contains(coords[z]) != expected) {
          out.certified = false;
          out.failure = "triangle for (b_" + std::to_string(i + 1) + ", c_" + std::to_string(j + 1) +
                        ") has the wrong point set";
        }
      }
      for (int k = i + 1; k < h; ++k) {
        double detour = (dist(cj, coords[k]) + dist(coords[k], bi)) / dist(cj, bi);
        out.min_detour = std::min(out.min_detour, detour);
      }
    }
  if (out.certified && out.min_detour < 12.0 / 7.0) {
    out.certified = false;
    out.failure = "detour ratio below 12/7";
  }
  return out;
}

Distribution parse_distribution(const std::string& name) {
  if (name == "uniform") return Distribution::Uniform;
  if (name == "clustered") return Distribution::Clustered;
  if (name == "grid-perturbed" || name == "grid") return Distribution::GridPerturbed;
  throw PreconditionError("unknown distribution: " + name);
}

PointSet gen_random(int n, Distribution distribution, std::uint64_t seed) {
  if (n < 1) throw PreconditionError("n must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u01(0, 1);
  std::vector<Vec2> pts;
  switch (distribution) {
    case Distribution::Uniform:
      for (int i = 0; i < n; ++i) pts.push_back({u01(rng), u01(rng)});
      break;
    case Distribution::Clustered: {
      int k = std::max(1, static_cast<int>(std::lround(std::sqrt(n) / 2)));
      std::vector<Vec2> centers;
      for (int c = 0; c < k; ++c) centers.push_back({u01(rng), u01(rng)});
      std::normal_distribution<double> g(0, 0.04);
      std::uniform_int_distribution<int> uc(0, k - 1);
      for (int i = 0; i < n; ++i) {
        Vec2 c = centers[uc(rng)];
        pts.push_back({c.x + g(rng), c.y + g(rng)});
      }
      break;
    }
    case Distribution::GridPerturbed: {
      int m = static_cast<int>(std::ceil(std::sqrt(n)));
      double s = 1.0 / m;
      std::uniform_real_distribution<double> jitter(-1e-3 * s, 1e-3 * s);
      for (int i = 0; i < n; ++i)
        pts.push_back({(i % m) * s + jitter(rng), (i / m) * s + jitter(rng)});
      break;
    }
  }
  return PointSet(std::move(pts));
}

}  // namespace spanloc
