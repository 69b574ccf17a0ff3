#include "spanloc/pair_decomp.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace spanloc {

std::string to_string(CertKind kind) {
  switch (kind) {
    case CertKind::Well: return "well";
    case CertKind::Semi: return "semi";
    case CertKind::Angular: return "angular";
    case CertKind::Quadrant: return "quadrant";
  }
  return "unknown";
}

std::size_t PairDecomposition::weight() const {
  std::size_t w = 0;
  for (const Pair& p : pairs) w += p.left.size() + p.right.size();
  return w;
}

namespace {

std::vector<Vec2> gather(const PointSet& P, const std::vector<int>& ids) {
  std::vector<Vec2> out;
  out.reserve(ids.size());
  for (int i : ids) out.push_back(P[i]);
  return out;
}

struct Box {
  Vec2 lo{kInf, kInf};
  Vec2 hi{-kInf, -kInf};

  void add(Vec2 p) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  }
  Vec2 center() const { return (lo + hi) / 2; }
  double radius() const { return dist(lo, hi) / 2; }
};

Box box_of(const PointSet& P, const std::vector<int>& ids) {
  Box b;
  for (int i : ids) b.add(P[i]);
  return b;
}

struct Node {
  std::vector<int> ids;
  Box box;
  int child[2] = {-1, -1};
};

/// Fair split tree: every internal node halves the longest side of the
/// bounding box of its points.
std::vector<Node> split_tree(const PointSet& P) {
  std::vector<Node> nodes;
  std::vector<int> all(P.size());
  std::iota(all.begin(), all.end(), 0);
  nodes.push_back({all, box_of(P, all), {-1, -1}});
  for (std::size_t cur = 0; cur < nodes.size(); ++cur) {
    if (nodes[cur].ids.size() < 2) continue;
    Box b = nodes[cur].box;
    bool along_x = b.hi.x - b.lo.x >= b.hi.y - b.lo.y;
    double cut = along_x ? (b.lo.x + b.hi.x) / 2 : (b.lo.y + b.hi.y) / 2;
    std::vector<int> lo, hi;
    for (int i : nodes[cur].ids) ((along_x ? P[i].x : P[i].y) <= cut ? lo : hi).push_back(i);
    if (lo.empty() || hi.empty()) {
      // Only possible through rounding of the midpoint; split by rank instead.
      std::vector<int> ids = nodes[cur].ids;
      std::sort(ids.begin(), ids.end(), [&](int a, int c) {
        return along_x ? P[a].x < P[c].x : P[a].y < P[c].y;
      });
      lo.assign(ids.begin(), ids.begin() + ids.size() / 2);
      hi.assign(ids.begin() + ids.size() / 2, ids.end());
    }
    int l = static_cast<int>(nodes.size());
    nodes.push_back({lo, box_of(P, lo), {-1, -1}});
    nodes.push_back({hi, box_of(P, hi), {-1, -1}});
    nodes[cur].child[0] = l;
    nodes[cur].child[1] = l + 1;
  }
  return nodes;
}

void finalize(PairDecomposition& D, std::size_t n) {
  for (Pair& p : D.pairs) {
    std::sort(p.left.begin(), p.left.end());
    std::sort(p.right.begin(), p.right.end());
    if (p.right.front() < p.left.front()) {
      std::swap(p.left, p.right);
      for (Line& l : p.wedge) l.normal = -l.normal;
    }
  }
  std::stable_sort(D.pairs.begin(), D.pairs.end(), [](const Pair& a, const Pair& b) {
    if (a.left.front() != b.left.front()) return a.left.front() < b.left.front();
    return a.right.front() < b.right.front();
  });
  D.participation.assign(n, 0);
  for (const Pair& p : D.pairs) {
    for (int i : p.left) ++D.participation[i];
    for (int i : p.right) ++D.participation[i];
  }
}

PairDecomposition tree_pairs(const PointSet& P, double sigma, CertKind kind) {
  if (P.size() < 2) throw PreconditionError("pair decomposition needs at least 2 points");
  if (!(sigma >= 1)) throw PreconditionError("separation sigma must be >= 1");
  std::vector<Node> nodes = split_tree(P);
  PairDecomposition D;
  D.kind = kind;
  auto separated = [&](const Node& u, const Node& v) {
    double ru = u.ids.size() == 1 ? 0 : u.box.radius();
    double rv = v.ids.size() == 1 ? 0 : v.box.radius();
    double gap = dist(u.box.center(), v.box.center()) - ru - rv;
    double r = kind == CertKind::Well ? std::max(ru, rv) : std::min(ru, rv);
    return gap > 0 && gap >= sigma * 2 * r;
  };
  std::vector<std::pair<int, int>> stack;
  for (const Node& nd : nodes)
    if (nd.child[0] >= 0) stack.emplace_back(nd.child[0], nd.child[1]);
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    const Node& u = nodes[a];
    const Node& v = nodes[b];
    if (separated(u, v)) {
      Pair p;
      p.left = u.ids;
      p.right = v.ids;
      p.kind = kind;
      p.sigma = sigma;
      D.pairs.push_back(std::move(p));
      continue;
    }
    bool split_u = v.child[0] < 0 || (u.child[0] >= 0 && u.box.radius() >= v.box.radius());
    if (split_u) {
      stack.emplace_back(u.child[0], b);
      stack.emplace_back(u.child[1], b);
    } else {
      stack.emplace_back(a, v.child[0]);
      stack.emplace_back(a, v.child[1]);
    }
  }
  finalize(D, P.size());
  return D;
}

bool smaller_side_is_left(const PointSet& P, const Pair& p) {
  double dl = set_diameter(P, p.left), dr = set_diameter(P, p.right);
  if (dl != dr) return dl < dr;
  return *std::min_element(p.left.begin(), p.left.end()) <
         *std::min_element(p.right.begin(), p.right.end());
}

/// Grid the smaller side of `pair` with cells of side r / ceil(sqrt(2) beta).
std::vector<Pair> chop(const PointSet& P, const Pair& pair, double beta) {
  bool left_small = smaller_side_is_left(P, pair);
  const std::vector<int>& small = left_small ? pair.left : pair.right;
  const std::vector<int>& large = left_small ? pair.right : pair.left;
  Box b = box_of(P, small);
  double r = std::max(b.hi.x - b.lo.x, b.hi.y - b.lo.y);
  int m = static_cast<int>(std::ceil(std::sqrt(2.0) * beta));
  std::map<std::pair<int, int>, std::vector<int>> cells;
  for (int i : small) {
    int cx = 0, cy = 0;
    if (r > 0) {
      cx = std::min(m - 1, static_cast<int>((P[i].x - b.lo.x) / r * m));
      cy = std::min(m - 1, static_cast<int>((P[i].y - b.lo.y) / r * m));
    }
    cells[{cx, cy}].push_back(i);
  }
  std::vector<Pair> out;
  for (auto& [cell, ids] : cells) {
    Pair p;
    p.left = ids;
    p.right = large;
    p.kind = CertKind::Semi;
    p.sigma = pair.sigma * beta;
    out.push_back(std::move(p));
  }
  return out;
}

/// The two inner common tangents of the hulls of X and Y, oriented so X is
/// on the non-positive side.
std::array<Line, 2> inner_tangents(const std::vector<Vec2>& X, const std::vector<Vec2>& Y) {
  std::vector<Vec2> hx = convex_hull(X), hy = convex_hull(Y);
  double scale = 1;
  for (Vec2 p : hx) scale = std::max(scale, norm(p));
  for (Vec2 p : hy) scale = std::max(scale, norm(p));
  const double tol = 1e-9 * scale;
  std::vector<Line> found;
  for (Vec2 x : hx)
    for (Vec2 y : hy) {
      Line l{x, normalized(perp(y - x))};
      bool ok = true;
      double sx = 0;
      for (Vec2 p : hx) {
        double s = l.side(p);
        if (std::abs(s) > tol) {
          if (sx == 0) sx = s > 0 ? 1 : -1;
          if (s * sx < 0) ok = false;
        }
      }
      if (!ok) continue;
      if (sx > 0) l.normal = -l.normal;
      for (Vec2 p : hy)
        if (l.side(p) < -tol) ok = false;
      // A line with both hulls entirely on it has no preferred orientation;
      // keep it only if X is not strictly on its wrong side.
      if (ok) found.push_back(l);
    }
  if (found.empty()) throw std::logic_error("sides of a separated pair are not separable");
  std::array<Line, 2> best{found[0], found[0]};
  double widest = -1;
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t j = i; j < found.size(); ++j) {
      double a = line_angle(perp(found[i].normal), perp(found[j].normal));
      if (a > widest) widest = a, best = {found[i], found[j]};
    }
  return best;
}

}  // namespace

PairDecomposition build_wspd(const PointSet& P, double sigma) {
  return tree_pairs(P, sigma, CertKind::Well);
}

PairDecomposition build_sspd(const PointSet& P, double sigma) {
  return tree_pairs(P, sigma, CertKind::Semi);
}

PairDecomposition refine_chop(const PointSet& P, const PairDecomposition& ws, double beta) {
  if (!(beta >= 2)) throw PreconditionError("chop factor beta must be >= 2");
  PairDecomposition D;
  D.kind = CertKind::Semi;
  for (const Pair& p : ws.pairs)
    for (Pair& q : chop(P, p, beta)) D.pairs.push_back(std::move(q));
  finalize(D, P.size());
  return D;
}

PairDecomposition refine_double_wedge(const PointSet& P, const PairDecomposition& ws, double eps) {
  if (!(eps > 0 && eps < 1)) throw PreconditionError("eps must lie in (0,1)");
  const double target = 10 / eps;
  const int cones = static_cast<int>(std::ceil(2 * kPi / (eps / 4)));
  PairDecomposition D;
  D.kind = CertKind::Angular;
  for (const Pair& base : ws.pairs) {
    std::vector<Pair> chopped;
    if (base.sigma >= target)
      chopped.push_back(base);
    else
      chopped = chop(P, base, std::max(2.0, target / base.sigma));
    for (const Pair& p : chopped) {
      bool left_small = smaller_side_is_left(P, p);
      const std::vector<int>& X = left_small ? p.left : p.right;
      const std::vector<int>& Y = left_small ? p.right : p.left;
      Vec2 c = box_of(P, X).center();
      std::map<int, std::vector<int>> bins;
      for (int i : Y) {
        double a = std::atan2(P[i].y - c.y, P[i].x - c.x) + kPi;
        int k = std::min(cones - 1, static_cast<int>(a / (2 * kPi) * cones));
        bins[k].push_back(i);
      }
      std::vector<Vec2> xs = gather(P, X);
      for (auto& [k, ys] : bins) {
        Pair q;
        q.left = X;
        q.right = ys;
        q.kind = CertKind::Angular;
        q.sigma = p.sigma;
        q.eps = eps;
        q.wedge = inner_tangents(xs, gather(P, ys));
        D.pairs.push_back(std::move(q));
      }
    }
  }
  finalize(D, P.size());
  return D;
}

std::vector<Pair1D> qspd_1d(const std::vector<double>& values) {
  std::vector<int> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return values[a] < values[b] || (values[a] == values[b] && a < b);
  });
  for (std::size_t i = 1; i < order.size(); ++i)
    if (values[order[i]] == values[order[i - 1]])
      throw DegenerateError("duplicate coordinate: perturbation required");
  std::vector<Pair1D> out;
  std::vector<std::pair<std::size_t, std::size_t>> stack{{0, order.size()}};
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    if (hi - lo < 2) continue;
    std::size_t mid = lo + (hi - lo) / 2;
    Pair1D p;
    p.left.assign(order.begin() + lo, order.begin() + mid);
    p.right.assign(order.begin() + mid, order.begin() + hi);
    p.split = (values[order[mid - 1]] + values[order[mid]]) / 2;
    out.push_back(std::move(p));
    stack.emplace_back(mid, hi);
    stack.emplace_back(lo, mid);
  }
  return out;
}

PairDecomposition build_qspd(const PointSet& P) {
  if (P.size() < 2) throw PreconditionError("pair decomposition needs at least 2 points");
  PairDecomposition D;
  D.kind = CertKind::Quadrant;
  std::vector<int> by_y(P.size());
  std::iota(by_y.begin(), by_y.end(), 0);
  std::sort(by_y.begin(), by_y.end(), [&](int a, int b) {
    return P[a].y < P[b].y || (P[a].y == P[b].y && a < b);
  });
  for (std::size_t i = 1; i < by_y.size(); ++i)
    if (P[by_y[i]].y == P[by_y[i - 1]].y)
      throw DegenerateError("duplicate coordinate: perturbation required");

  std::vector<char> upper(P.size(), 0);
  std::vector<std::pair<std::size_t, std::size_t>> stack{{0, by_y.size()}};
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    if (hi - lo < 2) continue;
    std::size_t mid = lo + (hi - lo) / 2;
    double h = (P[by_y[mid - 1]].y + P[by_y[mid]].y) / 2;
    std::vector<int> ids(by_y.begin() + lo, by_y.begin() + hi);
    for (std::size_t i = lo; i < hi; ++i) upper[by_y[i]] = i >= mid;
    std::vector<double> xs;
    for (int i : ids) xs.push_back(P[i].x);
    for (const Pair1D& q : qspd_1d(xs)) {
      for (int flip = 0; flip < 2; ++flip) {
        Pair p;
        p.kind = CertKind::Quadrant;
        p.center = {q.split, h};
        for (int i : q.left)
          if (upper[ids[i]] == (flip == 0)) p.left.push_back(ids[i]);
        for (int i : q.right)
          if (upper[ids[i]] != (flip == 0)) p.right.push_back(ids[i]);
        if (!p.left.empty() && !p.right.empty()) D.pairs.push_back(std::move(p));
      }
    }
    stack.emplace_back(mid, hi);
    stack.emplace_back(lo, mid);
  }
  finalize(D, P.size());
  return D;
}

double set_diameter(const PointSet& P, const std::vector<int>& ids) {
  return diameter_of(gather(P, ids));
}

double set_distance(const PointSet& P, const std::vector<int>& a, const std::vector<int>& b) {
  double best = kInf;
  for (int i : a)
    for (int j : b) best = std::min(best, dist(P[i], P[j]));
  return best;
}

double wedge_angle(const Pair& pair) {
  return line_angle(perp(pair.wedge[0].normal), perp(pair.wedge[1].normal));
}

bool certificate_holds(const PointSet& P, const Pair& pair, double tol) {
  if (pair.left.empty() || pair.right.empty()) return false;
  std::vector<int> l = pair.left, r = pair.right;
  std::sort(l.begin(), l.end());
  std::sort(r.begin(), r.end());
  std::vector<int> common;
  std::set_intersection(l.begin(), l.end(), r.begin(), r.end(), std::back_inserter(common));
  if (!common.empty()) return false;

  if (pair.kind == CertKind::Quadrant) {
    Vec2 c = pair.center;
    auto in_quadrant = [&](const std::vector<int>& ids, int sx, int sy) {
      for (int i : ids)
        if (!((P[i].x - c.x) * sx > 0 && (P[i].y - c.y) * sy > 0)) return false;
      return true;
    };
    for (int sx : {-1, 1})
      for (int sy : {-1, 1})
        if (in_quadrant(l, sx, sy) && in_quadrant(r, -sx, -sy)) return true;
    return false;
  }

  double dl = set_diameter(P, l), dr = set_diameter(P, r);
  double d = set_distance(P, l, r);
  double bound = d / pair.sigma * (1 + tol) + tol * P.diameter();
  double size = pair.kind == CertKind::Well ? std::max(dl, dr) : std::min(dl, dr);
  if (size > bound) return false;
  if (pair.kind != CertKind::Angular) return true;

  double slack = tol * std::max(1.0, P.diameter());
  for (const Line& line : pair.wedge) {
    for (int i : l)
      if (line.side(P[i]) > slack) return false;
    for (int i : r)
      if (line.side(P[i]) < -slack) return false;
  }
  return wedge_angle(pair) <= pair.eps + 1e-12;
}

}  // namespace spanloc
