#include "spanloc/io.hpp"

#include <fstream>
#include <sstream>

namespace spanloc {

json points_to_json(const PointSet& P) {
  json pts = json::array();
  for (Vec2 p : P.coords()) pts.push_back({p.x, p.y});
  return {{"points", pts}};
}

PointSet points_from_json(const json& j) {
  if (!j.contains("points") || !j["points"].is_array())
    throw PreconditionError("point JSON needs a \"points\" array");
  std::vector<Vec2> out;
  for (const auto& p : j["points"]) {
    if (!p.is_array() || p.size() != 2) throw PreconditionError("each point must be [x, y]");
    out.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  return PointSet(std::move(out));
}

json shape_to_json(const ConvexShape& C) {
  json vs = json::array();
  for (Vec2 v : C.vertices()) {
    Vec2 w = v + C.centroid();
    vs.push_back({w.x, w.y});
  }
  return {{"shape", {{"vertices", vs}}}};
}

ConvexShape shape_from_json(const json& j) {
  const json& s = j.contains("shape") ? j["shape"] : j;
  if (!s.contains("vertices")) throw PreconditionError("shape JSON needs \"vertices\"");
  std::vector<Vec2> vs;
  for (const auto& p : s["vertices"]) vs.push_back({p[0].get<double>(), p[1].get<double>()});
  return ConvexShape::from_vertices(std::move(vs));
}

ConvexShape parse_shape(const std::string& name) {
  if (name == "square") return ConvexShape::square();
  if (name.rfind("regular-", 0) == 0) {
    std::size_t used = 0;
    int k = 0;
    try {
      k = std::stoi(name.substr(8), &used);
    } catch (const std::exception&) {
      throw PreconditionError("bad shape: " + name);
    }
    if (used != name.size() - 8) throw PreconditionError("bad shape: " + name);
    return ConvexShape::regular(k);
  }
  if (name == "triangle") return ConvexShape::regular(3);
  return shape_from_json(read_json_file(name));
}

json graph_to_json(const SpannerGraph& G) {
  json edges = json::array();
  for (auto [u, v] : G.edges()) edges.push_back({u, v});
  return {{"n", G.n()}, {"edges", edges}};
}

SpannerGraph graph_from_json(const json& j, const PointSet& P) {
  int n = j.at("n").get<int>();
  if (n != static_cast<int>(P.size())) throw PreconditionError("graph and point set sizes differ");
  SpannerGraph G(n);
  for (const auto& e : j.at("edges")) G.add_edge(P, e[0].get<int>(), e[1].get<int>());
  return G;
}

json decomposition_to_json(const PairDecomposition& D) {
  json pairs = json::array();
  for (const Pair& p : D.pairs) {
    json cert = {{"kind", to_string(p.kind)}};
    switch (p.kind) {
      case CertKind::Well:
      case CertKind::Semi:
        cert["sigma"] = p.sigma;
        break;
      case CertKind::Angular: {
        cert["sigma"] = p.sigma;
        cert["eps"] = p.eps;
        json lines = json::array();
        for (const Line& l : p.wedge)
          lines.push_back({{"point", {l.point.x, l.point.y}}, {"normal", {l.normal.x, l.normal.y}}});
        cert["wedge"] = lines;
        break;
      }
      case CertKind::Quadrant:
        cert["center"] = {p.center.x, p.center.y};
        break;
    }
    pairs.push_back({{"left", p.left}, {"right", p.right}, {"cert", cert}});
  }
  return {{"kind", to_string(D.kind)}, {"pairs", pairs}};
}

json region_to_json(const Region& R) {
  if (const auto* h = std::get_if<Homothet>(&R)) {
    json vs = json::array();
    for (Vec2 v : h->vertices()) vs.push_back({v.x, v.y});
    return {{"type", "homothet"}, {"t", {h->t.x, h->t.y}}, {"scale", h->scale}, {"vertices", vs}};
  }
  if (const auto* d = std::get_if<Disk>(&R)) return {{"type", "disk"}, {"c", {d->c.x, d->c.y}}, {"r", d->r}};
  const Rect& r = std::get<Rect>(R);
  return {{"type", "rect"}, {"x", {r.x0, r.x1}}, {"y", {r.y0, r.y1}}};
}

json report_to_json(const DilationReport& rep, std::size_t max_failures) {
  json fails = json::array();
  for (std::size_t i = 0; i < rep.failures.size() && i < max_failures; ++i) {
    const auto& f = rep.failures[i];
    json e = {{"pair", {f.u, f.v}},
              {"dilation", std::isinf(f.dilation) ? json("inf") : json(f.dilation)}};
    if (f.region) e["region"] = region_to_json(*f.region);
    fails.push_back(e);
  }
  return {{"maxDilation", std::isinf(rep.max_dilation) ? json("inf") : json(rep.max_dilation)},
          {"witnessPair", {rep.witness.first, rep.witness.second}},
          {"regionsTested", rep.regions_tested},
          {"pairsTested", rep.pairs_tested},
          {"failureCount", rep.failures.size()},
          {"failures", fails}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw PreconditionError("invalid JSON in " + path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

std::string export_svg(const PointSet& P, const SpannerGraph& G, const std::optional<Region>& overlay) {
  Vec2 lo{0, 0}, hi{1, 1};
  if (!P.empty()) {
    lo = hi = P[0];
    for (Vec2 p : P.coords()) {
      lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
      hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
    }
  }
  double span = std::max({hi.x - lo.x, hi.y - lo.y, 1e-12});
  const double margin = 20, inner = 1000 - 2 * margin;
  auto map = [&](Vec2 p) {
    return Vec2{margin + (p.x - lo.x) / span * inner, 1000 - margin - (p.y - lo.y) / span * inner};
  };
  std::ostringstream s;
  s.precision(10);
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\" width=\"1000\" "
       "height=\"1000\">\n";
  s << "<rect x=\"0\" y=\"0\" width=\"1000\" height=\"1000\" fill=\"white\"/>\n";
  if (overlay) {
    std::vector<Vec2> poly;
    if (const auto* h = std::get_if<Homothet>(&*overlay)) {
      poly = h->vertices();
    } else if (const auto* d = std::get_if<Disk>(&*overlay)) {
      for (int i = 0; i < 64; ++i) {
        double a = 2 * kPi * i / 64;
        poly.push_back(d->c + Vec2{std::cos(a), std::sin(a)} * d->r);
      }
    } else {
      const Rect& r = std::get<Rect>(*overlay);
      poly = {{r.x0, r.y0}, {r.x1, r.y0}, {r.x1, r.y1}, {r.x0, r.y1}};
    }
    s << "<polygon fill=\"#3b82f6\" fill-opacity=\"0.3\" stroke=\"#1d4ed8\" points=\"";
    for (Vec2 p : poly) {
      Vec2 m = map(p);
      s << m.x << ',' << m.y << ' ';
    }
    s << "\"/>\n";
  }
  s << "<g stroke=\"#444\" stroke-width=\"1\">\n";
  for (auto [u, v] : G.edges()) {
    Vec2 a = map(P[u]), b = map(P[v]);
    s << "<line x1=\"" << a.x << "\" y1=\"" << a.y << "\" x2=\"" << b.x << "\" y2=\"" << b.y << "\"/>\n";
  }
  s << "</g>\n<g fill=\"#dc2626\">\n";
  for (Vec2 p : P.coords()) {
    Vec2 m = map(p);
    s << "<circle cx=\"" << m.x << "\" cy=\"" << m.y << "\" r=\"3\"/>\n";
  }
  s << "</g>\n</svg>\n";
  return s.str();
}

}  // namespace spanloc
