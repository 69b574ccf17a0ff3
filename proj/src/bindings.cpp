#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spanloc/io.hpp"
#include "spanloc/spanloc.hpp"

namespace py = pybind11;
using namespace spanloc;

namespace {

using Points = std::vector<std::pair<double, double>>;
using Edges = std::vector<std::pair<int, int>>;

PointSet to_points(const Points& pts) {
  std::vector<Vec2> v;
  v.reserve(pts.size());
  for (auto [x, y] : pts) v.push_back({x, y});
  return PointSet(v);
}

Points from_points(const PointSet& P) {
  Points out;
  for (Vec2 p : P.coords()) out.emplace_back(p.x, p.y);
  return out;
}

SpannerGraph to_graph(const PointSet& P, const Edges& edges) {
  SpannerGraph G(static_cast<int>(P.size()));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= G.n() || v >= G.n()) throw PreconditionError("edge endpoint out of range");
    G.add_edge(P, u, v);
  }
  return G;
}

py::dict to_dict(const DilationReport& rep) {
  py::list fails;
  for (const auto& f : rep.failures) fails.append(py::make_tuple(f.u, f.v, f.dilation));
  py::dict d;
  d["ok"] = rep.ok();
  d["max_dilation"] = rep.max_dilation;
  d["regions_tested"] = rep.regions_tested;
  d["pairs_tested"] = rep.pairs_tested;
  d["witness"] = rep.witness;
  d["failures"] = fails;
  return d;
}

Edges build(const Points& pts, const std::string& variant, const std::string& shape, double eps, double delta,
            double gamma, int tau) {
  PointSet P = to_points(pts);
  SpannerGraph G;
  if (variant == "homothet" && shape == "disk")
    G = build_disk_spanner(P, eps);
  else if (variant == "homothet")
    G = build_homothet_spanner(P, make_shape(parse_shape(shape)), eps);
  else if (variant == "fat-triangle")
    G = build_fat_triangle_spanner(P, parse_shape(shape == "square" ? "triangle" : shape), eps, gamma).graph;
  else if (variant == "nice-polygon") {
    ConvexShape C = parse_shape(shape);
    NiceOptions opt;
    opt.gamma = gamma;
    G = build_nice_polygon_spanner(P, C, static_cast<int>(C.size()), eps, opt);
  } else if (variant == "weak-convex")
    G = build_weak_convex_spanner(P, eps, delta);
  else if (variant == "weak-rect")
    G = build_rectangle_weak_spanner(P, eps, delta, tau);
  else
    throw PreconditionError("unknown variant: " + variant);
  return G.edges();
}

py::dict verify(const Points& pts, const Edges& edges, const std::string& variant, const std::string& shape,
                double eps, double delta, int trials, std::uint64_t seed) {
  PointSet P = to_points(pts);
  SpannerGraph G = to_graph(P, edges);
  if (variant == "weak-convex")
    return to_dict(check_weak_convex_spanner(G, P, sample_convex_bodies(P, trials, seed), eps, delta));
  if (variant == "weak-rect") return to_dict(check_weak_rect_spanner(G, P, sample_rects(P, trials, seed), eps, delta));
  if (shape == "disk") return to_dict(check_local_spanner(G, P, sample_disks(P, trials, seed), eps));
  std::string s = variant == "fat-triangle" && shape == "square" ? "triangle" : shape;
  return to_dict(check_local_spanner(G, P, make_shape(parse_shape(s)), eps, trials, seed));
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> decompose(const Points& pts, const std::string& kind,
                                                                     double sigma) {
  PointSet P = to_points(pts);
  PairDecomposition D;
  if (kind == "wspd")
    D = build_wspd(P, sigma);
  else if (kind == "sspd")
    D = build_sspd(P, sigma);
  else if (kind == "qspd")
    D = build_qspd(P);
  else
    throw PreconditionError("unknown decomposition: " + kind);
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  for (const Pair& p : D.pairs) out.emplace_back(p.left, p.right);
  return out;
}

}  // namespace

PYBIND11_MODULE(_spanloc, m) {
  m.doc() = "Local geometric spanners and dilation checks";
  m.attr("__version__") = kVersion;

  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<DegenerateError>(m, "DegenerateError", PyExc_RuntimeError);

  m.def(
      "gen_random",
      [](int n, const std::string& kind, std::uint64_t seed) {
        return from_points(gen_random(n, parse_distribution(kind), seed));
      },
      py::arg("n"), py::arg("kind") = "uniform", py::arg("seed") = 1);
  m.def(
      "gen_lower_bound_disk",
      [](int n, double phi) {
        DiskLowerBound lb = gen_lower_bound_disk(n, phi);
        return py::make_tuple(from_points(lb.points), lb.forced, lb.certified);
      },
      py::arg("n"), py::arg("phi"));
  m.def(
      "gen_lower_bound_triangle",
      [](int n, double phi) {
        TriangleLowerBound lb = gen_lower_bound_triangle(n, phi);
        return py::make_tuple(from_points(lb.points), lb.forced, lb.certified);
      },
      py::arg("n"), py::arg("phi"));
  m.def("build_spanner", &build, py::arg("points"), py::arg("variant") = "homothet", py::arg("shape") = "square",
        py::arg("eps") = 0.25, py::arg("delta") = 0.25, py::arg("gamma") = 64.0, py::arg("tau") = 0,
        py::call_guard<py::gil_scoped_release>());
  m.def("verify", &verify, py::arg("points"), py::arg("edges"), py::arg("variant") = "homothet",
        py::arg("shape") = "square", py::arg("eps") = 0.25, py::arg("delta") = 0.25, py::arg("trials") = 200,
        py::arg("seed") = 1);
  m.def(
      "delaunay",
      [](const Points& pts, const std::string& shape) {
        PointSet P = to_points(pts);
        if (shape == "disk") return disk_delaunay(P).edges();
        return c_delaunay(make_shape(parse_shape(shape)), P).graph.edges();
      },
      py::arg("points"), py::arg("shape") = "square", py::call_guard<py::gil_scoped_release>());
  m.def("decompose", &decompose, py::arg("points"), py::arg("kind") = "wspd", py::arg("sigma") = 2.0);
  m.def(
      "dilation",
      [](const Points& pts, const Edges& edges) {
        PointSet P = to_points(pts);
        std::vector<int> ids(P.size());
        for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
        return dilation(to_graph(P, edges), P, ids).max_dilation;
      },
      py::arg("points"), py::arg("edges"));
}
