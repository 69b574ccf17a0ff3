#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "spanloc/io.hpp"
#include "spanloc/spanloc.hpp"

namespace spanloc {

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

const std::vector<std::string> kVariants = {"homothet", "fat-triangle", "nice-polygon", "weak-convex",
                                            "weak-rect"};

struct Options {
  // shared
  std::string in, out;
  std::uint64_t seed = 1;
  double eps = 0.25, delta = 0.25, gamma = 64;
  int tau = 0;
  std::string shape = "square", variant = "homothet";
  // gen
  std::string kind = "uniform";
  int n = 100;
  double phi = 16;
  // build
  int k = 0;
  bool perturb = false;
  // verify
  int trials = 500;
  // bench
  std::string ns = "32,64,128", phis = "16", epss = "0.25";
  // export-svg
  std::string overlay_rect, overlay_homothet;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

json manifest(const std::string& command, const Options& o, json config, double seconds) {
  return {{"command", command},
          {"config", std::move(config)},
          {"seed", o.seed},
          {"input", o.in},
          {"output", o.out},
          {"seconds", seconds},
          {"version", kVersion}};
}

template <class T>
std::vector<T> parse_list(const std::string& s) {
  std::vector<T> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::istringstream is(item);
    T v;
    if (!(is >> v) || !is.eof()) throw PreconditionError("bad list entry: " + item);
    out.push_back(v);
  }
  if (out.empty()) throw PreconditionError("empty list: " + s);
  return out;
}

SpannerGraph build_variant(const std::string& variant, const PointSet& P, const ConvexShape& shape,
                           const Options& o) {
  if (variant == "homothet" && o.shape == "disk") return build_disk_spanner(P, o.eps);
  if (variant == "homothet") return build_homothet_spanner(P, make_shape(shape), o.eps);
  if (variant == "fat-triangle") {
    if (shape.size() != 3) throw PreconditionError("fat-triangle needs a triangle shape");
    return build_fat_triangle_spanner(P, shape, o.eps, o.gamma).graph;
  }
  if (variant == "nice-polygon") {
    NiceOptions opt;
    opt.gamma = o.gamma;
    int k = o.k > 0 ? o.k : static_cast<int>(shape.size());
    return build_nice_polygon_spanner(P, shape, k, o.eps, opt);
  }
  if (variant == "weak-convex") return build_weak_convex_spanner(P, o.eps, o.delta);
  if (variant == "weak-rect") return build_rectangle_weak_spanner(P, o.eps, o.delta, o.tau);
  throw PreconditionError("unknown variant: " + variant);
}

DilationReport verify_variant(const std::string& variant, const SpannerGraph& G, const PointSet& P,
                              const ConvexShape& shape, bool disk, double eps, double delta,
                              int trials, std::uint64_t seed) {
  if (variant == "weak-convex")
    return check_weak_convex_spanner(G, P, sample_convex_bodies(P, trials, seed), eps, delta);
  if (variant == "weak-rect")
    return check_weak_rect_spanner(G, P, sample_rects(P, trials, seed), eps, delta);
  if (disk) return check_local_spanner(G, P, sample_disks(P, trials, seed), eps);
  return check_local_spanner(G, P, make_shape(shape), eps, trials, seed);
}

// Disks carry no polygon; the square stands in where a shape is required.
ConvexShape resolve_shape(const Options& o) {
  if (o.shape == "disk") {
    if (o.variant != "homothet") throw PreconditionError("shape disk is only available for variant homothet");
    return ConvexShape::square();
  }
  if (o.variant == "fat-triangle" && o.shape == "square") return ConvexShape::regular(3);
  return parse_shape(o.shape);
}

int run_gen(const Options& o, std::ostream& out) {
  auto t0 = std::chrono::steady_clock::now();
  json doc;
  PointSet P;
  if (o.kind == "lb-disk") {
    DiskLowerBound lb = gen_lower_bound_disk(o.n, o.phi);
    if (!lb.certified) throw std::runtime_error("lower-bound certification failed: " + lb.failure);
    P = lb.points;
    doc = points_to_json(P);
    doc["forced"] = lb.forced;
  } else if (o.kind == "lb-triangle") {
    TriangleLowerBound lb = gen_lower_bound_triangle(o.n, o.phi);
    if (!lb.certified) throw std::runtime_error("lower-bound certification failed: " + lb.failure);
    P = lb.points;
    doc = points_to_json(P);
    doc["forced"] = lb.forced;
    doc["shape"] = shape_to_json(*lb.triangle)["shape"];
  } else {
    P = gen_random(o.n, parse_distribution(o.kind), o.seed);
    doc = points_to_json(P);
  }
  doc["manifest"] = manifest("gen", o, {{"kind", o.kind}, {"n", o.n}, {"phi", o.phi}},
                             seconds_since(t0));
  write_json_file(o.out, doc);
  out << "wrote " << P.size() << " points to " << o.out << " (spread " << P.spread() << ")\n";
  return kOk;
}

int run_build(Options o, std::ostream& out) {
  if (o.variant == "homothet" && !(o.eps > 0 && o.eps < 0.5))
    throw PreconditionError("variant homothet requires eps in (0, 1/2)");
  auto t0 = std::chrono::steady_clock::now();
  json in = read_json_file(o.in);
  PointSet P = points_from_json(in);
  if (o.perturb) P = perturbed(P, o.seed);
  ConvexShape shape = resolve_shape(o);
  SpannerGraph G = build_variant(o.variant, P, shape, o);
  double secs = seconds_since(t0);
  json doc = graph_to_json(G);
  doc["points"] = points_to_json(P)["points"];
  if (o.shape != "disk") doc["shape"] = shape_to_json(shape)["shape"];
  doc["manifest"] = manifest("build", o,
                             {{"variant", o.variant}, {"shape", o.shape}, {"eps", o.eps},
                              {"delta", o.delta}, {"gamma", o.gamma}, {"tau", o.tau},
                              {"perturb", o.perturb}},
                             secs);
  write_json_file(o.out, doc);
  out << o.variant << " spanner: n=" << P.size() << " edges=" << G.edge_count() << " (" << secs
      << " s) -> " << o.out << "\n";
  return kOk;
}

struct LoadedGraph {
  PointSet P;
  SpannerGraph G;
  ConvexShape shape = ConvexShape::square();
  json config = json::object();
};

LoadedGraph load_graph(const std::string& path) {
  json doc = read_json_file(path);
  LoadedGraph g;
  g.P = points_from_json(doc);
  g.G = graph_from_json(doc, g.P);
  if (doc.contains("shape")) g.shape = shape_from_json(doc["shape"]);
  if (doc.contains("manifest")) g.config = doc["manifest"].value("config", json::object());
  return g;
}

int run_verify(const Options& o, const CLI::App& cmd, std::ostream& out) {
  auto t0 = std::chrono::steady_clock::now();
  LoadedGraph g = load_graph(o.in);
  std::string variant = g.config.value("variant", std::string("homothet"));
  double eps = cmd.count("--eps") ? o.eps : g.config.value("eps", o.eps);
  double delta = cmd.count("--delta") ? o.delta : g.config.value("delta", o.delta);
  bool disk = g.config.value("shape", std::string()) == "disk";
  DilationReport rep = verify_variant(variant, g.G, g.P, g.shape, disk, eps, delta, o.trials, o.seed);
  json doc = report_to_json(rep);
  doc["manifest"] = manifest("verify", o, {{"variant", variant}, {"eps", eps}, {"delta", delta},
                                           {"trials", o.trials}},
                             seconds_since(t0));
  if (!o.out.empty()) write_json_file(o.out, doc);
  out << "verify " << variant << ": regions=" << rep.regions_tested << " pairs=" << rep.pairs_tested
      << " maxDilation=" << rep.max_dilation << " threshold=" << 1 + eps
      << " failures=" << rep.failures.size() << "\n";
  return rep.ok() ? kOk : kVerifyFailed;
}

int run_stats(const Options& o, std::ostream& out) {
  LoadedGraph g = load_graph(o.in);
  std::map<int, int> hist;
  for (int d : g.G.degrees()) ++hist[d];
  json h = json::object();
  for (auto [d, c] : hist) h[std::to_string(d)] = c;
  json doc = {{"n", g.P.size()},
              {"edges", g.G.edge_count()},
              {"edgesPerPoint", g.P.empty() ? 0.0 : double(g.G.edge_count()) / g.P.size()},
              {"spread", g.P.spread()},
              {"degreeHistogram", h}};
  out << doc.dump(2) << "\n";
  return kOk;
}

int run_bench(const Options& o, std::ostream& out) {
  std::vector<int> ns = parse_list<int>(o.ns);
  std::vector<double> phis = parse_list<double>(o.phis);
  std::vector<double> epss = parse_list<double>(o.epss);
  ConvexShape shape = resolve_shape(o);
  std::ostringstream csv;
  csv << "construction,n,Phi,eps,delta,edges,maxDilation,seconds\n";
  csv.precision(10);
  bool all_ok = true;
  for (int n : ns)
    for (double phi : phis)
      for (double eps : epss) {
        PointSet P;
        if (o.kind == "lb-disk")
          P = gen_lower_bound_disk(n, phi).points;
        else if (o.kind == "lb-triangle")
          P = gen_lower_bound_triangle(n, phi).points;
        else
          P = gen_random(n, parse_distribution(o.kind), o.seed);
        Options run = o;
        run.eps = eps;
        auto t0 = std::chrono::steady_clock::now();
        SpannerGraph G = build_variant(o.variant, P, shape, run);
        double secs = seconds_since(t0);
        DilationReport rep = verify_variant(o.variant, G, P, shape, o.shape == "disk", eps, o.delta, o.trials, o.seed);
        all_ok = all_ok && rep.ok();
        csv << o.variant << ',' << P.size() << ',' << P.spread() << ',' << eps << ',' << o.delta << ','
            << G.edge_count() << ',' << rep.max_dilation << ',' << secs << '\n';
      }
  if (o.out.empty()) {
    out << csv.str();
  } else {
    std::ofstream f(o.out);
    f << csv.str();
    json m = manifest("bench", o,
                      {{"variant", o.variant}, {"shape", o.shape}, {"kind", o.kind}, {"n", o.ns},
                       {"phi", o.phis}, {"eps", o.epss}, {"delta", o.delta}, {"trials", o.trials}},
                      0);
    write_json_file(o.out + ".manifest.json", m);
    out << "wrote " << o.out << "\n";
  }
  return all_ok ? kOk : kVerifyFailed;
}

int run_export_svg(const Options& o, std::ostream& out) {
  json doc = read_json_file(o.in);
  PointSet P = points_from_json(doc);
  SpannerGraph G = doc.contains("edges") ? graph_from_json(doc, P) : SpannerGraph(static_cast<int>(P.size()));
  std::optional<Region> overlay;
  if (!o.overlay_rect.empty()) {
    auto v = parse_list<double>(o.overlay_rect);
    if (v.size() != 4) throw PreconditionError("--overlay-rect needs x0,x1,y0,y1");
    overlay = Rect{v[0], v[1], v[2], v[3]};
  } else if (!o.overlay_homothet.empty()) {
    auto v = parse_list<double>(o.overlay_homothet);
    if (v.size() != 3) throw PreconditionError("--overlay-homothet needs tx,ty,scale");
    ConvexShape s = doc.contains("shape") ? shape_from_json(doc["shape"]) : ConvexShape::square();
    overlay = Homothet{make_shape(s), {v[0], v[1]}, v[2]};
  }
  std::ofstream f(o.out);
  if (!f) throw std::runtime_error("cannot write " + o.out);
  f << export_svg(P, G, overlay);
  out << "wrote " << o.out << "\n";
  return kOk;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"spanloc: local geometric spanners and their verification", "spanloc"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* c) {
    c->add_option("--seed", o.seed, "Random seed");
  };
  auto add_eps = [&](CLI::App* c) {
    c->add_option("--eps", o.eps, "Approximation parameter epsilon");
    c->add_option("--delta", o.delta, "Shrink parameter delta (weak variants)");
  };

  CLI::App* gen = app.add_subcommand("gen", "Generate a point set");
  gen->add_option("--kind", o.kind, "uniform | clustered | grid-perturbed | lb-disk | lb-triangle")
      ->check(CLI::IsMember({"uniform", "clustered", "grid-perturbed", "lb-disk", "lb-triangle"}));
  gen->add_option("--n", o.n, "Number of points")->check(CLI::PositiveNumber);
  gen->add_option("--phi", o.phi, "Target spread (lower-bound families)");
  gen->add_option("--out", o.out, "Output file")->default_str("points.json");
  add_common(gen);

  CLI::App* build = app.add_subcommand("build", "Build a spanner");
  build->add_option("--in", o.in, "Point set JSON")->default_str("points.json");
  build->add_option("--out", o.out, "Graph JSON")->default_str("graph.json");
  build->add_option("--variant", o.variant, "Construction")->check(CLI::IsMember(kVariants));
  build->add_option("--shape", o.shape, "square | regular-k | triangle | disk | path to shape JSON");
  build->add_option("--gamma", o.gamma, "Fat-triangle cone constant");
  build->add_option("--tau", o.tau, "Rectangle grid resolution (0 = automatic)");
  build->add_option("--k", o.k, "Niceness parameter (default: vertex count)");
  build->add_flag("--perturb", o.perturb, "Perturb points into general position first");
  add_eps(build);
  add_common(build);

  CLI::App* verify = app.add_subcommand("verify", "Check a spanner on sampled regions");
  verify->add_option("--in", o.in, "Graph JSON")->default_str("graph.json");
  verify->add_option("--out", o.out, "Report JSON");
  verify->add_option("--trials", o.trials, "Number of sampled regions")->check(CLI::NonNegativeNumber);
  add_eps(verify);
  add_common(verify);

  CLI::App* stats = app.add_subcommand("stats", "Edge counts, degrees and spread");
  stats->add_option("--in", o.in, "Graph JSON")->default_str("graph.json");

  CLI::App* bench = app.add_subcommand("bench", "Sweep n / spread / eps and emit CSV");
  bench->add_option("--variant", o.variant, "Construction")->check(CLI::IsMember(kVariants));
  bench->add_option("--shape", o.shape, "Shape");
  bench->add_option("--kind", o.kind, "Point distribution or lower-bound family");
  bench->add_option("--n", o.ns, "Comma-separated sizes");
  bench->add_option("--phi", o.phis, "Comma-separated spreads (lower-bound families)");
  bench->add_option("--eps", o.epss, "Comma-separated eps values");
  bench->add_option("--delta", o.delta, "Shrink parameter delta");
  bench->add_option("--gamma", o.gamma, "Fat-triangle cone constant");
  bench->add_option("--tau", o.tau, "Rectangle grid resolution");
  bench->add_option("--trials", o.trials, "Regions per run");
  bench->add_option("--out", o.out, "CSV file (default stdout)");
  add_common(bench);

  CLI::App* svg = app.add_subcommand("export-svg", "Render points, edges and a region");
  svg->add_option("--in", o.in, "Graph or point JSON")->default_str("graph.json");
  svg->add_option("--out", o.out, "SVG file")->default_str("scene.svg");
  svg->add_option("--overlay-rect", o.overlay_rect, "x0,x1,y0,y1");
  svg->add_option("--overlay-homothet", o.overlay_homothet, "tx,ty,scale of the graph's shape");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  auto fill_default = [](std::string& s, const std::string& d) {
    if (s.empty()) s = d;
  };
  try {
    if (gen->parsed()) {
      fill_default(o.out, "points.json");
      return run_gen(o, out);
    }
    if (build->parsed()) {
      fill_default(o.in, "points.json");
      fill_default(o.out, "graph.json");
      return run_build(o, out);
    }
    if (verify->parsed()) {
      fill_default(o.in, "graph.json");
      return run_verify(o, *verify, out);
    }
    if (stats->parsed()) {
      fill_default(o.in, "graph.json");
      return run_stats(o, out);
    }
    if (bench->parsed()) return run_bench(o, out);
    if (svg->parsed()) {
      fill_default(o.in, "graph.json");
      fill_default(o.out, "scene.svg");
      return run_export_svg(o, out);
    }
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace spanloc
