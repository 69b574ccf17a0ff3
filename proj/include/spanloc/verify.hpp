#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "spanloc/geom.hpp"
#include "spanloc/graph.hpp"

namespace spanloc {

struct DilationFailure {
  std::optional<Region> region;
  int u;
  int v;
  double dilation;
};

struct DilationReport {
  double max_dilation = 1;
  std::pair<int, int> witness{-1, -1};
  int regions_tested = 0;
  long pairs_tested = 0;
  std::vector<DilationFailure> failures;

  bool ok() const { return failures.empty(); }
  void absorb(const DilationReport& other);
};

/// Shortest paths over the edges of G among `allowed`, measured between all
/// pairs of `queries` (a subset of `allowed`). Pairs above `threshold`,
/// including disconnected ones, are failures.
DilationReport dilation(const SpannerGraph& G, const PointSet& P, const std::vector<int>& allowed,
                        const std::vector<int>& queries, double threshold = kInf);
DilationReport dilation(const SpannerGraph& G, const PointSet& P, const std::vector<int>& ids,
                        double threshold = kInf);

enum class SampleStrategy { Mixed, Uniform, Critical };

std::vector<Region> sample_homothets(const PointSet& P, ShapePtr C, int trials, std::uint64_t seed,
                                     SampleStrategy strategy = SampleStrategy::Mixed);
std::vector<Region> sample_rects(const PointSet& P, int trials, std::uint64_t seed,
                                 SampleStrategy strategy = SampleStrategy::Mixed);
std::vector<Region> sample_disks(const PointSet& P, int trials, std::uint64_t seed,
                                 SampleStrategy strategy = SampleStrategy::Mixed);
/// Random convex polygons roughly at the scale of P: alternately hulls of
/// random points and fat, nearly regular polygons.
std::vector<Homothet> sample_convex_bodies(const PointSet& P, int trials, std::uint64_t seed);

/// Dilation of restricted(G, H) over P n H for every region.
DilationReport check_local_spanner(const SpannerGraph& G, const PointSet& P,
                                   const std::vector<Region>& regions, double eps);
DilationReport check_local_spanner(const SpannerGraph& G, const PointSet& P, ShapePtr C, double eps,
                                   int trials, std::uint64_t seed);
/// Pairs in (1 - delta) r measured inside restricted(G, r).
DilationReport check_weak_rect_spanner(const SpannerGraph& G, const PointSet& P,
                                       const std::vector<Region>& rects, double eps, double delta);
/// Pairs at depth >= delta * diam(b) measured inside restricted(G, b).
DilationReport check_weak_convex_spanner(const SpannerGraph& G, const PointSet& P,
                                         const std::vector<Homothet>& bodies, double eps,
                                         double delta);

/// Compares distances in G minus D with the safe graph of D: pairs outside D
/// whose segment misses int(D), which is exactly when some half-plane
/// avoiding D holds both.
DilationReport check_fault_tolerance(const SpannerGraph& G, const PointSet& P,
                                     const std::vector<Homothet>& faults, double eps);

struct DiskLowerBound {
  PointSet points;  // a_1..a_n then b_1..b_M
  int n = 0;
  int M = 0;
  std::vector<std::pair<int, int>> forced;  // (a_i, b_j) ids
  double min_detour = kInf;                 // min |a_i b_k| / |a_i b_j| over k < j
  bool certified = false;
  std::string failure;
};

/// a_i = (-i, 0) and the points b_2..b_M below the axis; every pair
/// (a_i, b_j) is forced in any disk-local (1+eps)-spanner with eps < 1/3.
DiskLowerBound gen_lower_bound_disk(int n, double phi);

struct TriangleLowerBound {
  PointSet points;  // b_1..b_h then c_1..c_n
  ShapePtr triangle;
  int n = 0;
  int h = 0;
  std::vector<std::pair<int, int>> forced;  // (b_i, c_j) ids
  std::vector<Homothet> witnesses;          // Delta_ij, same order as forced
  double min_detour = kInf;
  bool certified = false;
  std::string failure;
};

TriangleLowerBound gen_lower_bound_triangle(int n, double phi);

enum class Distribution { Uniform, Clustered, GridPerturbed };

Distribution parse_distribution(const std::string& name);
PointSet gen_random(int n, Distribution dist, std::uint64_t seed);

}  // namespace spanloc
