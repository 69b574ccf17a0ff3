#pragma once

#include <array>
#include <string>
#include <vector>

#include "spanloc/geom.hpp"

namespace spanloc {

enum class CertKind { Well, Semi, Angular, Quadrant };

std::string to_string(CertKind kind);

/// Oriented line {z : normal . (z - point) = 0}. The left side of an angular
/// pair lies in normal . (z - point) <= 0, the right side in >= 0.
struct Line {
  Vec2 point;
  Vec2 normal;

  double side(Vec2 z) const { return dot(normal, z - point); }
};

struct Pair {
  std::vector<int> left;
  std::vector<int> right;
  CertKind kind = CertKind::Well;
  double sigma = 0;              // Well / Semi / Angular separation
  double eps = 0;                // Angular: wedge angle bound
  std::array<Line, 2> wedge{};   // Angular: the two lines of the double wedge
  Vec2 center;                   // Quadrant
};

struct PairDecomposition {
  CertKind kind = CertKind::Well;
  std::vector<Pair> pairs;
  /// Number of pairs each point participates in.
  std::vector<int> participation;

  std::size_t weight() const;
};

/// Well-separated pairs from a fair split tree; sigma >= 1.
PairDecomposition build_wspd(const PointSet& P, double sigma);
/// Semi-separated pairs from the same tree; sigma >= 1.
PairDecomposition build_sspd(const PointSet& P, double sigma);
/// Grids the smaller side of every pair; beta >= 2.
PairDecomposition refine_chop(const PointSet& P, const PairDecomposition& ws, double beta);
/// Splits every pair into eps-angularly separated pairs; eps in (0,1).
PairDecomposition refine_double_wedge(const PointSet& P, const PairDecomposition& ws, double eps);
/// Quadrant-separated pairs (median recursion in y, 1-D recursion in x).
PairDecomposition build_qspd(const PointSet& P);

/// The 1-D median recursion on sorted positions; returns pairs of index sets
/// into `values` together with the separating value.
struct Pair1D {
  std::vector<int> left;
  std::vector<int> right;
  double split;
};
std::vector<Pair1D> qspd_1d(const std::vector<double>& values);

double set_diameter(const PointSet& P, const std::vector<int>& ids);
double set_distance(const PointSet& P, const std::vector<int>& a, const std::vector<int>& b);
/// Angle between the two wedge lines, in [0, pi/2].
double wedge_angle(const Pair& pair);
/// Re-evaluates the stored certificate of `pair` from scratch.
bool certificate_holds(const PointSet& P, const Pair& pair, double tol = 1e-9);

}  // namespace spanloc
