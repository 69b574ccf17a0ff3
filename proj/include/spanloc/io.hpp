#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "spanloc/geom.hpp"
#include "spanloc/graph.hpp"
#include "spanloc/pair_decomp.hpp"
#include "spanloc/verify.hpp"

namespace spanloc {

using json = nlohmann::json;

json points_to_json(const PointSet& P);
PointSet points_from_json(const json& j);

json shape_to_json(const ConvexShape& C);
ConvexShape shape_from_json(const json& j);
/// "square", "regular-k", or a path to a shape JSON file.
ConvexShape parse_shape(const std::string& name);

json graph_to_json(const SpannerGraph& G);
SpannerGraph graph_from_json(const json& j, const PointSet& P);

json decomposition_to_json(const PairDecomposition& D);
json region_to_json(const Region& R);
json report_to_json(const DilationReport& rep, std::size_t max_failures = 20);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

/// Points and edges in a 1000x1000 viewBox with a 2% margin; an optional
/// region is drawn at 30% opacity.
std::string export_svg(const PointSet& P, const SpannerGraph& G,
                       const std::optional<Region>& overlay = std::nullopt);

}  // namespace spanloc
