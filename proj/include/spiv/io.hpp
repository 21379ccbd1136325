#pragma once

// File formats: trajectory CSV, event and parameter JSON, scan CSV and PPM
// rasters, polyline CSV and rational triples as JSON. Numbers are written with
// 17 significant digits so they round-trip.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include <Eigen/Core>
#include <json.hpp>

#include "spiv/explorer.hpp"
#include "spiv/integrator.hpp"
#include "spiv/rational.hpp"

namespace spiv {

using Json = nlohmann::ordered_json;

/// Columns x,f1,f2,f3,chart.
void write_trajectory_csv(std::ostream& os, const Trajectory& t);

/// Poles as {kind: "pole", type: "A1", x, direction}; zeros as
/// {kind: "zero", component: 1, x, direction}.
Json events_json(const std::vector<Event>& events);

Json params_json(const Params& p);
/// Reads alpha1..alpha3; throws ParseError on missing keys and
/// ConstraintViolation when they do not sum to 1.
Params params_from_json(const Json& j);

/// Header u,v,n_minus,n_plus,left_class,right_class,sequence; one row per
/// cell in the grid's storage order. Failed cells carry `Failed:<error>` in
/// the sequence column.
void write_scan_csv(std::ostream& os, const ScanGrid& g);

/// Raster palette, one pixel per cell:
///   pole-free on both sides          purple (128, 0, 128)
///   capped for x < 0 only            blue, lighter with more poles for x > 0
///   capped for x > 0 only            red, lighter with more poles for x < 0
///   finite on both sides with poles  green, darker with more poles
///   capped on both sides             white
///   unresolved                       grey (128, 128, 128)
///   failed                           black
std::array<std::uint8_t, 3> scan_color(const ScanCell& c);

/// Binary P6 image with u to the right and v upwards.
void write_scan_ppm(std::ostream& os, const ScanGrid& g);

/// Header u,v; one row per point.
void write_polyline_csv(std::ostream& os, const std::vector<Eigen::Vector2d>& pts);

/// {"num": [...], "den": [...]} with exact coefficient strings, constant
/// term first, plus the text form.
Json ratfunc_json(const RatFunc& r);
Json rational_triple_json(const RationalTriple& r);

}  // namespace spiv
