// JSON / CSV / SVG serialization for library results, and config parsing
// for the command-line driver.
#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "minregion/federated.hpp"
#include "minregion/quadratic.hpp"
#include "minregion/region.hpp"
#include "minregion/verify.hpp"

namespace minregion {

using nlohmann::json;

// --- result -> JSON --------------------------------------------------------

json to_json(const ProblemInstance& inst);
json to_json(const RegionRegime& reg);
json to_json(const Membership& m, const AngleReport& rep);
json to_json(const BoundaryTrace& tr);  // includes per-segment point arrays
json to_json(const QuadraticFunction& f);
json to_json(const WitnessPair& w);
json to_json(const AggregationResult& agg);
json to_json(const VerificationReport& rep);

// --- JSON -> inputs --------------------------------------------------------

/// Parse a problem instance from JSON with keys x1_star, x2_star (arrays),
/// sigma1, sigma2, L (numbers).  Throws InvalidInput naming the offending
/// field on any missing/ill-typed entry.
ProblemInstance instance_from_json(const json& j);

/// Driver configuration: the instance plus optional knobs.
struct CliConfig {
  ProblemInstance instance;
  double tol = kDefaultClassifyTol;
  std::uint64_t seed = 12345;
  std::uint64_t trials = 1000;
  int samples = 512;
};

/// Parse a config object: required "instance" sub-object, optional "tol",
/// "seed", "trials", "samples".  Field errors name their JSON path.
CliConfig config_from_json(const json& j);
CliConfig config_from_file(const std::string& path);

// --- boundary trace <-> CSV / SVG ------------------------------------------

/// CSV columns: segment_tag,idx,x1,x2 — one row per sampled point, segments
/// in emission order, idx restarting at 0 per segment.
void write_trace_csv(std::ostream& os, const BoundaryTrace& tr);
BoundaryTrace read_trace_csv(std::istream& is);

/// Self-contained SVG: polylines per segment (attainability curve blue,
/// curvature-circle arcs cyan / magenta), isolated points as black dots.
void write_trace_svg(std::ostream& os, const BoundaryTrace& tr);

}  // namespace minregion
