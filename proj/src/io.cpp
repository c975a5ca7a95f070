// Serialization (JSON results, CSV/SVG boundary dumps) and config parsing.
#include "minregion/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <utility>

#include "minregion/errors.hpp"

namespace minregion {

namespace {

json num_or_null(double v) {
  return std::isfinite(v) ? json(v) : json(nullptr);
}

json opt_or_null(const std::optional<double>& v) {
  return v.has_value() ? json(*v) : json(nullptr);
}

json membership_json(const Membership& m) {
  return json{{"location", to_string(m.location)},
              {"piece", to_string(m.piece)}};
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

const json& need(const json& j, const char* key, const std::string& path) {
  if (!j.is_object())
    throw InvalidInput("config: expected an object at '" + path + "'");
  auto it = j.find(key);
  if (it == j.end())
    throw InvalidInput("config: missing field '" + path + "." + key + "'");
  return *it;
}

double num_field(const json& j, const char* key, const std::string& path) {
  const json& v = need(j, key, path);
  if (!v.is_number())
    throw InvalidInput("config: field '" + path + "." + key +
                       "' must be a number");
  return v.get<double>();
}

Vec vec_field(const json& j, const char* key, const std::string& path) {
  const json& v = need(j, key, path);
  if (!v.is_array() || v.empty())
    throw InvalidInput("config: field '" + path + "." + key +
                       "' must be a nonempty number array");
  Vec out;
  out.reserve(v.size());
  for (const json& e : v) {
    if (!e.is_number())
      throw InvalidInput("config: field '" + path + "." + key +
                         "' must contain only numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

}  // namespace

json to_json(const ProblemInstance& inst) {
  return json{{"x1_star", inst.x1_star},
              {"x2_star", inst.x2_star},
              {"sigma1", inst.sigma1},
              {"sigma2", inst.sigma2},
              {"L", inst.L}};
}

json to_json(const RegionRegime& reg) {
  return json{{"case", to_string(reg.kind)},
              {"r", reg.r},
              {"gamma1", reg.gamma1},
              {"gamma2", reg.gamma2},
              {"beta", reg.beta},
              {"thresholds",
               json{{"arc1", reg.thresh_arc1},
                    {"arc2", reg.thresh_arc2},
                    {"singleton", reg.thresh_singleton}}},
              {"lambda1", opt_or_null(reg.lambda1)},
              {"nu1", opt_or_null(reg.nu1)},
              {"lambda2", opt_or_null(reg.lambda2)},
              {"nu2", opt_or_null(reg.nu2)}};
}

json to_json(const Membership& m, const AngleReport& rep) {
  json j = membership_json(m);
  j["d1"] = rep.d1;
  j["d2"] = rep.d2;
  j["phi1"] = num_or_null(rep.phi1);
  j["phi2"] = num_or_null(rep.phi2);
  j["alpha1"] = num_or_null(rep.alpha1);
  j["alpha2"] = num_or_null(rep.alpha2);
  j["psi"] = num_or_null(rep.psi);
  j["slack"] = num_or_null(rep.slack);
  j["defined"] = rep.defined;
  return j;
}

json to_json(const BoundaryTrace& tr) {
  json segs = json::array();
  for (const TraceSegment& s : tr.segments) {
    json pts = json::array();
    for (const auto& p : s.points) pts.push_back(json::array({p[0], p[1]}));
    segs.push_back(json{{"tag", to_string(s.kind)},
                        {"closed", s.closed},
                        {"points", std::move(pts)}});
  }
  return json{{"case", to_string(tr.kind)},
              {"samples", tr.samples},
              {"segments", std::move(segs)}};
}

json to_json(const QuadraticFunction& f) {
  json rows = json::array();
  for (std::size_t i = 0; i < f.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < f.dim(); ++j) row.push_back(f.Q(i, j));
    rows.push_back(std::move(row));
  }
  return json{{"q", std::move(rows)}, {"b", f.b}, {"c", f.c}};
}

json to_json(const WitnessPair& w) {
  return json{{"point", w.point},
              {"g", w.g},
              {"f1", to_json(w.f1)},
              {"f2", to_json(w.f2)}};
}

json to_json(const AggregationResult& agg) {
  return json{{"point", agg.point},
              {"L_min", agg.L_min},
              {"regime_at_L", to_string(agg.regime_at_L)},
              {"membership", membership_json(agg.membership)}};
}

json to_json(const VerificationReport& rep) {
  json by = json::object();
  for (const auto& [key, tally] : rep.by_regime)
    by[key] = json{{"trials", tally.trials},
                   {"accepted", tally.accepted},
                   {"violations", tally.violations}};
  return json{{"mode", rep.mode},
              {"trials", rep.trials},
              {"accepted", rep.accepted},
              {"violations", rep.violations},
              {"worst_margin", rep.worst_margin},
              {"seed", rep.seed},
              {"by_regime", std::move(by)},
              {"ok", rep.ok()}};
}

ProblemInstance instance_from_json(const json& j) {
  const std::string path = "instance";
  return ProblemInstance(vec_field(j, "x1_star", path),
                         vec_field(j, "x2_star", path),
                         num_field(j, "sigma1", path),
                         num_field(j, "sigma2", path), num_field(j, "L", path));
}

CliConfig config_from_json(const json& j) {
  CliConfig cfg{instance_from_json(need(j, "instance", "config"))};
  if (j.contains("tol")) {
    if (!j["tol"].is_number() || !(j["tol"].get<double>() > 0.0))
      throw InvalidInput("config: field 'config.tol' must be a positive number");
    cfg.tol = j["tol"].get<double>();
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_integer() && !j["seed"].is_number_unsigned())
      throw InvalidInput("config: field 'config.seed' must be an integer");
    cfg.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("trials")) {
    if (!(j["trials"].is_number_integer() || j["trials"].is_number_unsigned()) ||
        j["trials"].get<long long>() < 1)
      throw InvalidInput(
          "config: field 'config.trials' must be a positive integer");
    cfg.trials = j["trials"].get<std::uint64_t>();
  }
  if (j.contains("samples")) {
    if (!j["samples"].is_number_integer() || j["samples"].get<int>() < 2)
      throw InvalidInput(
          "config: field 'config.samples' must be an integer >= 2");
    cfg.samples = j["samples"].get<int>();
  }
  return cfg;
}

CliConfig config_from_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvalidInput("config: cannot open file '" + path + "'");
  json j;
  try {
    j = json::parse(f);
  } catch (const json::parse_error& e) {
    throw InvalidInput("config: invalid JSON in '" + path + "': " + e.what());
  }
  return config_from_json(j);
}

void write_trace_csv(std::ostream& os, const BoundaryTrace& tr) {
  os << "segment_tag,idx,x1,x2\n";
  for (const TraceSegment& s : tr.segments) {
    const std::string tag = to_string(s.kind);
    for (std::size_t i = 0; i < s.points.size(); ++i)
      os << tag << ',' << i << ',' << fmt17(s.points[i][0]) << ','
         << fmt17(s.points[i][1]) << '\n';
  }
}

BoundaryTrace read_trace_csv(std::istream& is) {
  BoundaryTrace tr;
  tr.samples = 0;
  std::string line;
  if (!std::getline(is, line) || line.rfind("segment_tag", 0) != 0)
    throw InvalidInput("trace csv: missing header row");
  auto kind_of = [](const std::string& tag) {
    if (tag == "curve_t") return SegmentKind::CurveT;
    if (tag == "arc1") return SegmentKind::Arc1;
    if (tag == "arc2") return SegmentKind::Arc2;
    if (tag == "isolated_point") return SegmentKind::IsolatedPoint;
    throw InvalidInput("trace csv: unknown segment tag '" + tag + "'");
  };
  std::string prev_tag;
  long prev_idx = -1;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string tag, idx_s, x_s, y_s;
    if (!std::getline(row, tag, ',') || !std::getline(row, idx_s, ',') ||
        !std::getline(row, x_s, ',') || !std::getline(row, y_s))
      throw InvalidInput("trace csv: malformed row '" + line + "'");
    long idx;
    double x, y;
    try {
      idx = std::stol(idx_s);
      x = std::stod(x_s);
      y = std::stod(y_s);
    } catch (const std::exception&) {
      throw InvalidInput("trace csv: non-numeric row '" + line + "'");
    }
    if (tag != prev_tag || idx <= prev_idx || tr.segments.empty()) {
      TraceSegment seg;
      seg.kind = kind_of(tag);
      tr.segments.push_back(std::move(seg));
      prev_tag = tag;
    }
    prev_idx = idx;
    tr.segments.back().points.push_back({x, y});
  }
  return tr;
}

void write_trace_svg(std::ostream& os, const BoundaryTrace& tr) {
  double xlo = 0.0, xhi = 1.0, ylo = 0.0, yhi = 1.0;
  bool first = true;
  for (const TraceSegment& s : tr.segments)
    for (const auto& p : s.points) {
      if (first) {
        xlo = xhi = p[0];
        ylo = yhi = p[1];
        first = false;
      } else {
        xlo = std::min(xlo, p[0]);
        xhi = std::max(xhi, p[0]);
        ylo = std::min(ylo, p[1]);
        yhi = std::max(yhi, p[1]);
      }
    }
  const double extent = std::max({xhi - xlo, yhi - ylo, 1e-6});
  const double pad = 0.1 * extent;
  xlo -= pad;
  xhi += pad;
  ylo -= pad;
  yhi += pad;
  const double width = 640.0;
  const double s = width / (xhi - xlo);
  const double height = std::max(64.0, std::ceil((yhi - ylo) * s));
  auto px = [&](double x) { return (x - xlo) * s; };
  auto py = [&](double y) { return (yhi - y) * s; };
  auto color_of = [](SegmentKind k) {
    switch (k) {
      case SegmentKind::CurveT: return "blue";
      case SegmentKind::Arc1: return "cyan";
      case SegmentKind::Arc2: return "magenta";
      case SegmentKind::IsolatedPoint: return "black";
    }
    return "black";
  };
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
     << height << "\">\n";
  os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  char buf[64];
  for (const TraceSegment& seg : tr.segments) {
    if (seg.kind == SegmentKind::IsolatedPoint || seg.points.size() == 1) {
      for (const auto& p : seg.points) {
        std::snprintf(buf, sizeof buf, "%.3f\" cy=\"%.3f", px(p[0]), py(p[1]));
        os << "  <circle cx=\"" << buf << "\" r=\"3\" fill=\"black\"/>\n";
      }
      continue;
    }
    os << (seg.closed ? "  <polygon" : "  <polyline") << " fill=\"none\" stroke=\""
       << color_of(seg.kind) << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < seg.points.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.3f,%.3f", px(seg.points[i][0]),
                    py(seg.points[i][1]));
      os << (i ? " " : "") << buf;
    }
    os << "\"/>\n";
  }
  os << "</svg>\n";
}

}  // namespace minregion
