// Unit tests: regime detection and closed forms, point classification, the
// implicit-curve residual, boundary tracing, and CSV/SVG serialization.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>
#include <string>

#include "minregion/errors.hpp"
#include "minregion/io.hpp"
#include "minregion/region.hpp"

using namespace minregion;
using doctest::Approx;

namespace {

ProblemInstance axis_instance(double r, double s1 = 1.5, double s2 = 1.0,
                              double L = 10.0) {
  return ProblemInstance({-r, 0.0}, {r, 0.0}, s1, s2, L);
}

bool near_minimizer(const ProblemInstance& inst, double x, double y) {
  return (std::hypot(x - inst.x1_star[0], y - inst.x1_star[1]) < 1e-9 ||
          std::hypot(x - inst.x2_star[0], y - inst.x2_star[1]) < 1e-9);
}

}  // namespace

TEST_CASE("regime cases across the r sweep") {
  CHECK(regime(axis_instance(2.0)).kind == RegimeCase::TwoCusps);
  CHECK(regime(axis_instance(10.0 / 3.0)).kind == RegimeCase::TwoCusps);  // tie
  CHECK(regime(axis_instance(3.4)).kind == RegimeCase::OneCusp);
  CHECK(regime(axis_instance(4.0)).kind == RegimeCase::OneCusp);
  CHECK(regime(axis_instance(5.0)).kind == RegimeCase::OneCusp);  // tie
  CHECK(regime(axis_instance(6.0)).kind == RegimeCase::ThreeArcs);
  CHECK(regime(axis_instance(25.0 / 3.0)).kind == RegimeCase::Singleton);
  CHECK(regime(axis_instance(9.0)).kind == RegimeCase::Empty);
  CHECK(regime(axis_instance(0.0)).kind == RegimeCase::TwoCusps);

  const RegionRegime reg = regime(axis_instance(2.0));
  CHECK(reg.thresh_arc1 == Approx(10.0 / 3.0).epsilon(1e-14));
  CHECK(reg.thresh_arc2 == Approx(5.0).epsilon(1e-14));
  CHECK(reg.thresh_singleton == Approx(25.0 / 3.0).epsilon(1e-14));
  CHECK(reg.beta == Approx(1.0 / 1.5).epsilon(1e-14));
}

TEST_CASE("junction closed forms match the frozen reference values") {
  const RegionRegime r4 = regime(axis_instance(4.0));
  REQUIRE(r4.lambda1.has_value());
  REQUIRE(r4.nu1.has_value());
  CHECK_FALSE(r4.nu2.has_value());
  CHECK(*r4.lambda1 == Approx(2.25396825396825).epsilon(1e-12));
  CHECK(*r4.nu1 == Approx(2.30918286906899).epsilon(1e-12));

  const RegionRegime r6 = regime(axis_instance(6.0));
  REQUIRE(r6.lambda1.has_value());
  REQUIRE(r6.nu1.has_value());
  REQUIRE(r6.lambda2.has_value());
  REQUIRE(r6.nu2.has_value());
  CHECK(*r6.lambda1 == Approx(0.0740740740740744).epsilon(1e-10).scale(1.0));
  CHECK(*r6.nu1 == Approx(2.74773881348021).epsilon(1e-12));
  CHECK(*r6.lambda2 == Approx(-3.70833333333333).epsilon(1e-12));
  CHECK(*r6.nu2 == Approx(2.39755373013597).epsilon(1e-12));

  // junctions actually lie on their circles and on the curve
  const ProblemInstance inst = axis_instance(6.0);
  const Vec j1{*r6.lambda1, *r6.nu1};
  CHECK(distance(j1, inst.x1_star) == Approx(10.0 / 1.5).epsilon(1e-12));
  const AngleReport rep = angle_report(inst, j1);
  REQUIRE(rep.defined);
  CHECK(std::abs(rep.slack) < 1e-10);
}

TEST_CASE("singleton point and its classification") {
  const ProblemInstance inst = axis_instance(25.0 / 3.0);
  const Vec p = singleton_point(inst);
  CHECK(p[0] == Approx(-5.0 / 3.0).epsilon(1e-12));
  CHECK(std::abs(p[1]) < 1e-12);
  const Membership m = classify(inst, p);
  CHECK(m.location == Location::Boundary);
  CHECK(m.piece == BoundaryPiece::SingletonPoint);
  CHECK(classify(inst, {p[0] + 1e-3, p[1]}).location == Location::Exterior);
  CHECK(classify(inst, {p[0], p[1] + 1e-3}).location == Location::Exterior);
  CHECK_THROWS_AS(singleton_point(axis_instance(2.0)), OutOfDomain);
  // swapped caller labels land on the same global point
  const ProblemInstance sw({25.0 / 3.0, 0.0}, {-25.0 / 3.0, 0.0}, 1.0, 1.5,
                           10.0);
  const Vec psw = singleton_point(sw);
  CHECK(psw[0] == Approx(-5.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("membership at reference points, TwoCusps r=2") {
  const ProblemInstance inst = axis_instance(2.0);
  const AngleReport origin = angle_report(inst, {0.0, 0.0});
  REQUIRE(origin.defined);
  CHECK(origin.slack == Approx(2.63554207878407).epsilon(1e-12));
  CHECK(in_outer(inst, {0.0, 0.0}));
  CHECK(in_inner(inst, {0.0, 0.0}));
  CHECK(classify(inst, {0.0, 0.0}).location == Location::Interior);

  // cusps at the minimizers, labeled with the caller's numbering
  CHECK(classify(inst, {-2.0, 0.0}).location == Location::Boundary);
  CHECK(classify(inst, {-2.0, 0.0}).piece == BoundaryPiece::CuspX1);
  CHECK(classify(inst, {2.0, 0.0}).piece == BoundaryPiece::CuspX2);

  // lobe beyond the right minimizer is genuinely inside
  CHECK(classify(inst, {2.01, 0.05}).location == Location::Interior);
  CHECK(in_inner(inst, {2.01, 0.05}));

  CHECK(classify(inst, {100.0, 100.0}).location == Location::Exterior);
  CHECK(classify(inst, {-2.0 - 10.0 / 1.5 - 1e-3, 0.0}).location ==
        Location::Exterior);
  CHECK_FALSE(in_outer(inst, {100.0, 100.0}));
}

TEST_CASE("membership with swapped caller labels") {
  const ProblemInstance sw({2.0, 0.0}, {-2.0, 0.0}, 1.0, 1.5, 10.0);
  // cusp at the caller's x1* = (2, 0) must be reported as CuspX1
  CHECK(classify(sw, {2.0, 0.0}).piece == BoundaryPiece::CuspX1);
  CHECK(classify(sw, {-2.0, 0.0}).piece == BoundaryPiece::CuspX2);
  CHECK(classify(sw, {0.0, 0.0}).location == Location::Interior);
}

TEST_CASE("empty regime classifies everything exterior") {
  const ProblemInstance inst = axis_instance(9.0);
  CHECK(classify(inst, {0.0, 0.0}).location == Location::Exterior);
  CHECK(classify(inst, {-9.0, 0.0}).location == Location::Exterior);
  CHECK_FALSE(in_outer(inst, {0.0, 0.0}));
  CHECK_FALSE(in_inner(inst, {0.0, 0.0}));
}

TEST_CASE("residual is undefined only at minimizers / outside balls") {
  const ProblemInstance inst = axis_instance(2.0);
  CHECK_THROWS_AS(t_residual(inst, {-2.0, 0.0}), OutOfDomain);
  CHECK_THROWS_AS(t_residual(inst, {2.0, 0.0}), OutOfDomain);
  CHECK_THROWS_AS(t_residual(inst, {-2.0 - 10.0 / 1.5 - 1e-3, 0.0}),
                  OutOfDomain);
  CHECK_NOTHROW(t_residual(inst, {0.0, 0.0}));
}

TEST_CASE("residual sign opposes the slack sign") {
  const ProblemInstance inst = axis_instance(4.0);
  // interior: slack > 0, residual < 0
  const AngleReport in = angle_report(inst, {-1.0, 0.5});
  REQUIRE(in.defined);
  CHECK(in.slack > 0.0);
  CHECK(t_residual(inst, {-1.0, 0.5}) < 0.0);
  // in-lens but outside the region: slack < 0, residual > 0
  const AngleReport out = angle_report(inst, {0.0, 5.0});
  REQUIRE(out.defined);
  CHECK(out.slack < 0.0);
  CHECK(t_residual(inst, {0.0, 5.0}) > 0.0);
}

TEST_CASE("trace structure per regime") {
  const int samples = 48;

  SUBCASE("TwoCusps: one closed loop plus two cusp points") {
    const BoundaryTrace tr = trace_boundary(axis_instance(2.0), samples);
    CHECK(tr.kind == RegimeCase::TwoCusps);
    REQUIRE(tr.segments.size() == 3);
    CHECK(tr.segments[0].kind == SegmentKind::CurveT);
    CHECK(tr.segments[0].closed);
    CHECK(tr.segments[0].points.size() == 2 * samples);
    CHECK(tr.segments[1].kind == SegmentKind::IsolatedPoint);
    CHECK(tr.segments[2].kind == SegmentKind::IsolatedPoint);
    CHECK(tr.segments[1].points[0][0] == Approx(-2.0).epsilon(1e-13));
    CHECK(tr.segments[2].points[0][0] == Approx(2.0).epsilon(1e-13));
  }

  SUBCASE("OneCusp: open curve, one arc, one cusp point") {
    const BoundaryTrace tr = trace_boundary(axis_instance(4.0), samples);
    REQUIRE(tr.segments.size() == 3);
    CHECK(tr.segments[0].kind == SegmentKind::CurveT);
    CHECK_FALSE(tr.segments[0].closed);
    CHECK(tr.segments[0].points.size() == 2 * samples + 1);
    CHECK(tr.segments[1].kind == SegmentKind::Arc1);
    CHECK(tr.segments[2].kind == SegmentKind::IsolatedPoint);
    CHECK(tr.segments[2].points[0][0] == Approx(-4.0).epsilon(1e-13));
    // curve endpoints are the exact junctions
    const RegionRegime reg = regime(axis_instance(4.0));
    CHECK(tr.segments[0].points.front()[0] ==
          Approx(*reg.lambda1).epsilon(1e-12));
    CHECK(tr.segments[0].points.front()[1] == Approx(*reg.nu1).epsilon(1e-12));
    CHECK(tr.segments[0].points.back()[1] == Approx(-*reg.nu1).epsilon(1e-12));
  }

  SUBCASE("ThreeArcs: two curve halves plus both arcs") {
    const BoundaryTrace tr = trace_boundary(axis_instance(6.0), samples);
    REQUIRE(tr.segments.size() == 4);
    std::multiset<SegmentKind> kinds;
    for (const auto& s : tr.segments) kinds.insert(s.kind);
    CHECK(kinds.count(SegmentKind::CurveT) == 2);
    CHECK(kinds.count(SegmentKind::Arc1) == 1);
    CHECK(kinds.count(SegmentKind::Arc2) == 1);
  }

  SUBCASE("Singleton: one isolated point") {
    const BoundaryTrace tr = trace_boundary(axis_instance(25.0 / 3.0), samples);
    REQUIRE(tr.segments.size() == 1);
    CHECK(tr.segments[0].kind == SegmentKind::IsolatedPoint);
    CHECK(tr.segments[0].points[0][0] == Approx(-5.0 / 3.0).epsilon(1e-9));
  }

  SUBCASE("Empty: no segments") {
    CHECK(trace_boundary(axis_instance(9.0), samples).segments.empty());
  }

  SUBCASE("unsupported dimension throws") {
    const ProblemInstance inst3({0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}, 1.0, 1.0,
                                5.0);
    CHECK_THROWS_AS(trace_boundary(inst3, samples), UnsupportedDimension);
  }
}

TEST_CASE("traced vertices satisfy their defining equations") {
  for (const double r : {2.0, 4.0, 6.0}) {
    const ProblemInstance inst = axis_instance(r);
    const BoundaryTrace tr = trace_boundary(inst, 64);
    for (const auto& seg : tr.segments) {
      if (seg.kind == SegmentKind::IsolatedPoint) continue;
      for (const auto& p : seg.points) {
        if (near_minimizer(inst, p[0], p[1])) continue;  // cusp anchors
        if (seg.kind == SegmentKind::CurveT) {
          const AngleReport rep = angle_report(inst, {p[0], p[1]});
          REQUIRE(rep.defined);
          CHECK(std::abs(rep.slack) < 1e-7);
          CHECK(std::abs(t_residual(inst, {p[0], p[1]})) < 1e-7);
        } else {
          const double rad =
              seg.kind == SegmentKind::Arc1 ? 10.0 / 1.5 : 10.0 / 1.0;
          const Vec& c = seg.kind == SegmentKind::Arc1 ? inst.x1_star
                                                       : inst.x2_star;
          CHECK(std::hypot(p[0] - c[0], p[1] - c[1]) ==
                Approx(rad).epsilon(1e-12));
          // arcs bound the region: the outer test holds on them
          CHECK(in_outer(inst, {p[0], p[1]}));
        }
      }
    }
  }
}

TEST_CASE("arc tags follow the caller labeling when swapped") {
  const ProblemInstance fwd = axis_instance(6.0);
  const ProblemInstance sw({6.0, 0.0}, {-6.0, 0.0}, 1.0, 1.5, 10.0);
  const BoundaryTrace ta = trace_boundary(fwd, 32);
  const BoundaryTrace tb = trace_boundary(sw, 32);
  auto arc_center_dist = [](const BoundaryTrace& tr, SegmentKind k,
                            const Vec& center) {
    for (const auto& seg : tr.segments)
      if (seg.kind == k)
        return std::hypot(seg.points[5][0] - center[0],
                          seg.points[5][1] - center[1]);
    return -1.0;
  };
  // Arc1 always lies on the circle around the caller's x1*
  CHECK(arc_center_dist(ta, SegmentKind::Arc1, fwd.x1_star) ==
        Approx(10.0 / 1.5).epsilon(1e-12));
  CHECK(arc_center_dist(tb, SegmentKind::Arc1, sw.x1_star) ==
        Approx(10.0 / 1.0).epsilon(1e-12));
  CHECK(arc_center_dist(tb, SegmentKind::Arc2, sw.x2_star) ==
        Approx(10.0 / 1.5).epsilon(1e-12));
}

TEST_CASE("CSV round-trip preserves tags and coordinates") {
  const BoundaryTrace tr = trace_boundary(axis_instance(6.0), 16);
  std::stringstream ss;
  write_trace_csv(ss, tr);
  const std::string text = ss.str();
  CHECK(text.rfind("segment_tag,idx,x1,x2\n", 0) == 0);
  std::stringstream in(text);
  const BoundaryTrace back = read_trace_csv(in);
  REQUIRE(back.segments.size() == tr.segments.size());
  for (std::size_t i = 0; i < tr.segments.size(); ++i) {
    CHECK(back.segments[i].kind == tr.segments[i].kind);
    REQUIRE(back.segments[i].points.size() == tr.segments[i].points.size());
    for (std::size_t j = 0; j < tr.segments[i].points.size(); ++j) {
      CHECK(back.segments[i].points[j][0] == tr.segments[i].points[j][0]);
      CHECK(back.segments[i].points[j][1] == tr.segments[i].points[j][1]);
    }
  }
}

TEST_CASE("CSV reader rejects malformed input") {
  std::stringstream no_header("curve_t,0,1,2\n");
  CHECK_THROWS_AS(read_trace_csv(no_header), InvalidInput);
  std::stringstream bad_tag("segment_tag,idx,x1,x2\nwiggle,0,1,2\n");
  CHECK_THROWS_AS(read_trace_csv(bad_tag), InvalidInput);
  std::stringstream bad_num("segment_tag,idx,x1,x2\ncurve_t,0,one,2\n");
  CHECK_THROWS_AS(read_trace_csv(bad_num), InvalidInput);
}

TEST_CASE("SVG output is color-keyed by segment tag") {
  const BoundaryTrace tr = trace_boundary(axis_instance(6.0), 16);
  std::stringstream ss;
  write_trace_svg(ss, tr);
  const std::string svg = ss.str();
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("stroke=\"blue\"") != std::string::npos);
  CHECK(svg.find("stroke=\"cyan\"") != std::string::npos);
  CHECK(svg.find("stroke=\"magenta\"") != std::string::npos);

  std::stringstream s2;
  write_trace_svg(s2, trace_boundary(axis_instance(2.0), 16));
  CHECK(s2.str().find("<circle") != std::string::npos);  // cusp dots
  CHECK(s2.str().find("<polygon") != std::string::npos);  // closed loop
}

TEST_CASE("regime/membership JSON serialization carries the key fields") {
  const json jr = to_json(regime(axis_instance(6.0)));
  CHECK(jr["case"] == "three_arcs");
  CHECK(jr["thresholds"]["singleton"].get<double>() ==
        Approx(25.0 / 3.0).epsilon(1e-14));
  CHECK(jr["lambda2"].is_number());
  const json jr2 = to_json(regime(axis_instance(2.0)));
  CHECK(jr2["nu1"].is_null());

  const ProblemInstance inst = axis_instance(2.0);
  const json jm =
      to_json(classify(inst, {0.0, 0.0}), angle_report(inst, {0.0, 0.0}));
  CHECK(jm["location"] == "interior");
  CHECK(jm["slack"].get<double>() == Approx(2.63554207878407).epsilon(1e-12));
  const json jout = to_json(classify(inst, {100.0, 0.0}),
                            angle_report(inst, {100.0, 0.0}));
  CHECK(jout["location"] == "exterior");
  CHECK(jout["slack"].is_null());
  CHECK(jout["defined"] == false);
}

TEST_CASE("config parsing reports field paths") {
  const json good = {{"instance",
                      {{"x1_star", {-2.0, 0.0}},
                       {"x2_star", {2.0, 0.0}},
                       {"sigma1", 1.5},
                       {"sigma2", 1.0},
                       {"L", 10.0}}},
                     {"tol", 1e-8},
                     {"seed", 99},
                     {"trials", 50},
                     {"samples", 32}};
  const CliConfig cfg = config_from_json(good);
  CHECK(cfg.tol == 1e-8);
  CHECK(cfg.seed == 99);
  CHECK(cfg.trials == 50);
  CHECK(cfg.samples == 32);
  CHECK(cfg.instance.sigma1 == 1.5);

  json missing = good;
  missing["instance"].erase("L");
  CHECK_THROWS_WITH_AS(config_from_json(missing),
                       "config: missing field 'instance.L'", InvalidInput);
  json badvec = good;
  badvec["instance"]["x1_star"] = "oops";
  CHECK_THROWS_AS(config_from_json(badvec), InvalidInput);
  json badtol = good;
  badtol["tol"] = -1.0;
  CHECK_THROWS_AS(config_from_json(badtol), InvalidInput);
  CHECK_THROWS_AS(config_from_file("/nonexistent/path.json"), InvalidInput);
}
