#include <gtest/gtest.h>

#include <random>

#include "support/fuzz.hpp"

using namespace cwpoly;
using Q = Rational;
using P2 = Vec2<Q>;

namespace {

const Points<Q> kTriangle{{Q(0), Q(0)}, {Q(1), Q(0)}, {Q(0), Q(1)}};

}  // namespace

TEST(Document, ParsesNumbersStringsAndDecimals) {
  auto doc = parse_document(R"({"name": "mix", "vertices": [[0, "1/3"], [2.5, "0.125"], ["-7/14", 1e-3]]})");
  EXPECT_EQ(doc.name, "mix");
  ASSERT_EQ(doc.vertices.size(), 3u);
  EXPECT_EQ(doc.vertices[0], P2(Q(0), Q(1, 3)));
  EXPECT_EQ(doc.vertices[1], P2(Q(5, 2), Q(1, 8)));
  EXPECT_EQ(doc.vertices[2], P2(Q(-1, 2), Q(1, 1000)));
  EXPECT_FALSE(doc.ball.has_value());
}

TEST(Document, DecimalsBecomeBaseTenFractions) {
  // 0.1 is not a binary fraction; the parsed value must still be exactly 1/10
  auto doc = parse_document(R"({"vertices": [[0.1, 0.7], ["0.1", "-2.25e1"], [3, 0.3]]})");
  EXPECT_EQ(doc.vertices[0].x, Q(1, 10));
  EXPECT_EQ(doc.vertices[0].y, Q(7, 10));
  EXPECT_EQ(doc.vertices[1].x, Q(1, 10));
  EXPECT_EQ(doc.vertices[1].y, Q(-45, 2));
  EXPECT_EQ(doc.vertices[2].y, Q(3, 10));
}

TEST(Document, RejectsMalformedInput) {
  EXPECT_THROW(parse_document("{"), GeometryError);
  EXPECT_THROW(parse_document("[]"), GeometryError);
  EXPECT_THROW(parse_document(R"({"name": "x"})"), GeometryError);
  EXPECT_THROW(parse_document(R"({"vertices": [[0, 0, 0]]})"), GeometryError);
  EXPECT_THROW(parse_document(R"({"vertices": [[0, true]]})"), GeometryError);
  EXPECT_THROW(parse_document(R"({"vertices": [["1/0", 0]]})"), GeometryError);
  EXPECT_THROW(parse_document(R"({"vertices": [["abc", 0]]})"), GeometryError);
  EXPECT_THROW(load_document("/nonexistent/file.json"), GeometryError);
  try {
    parse_document("{");
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::invalid_input);
  }
}

TEST(Document, RoundTripIsValueIdentical) {
  std::mt19937_64 rng(113);
  for (int trial = 0; trial < 50; ++trial) {
    PolygonDocument doc;
    doc.name = "r" + std::to_string(trial);
    std::uniform_int_distribution<long> num(-1000, 1000), den(1, 97);
    for (int i = 0; i < 6; ++i) doc.vertices.push_back({Q(num(rng), den(rng)), Q(num(rng), den(rng))});
    if (trial % 2) doc.ball = doc.vertices;
    Json once = to_json(doc);
    PolygonDocument back = parse_document(once.dump());
    EXPECT_EQ(back.name, doc.name);
    EXPECT_EQ(back.vertices, doc.vertices);
    EXPECT_EQ(back.ball, doc.ball);
    EXPECT_EQ(to_json(back).dump(), once.dump());
  }
}

TEST(Report, SummaryAndFields) {
  Report r;
  r.input = "t";
  r.backend = "rational";
  r.seed = 42;
  r.checks.push_back({"a", "1", "1", true});
  r.checks.push_back({"b", "1", "2", false});
  Json j = to_json(r);
  EXPECT_EQ(j["seed"], 42);
  EXPECT_EQ(j["summary"]["total"], 2);
  EXPECT_EQ(j["summary"]["passed"], 1);
  EXPECT_EQ(j["summary"]["failed"], 1);
  EXPECT_EQ(j["checks"][1]["check_id"], "b");
  EXPECT_EQ(j["checks"][1]["backend"], "rational");
  EXPECT_EQ(j["checks"][1]["pass"], false);
  EXPECT_FALSE(r.all_pass());
}

TEST(Verify, TriangleReport) {
  PolygonDocument doc{"triangle", kTriangle, std::nullopt};
  VerifyOptions opts;
  opts.seed = 7;
  for (int backend = 0; backend < 2; ++backend) {
    Report r = backend == 0 ? verify_document<Q>(doc, opts) : verify_document<double>(doc, opts);
    EXPECT_TRUE(r.all_pass());
    EXPECT_EQ(r.seed, 7u);
    ASSERT_EQ(r.checks.size(), verify_check_ids().size());
    for (std::size_t i = 0; i < r.checks.size(); ++i) EXPECT_EQ(r.checks[i].check_id, verify_check_ids()[i]);
    if (backend == 0) {
      auto find = [&](const std::string& id) {
        for (const auto& c : r.checks) {
          if (c.check_id == id) return c;
        }
        return CheckRecord{};
      };
      EXPECT_EQ(find("cw.barbier").expected, "3");
      EXPECT_EQ(find("cw.barbier").actual, "3");
      EXPECT_EQ(find("involute.signed_area_gap").expected, "3/16");
      EXPECT_EQ(find("involute.signed_area_gap").actual, "3/16");
    }
  }
}

TEST(Verify, SymmetricSquareTakesDegeneratePath) {
  PolygonDocument doc{"square", {{Q(0), Q(0)}, {Q(1), Q(0)}, {Q(1), Q(1)}, {Q(0), Q(1)}}, std::nullopt};
  Report r = verify_document<Q>(doc, VerifyOptions{});
  EXPECT_TRUE(r.all_pass());
  for (const auto& c : r.checks) {
    if (c.check_id == "cw.cusps_m_parity") EXPECT_EQ(c.actual, "degenerate");
    if (c.check_id == "involute.signed_area_gap") EXPECT_EQ(c.actual, "0");
    if (c.check_id == "cw.central_v_length_zero") EXPECT_EQ(c.actual, "0");
  }
}

TEST(Verify, NotConstantWidthInGivenBall) {
  PolygonDocument doc;
  doc.name = "perturbed";
  doc.vertices = {{Q(0), Q(0)}, {Q(2), Q(0)}, {Q(2), Q(1)}, {Q(1), Q(2)}, {Q(-1), Q(2)}, {Q(-1), Q(1)}};
  doc.ball = Points<Q>{{Q(0), Q(-1)}, {Q(1), Q(-1)}, {Q(1), Q(0)}, {Q(0), Q(1)}, {Q(-1), Q(1)}, {Q(-1), Q(0)}};
  Report r = verify_document<Q>(doc, VerifyOptions{});
  EXPECT_FALSE(r.all_pass());
  EXPECT_EQ(r.checks.size(), verify_check_ids().size());
  bool seen = false;
  for (const auto& c : r.checks) {
    if (c.check_id == "ball.constant_width") {
      seen = true;
      EXPECT_FALSE(c.pass);
      EXPECT_NE(c.actual.find("witness index 0"), std::string::npos);
    }
  }
  EXPECT_TRUE(seen);

  // the same polygon measured in its own ball passes
  doc.ball.reset();
  EXPECT_TRUE(verify_document<Q>(doc, VerifyOptions{}).all_pass());
}

TEST(Verify, FuzzAllPass) {
  std::mt19937_64 rng(127);
  VerifyOptions opts;
  opts.steps = 4;
  opts.samples = 2;
  for (int trial = 0; trial < 20; ++trial) {
    auto raw = cwtest::random_convex(rng);
    PolygonDocument doc{"fuzz", raw, std::nullopt};
    Report r = verify_document<Q>(doc, opts);
    for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << c.check_id << ": " << c.actual;
  }
}

TEST(Csv, HeaderAndRows) {
  auto s = cwtest::make_setup<Q>(kTriangle);
  auto trace = iterate_involutes(s.p, s.plane, 2, Q(1, 1000000));
  std::string csv = trace_csv(trace);
  EXPECT_EQ(csv.rfind("k,SA_M,SA_N,diameter\n", 0), 0u);
  EXPECT_NE(csv.find("\n0,1/4,,"), std::string::npos);
  EXPECT_NE(csv.find("\n1,"), std::string::npos);
  std::size_t lines = std::count(csv.begin(), csv.end(), '\n');
  EXPECT_EQ(lines, trace.steps.size() + 1);
}

TEST(Svg, TriangleSceneHasSixLayers) {
  auto s = cwtest::make_setup<Q>(kTriangle);
  Scene scene = full_scene(s.p, s.plane);
  ASSERT_EQ(scene.layers.size(), 6u);
  std::string svg = render_svg(scene);
  for (const char* id : {"polygon-p", "ball-u", "dual-v", "central-m", "evolute-e", "involute-n"}) {
    EXPECT_NE(svg.find(std::string("<g id=\"") + id + "\""), std::string::npos) << id;
  }
  EXPECT_EQ(svg, render_svg(full_scene(s.p, s.plane)));
}

TEST(Svg, OctagonWithTwoEquidistants) {
  Points<Q> oct{{Q(0), Q(0)}, {Q(2), Q(0)}, {Q(5), Q(3)}, {Q(5), Q(5)},
                {Q(3), Q(7)}, {Q(0), Q(7)}, {Q(-2), Q(5)}, {Q(-2), Q(2)}};
  auto s = cwtest::make_setup<Q>(oct);
  ASSERT_EQ(s.p.n, 4u);
  Scene scene = full_scene(s.p, s.plane, std::vector<Q>{Q(1), Q(2)});
  ASSERT_TRUE(scene.has_layer("equidistant-0") && scene.has_layer("equidistant-1"));
  for (const auto& l : scene.layers) {
    if (l.id.rfind("equidistant-", 0) == 0) EXPECT_EQ(l.shapes.front().size(), 8u);
    if (l.id == "central-m") EXPECT_EQ(l.shapes.front().size(), 4u);
  }
}

TEST(Svg, ViewBoxMarginAndErrors) {
  Scene scene{{Layer{"polygon-p", LayerStyle::base, {{{0, 0}, {10, 0}, {10, 5}}}}}};
  std::string svg = render_svg(scene);
  EXPECT_NE(svg.find("viewBox=\"-0.500000 -5.500000 11.000000 6.000000\""), std::string::npos);
  EXPECT_THROW(render_svg(Scene{}), GeometryError);
  EXPECT_THROW(render_svg(Scene{{Layer{"x", LayerStyle::base, {}}}}), GeometryError);
  // a front collapsed to a point is drawn as a dot
  Scene dot{{Layer{"central-m", LayerStyle::thick, {{{1, 1}, {1, 1}}}}}};
  EXPECT_NE(render_svg(dot).find("<circle"), std::string::npos);
}
