// cw: command-line front end for the constant-width kernel.
//
// Exit status 2 means the input or flags were rejected. Exit status 3 means
// a checked identity failed.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cwpoly/cwpoly.hpp"

using namespace cwpoly;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitIdentity = 3;

struct Options {
  std::string command;
  std::string input;
  std::string a;
  std::vector<std::string> c;
  std::string d = "1";
  // Unset means the backend default: 64 steps and tol 1e-6 for rationals,
  // 10000 steps and tol 1e-9 for floats.
  std::optional<std::size_t> steps;
  std::optional<double> tol;
  std::string backend = "rational";
  std::uint64_t seed = 0;
  std::size_t samples = 4;
  std::string svg;
  std::string out;
  std::string csv;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw GeometryError(ErrorKind::invalid_input, "cannot write file '" + path + "'");
  f << text;
  if (!f) throw GeometryError(ErrorKind::invalid_input, "failed writing '" + path + "'");
}

void emit(const Options& opt, const Json& j) {
  std::string text = j.dump(2) + "\n";
  if (opt.out.empty()) {
    std::cout << text;
  } else {
    write_file(opt.out, text);
  }
}

std::string error_label(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_input: return "invalid input";
    case ErrorKind::non_convex: return "non-convex input";
    case ErrorKind::degenerate_diagonal: return "degenerate diagonal";
    case ErrorKind::not_parallel: return "not of constant width";
    case ErrorKind::length_mismatch: return "length mismatch";
    case ErrorKind::identity_failure: return "identity failure";
  }
  return "error";
}

template <Scalar T>
Points<T> convert(const Points<Rational>& in) {
  Points<T> out;
  for (const auto& q : in) out.push_back({scalar_from_rational<T>(q.x), scalar_from_rational<T>(q.y)});
  return out;
}

template <Scalar T>
struct Prepared {
  PairedPolygon<T> p;
  MinkowskiPlane<T> plane;
};

/// Ingests the document and builds the plane. With a supplied ball the
/// polygon must have constant width in it.
template <Scalar T>
Prepared<T> prepare(const PolygonDocument& doc, const Options& opt) {
  auto poly = ConvexPolygon<T>::from_points(convert<T>(doc.vertices));
  PairedPolygon<T> p = reorder_parallel(poly);
  validate_paired(p);
  if (doc.ball) {
    CenteredBall<T> u{Cyclic<Vec2<T>>(convert<T>(*doc.ball))};
    validate_centered_ball(u);
    if (u.size() != p.size()) {
      throw GeometryError(ErrorKind::identity_failure, "polygon is not of constant width in the given ball: " +
                                                           std::to_string(p.size()) + " paired vertices against " +
                                                           std::to_string(u.size()));
    }
    auto r = is_constant_width(p, u);
    if (!r.constant) {
      throw GeometryError(ErrorKind::identity_failure,
                          "polygon is not of constant width in the given ball, witness index " +
                              (r.witness ? std::to_string(*r.witness) : std::string("none")));
    }
    return {p, MinkowskiPlane<T>{u, dual_ball(u), p.n, r.a}};
  }
  T a = opt.a.empty() ? T(scalar_from_rational<T>(Rational(1, 2))) : parse_scalar<T>(opt.a);
  return {p, make_plane(p, a)};
}

template <Scalar T>
std::vector<T> equidistant_params(const Options& opt) {
  std::vector<T> cs;
  for (const auto& s : opt.c) cs.push_back(parse_scalar<T>(s));
  return cs;
}

template <Scalar T>
Json header(const Options& opt, const PolygonDocument& doc, const Prepared<T>& prep) {
  Json j;
  j["command"] = opt.command;
  j["input"] = doc.name;
  j["backend"] = ScalarTraits<T>::name;
  j["n"] = prep.p.n;
  j["a"] = scalar_json(prep.plane.a);
  j["P"] = points_json(prep.p.vertices);
  return j;
}

Json cusp_json(const CuspReport& r) {
  Json j;
  j["degenerate"] = r.degenerate;
  j["count"] = r.count();
  j["indices"] = r.indices;
  return j;
}

template <Scalar T>
int run(const Options& opt, const PolygonDocument& doc) {
  Prepared<T> prep = prepare<T>(doc, opt);
  const auto& p = prep.p;
  const auto& plane = prep.plane;
  Json j = header(opt, doc, prep);
  std::optional<Scene> scene;
  auto base_layer = [&] { return Layer{"polygon-p", LayerStyle::base, {shape_of(p.vertices)}}; };

  if (opt.command == "ball") {
    j["U"] = points_json(plane.u.vertices);
    j["area_U"] = scalar_json(polygon_area(plane.u.vertices));
    scene = Scene{{base_layer(), Layer{"ball-u", LayerStyle::ball, {shape_of(plane.u.vertices)}}}};
  } else if (opt.command == "dual") {
    j["U"] = points_json(plane.u.vertices);
    j["V"] = points_json(plane.v.vertices);
    scene = Scene{{Layer{"ball-u", LayerStyle::ball, {shape_of(plane.u.vertices)}},
                   Layer{"dual-v", LayerStyle::thick, {shape_of(plane.v.vertices)}}}};
  } else if (opt.command == "central") {
    auto cm = central_equidistant(p, plane.u);
    j["M"] = points_json(cm.m);
    j["alphas"] = scalars_json(cm.alphas);
    j["betas"] = scalars_json(cm.betas);
    j["degenerate"] = cm.degenerate;
    j["cusps"] = cusp_json(cusps_of_m(cm));
    j["convexity_threshold"] = scalar_json(convexity_threshold(cm.alphas));
    scene = Scene{{base_layer()}};
    Json eqs = Json::array();
    auto cs = equidistant_params<T>(opt);
    for (std::size_t k = 0; k < cs.size(); ++k) {
      auto pc = equidistant(cm, plane.u, cs[k]);
      eqs.push_back(Json{{"c", scalar_json(cs[k])}, {"vertices", points_json(pc.vertices)}});
      scene->layers.push_back({"equidistant-" + std::to_string(k), LayerStyle::traced, {shape_of(pc.vertices)}});
    }
    if (!cs.empty()) j["equidistants"] = std::move(eqs);
    scene->layers.push_back({"central-m", LayerStyle::thick, {shape_of(cm.m, true)}});
  } else if (opt.command == "evolute") {
    auto ev = evolute(p, plane.u, plane.v);
    auto cm = central_equidistant(p, plane.u);
    j["E"] = points_json(ev.e);
    j["mus"] = scalars_json(ev.mus);
    j["cusps_E"] = cusp_json(evolute_cusps(ev));
    j["cusps_M"] = cusp_json(cusps_of_m(cm));
    scene = Scene{{base_layer(), Layer{"central-m", LayerStyle::thick, {shape_of(cm.m, true)}},
                   Layer{"evolute-e", LayerStyle::evolute, {shape_of(ev.e, true)}}}};
  } else if (opt.command == "involute") {
    auto cm = central_equidistant(p, plane.u);
    auto inv = involute(cm, plane.u, plane.v);
    T sa_m = signed_area(cm.m);
    T sa_n = signed_area(inv.n);
    T gap = signed_area_gap(inv.betas, plane.v.vertices);
    j["M"] = points_json(cm.m);
    j["N"] = points_json(inv.n);
    j["betas"] = scalars_json(inv.betas);
    j["SA_M"] = scalar_json(sa_m);
    j["SA_N"] = scalar_json(sa_n);
    j["gap"] = Json{{"expected", scalar_json(gap)}, {"actual", scalar_json(T(sa_m - sa_n))}};
    if (!same(gap, T(sa_m - sa_n))) throw GeometryError(ErrorKind::identity_failure, "signed-area gap mismatch");
    scene = Scene{{base_layer(), Layer{"central-m", LayerStyle::thick, {shape_of(cm.m, true)}},
                   Layer{"involute-n", LayerStyle::involute, {shape_of(inv.n, true)}}}};
  } else if (opt.command == "iterate") {
    constexpr bool exact = ScalarTraits<T>::exact;
    T tol = scalar_from_rational<T>(rational_from_double(opt.tol.value_or(exact ? 1e-6 : 1e-9)));
    auto trace = iterate_involutes(p, plane, opt.steps.value_or(exact ? 64 : 10000), tol);
    Json t = trace_json(trace);
    for (auto it = t.begin(); it != t.end(); ++it) j[it.key()] = it.value();
    // P(k, c) = M(k) + cU and Q(k, d) = N(k) + dV at the last step, with
    // their distances from the balls O + cU and O + dV.
    T c = opt.c.empty() ? plane.a : parse_scalar<T>(opt.c.front());
    T d = parse_scalar<T>(opt.d);
    const std::size_t last = trace.steps.size() - 1;
    auto fam = width_family(trace, plane, last, c, d);
    Json f{{"k", last}, {"c", scalar_json(c)}, {"P", points_json(fam.p.vertices)},
           {"distance_P", distance_to_ball(fam.p, trace.o, plane.u, c)}};
    if (fam.q) {
      f["d"] = scalar_json(d);
      f["Q"] = points_json(fam.q->vertices);
      f["distance_Q"] = distance_to_ball(*fam.q, trace.o, plane.v, d);
    }
    j["family"] = std::move(f);
    if (!opt.csv.empty()) write_file(opt.csv, trace_csv(trace));
    scene = iterate_scene(p, trace);
  } else if (opt.command == "scene") {
    auto cs = equidistant_params<T>(opt);
    scene = full_scene(p, plane, cs);
    j["layers"] = Json::array();
    for (const auto& l : scene->layers) j["layers"].push_back(l.id);
  }

  if (!opt.svg.empty() && scene) write_file(opt.svg, render_svg(*scene));
  emit(opt, j);
  return kExitOk;
}

template <Scalar T>
int run_verify(const Options& opt, const PolygonDocument& doc) {
  // Input problems are reported as such before any identity is checked.
  auto poly = ConvexPolygon<T>::from_points(convert<T>(doc.vertices));
  validate_paired(reorder_parallel(poly));
  if (doc.ball) validate_centered_ball(CenteredBall<T>{Cyclic<Vec2<T>>(convert<T>(*doc.ball))});

  VerifyOptions vo;
  if (!opt.a.empty()) vo.a = parse_rational(opt.a);
  if (!opt.c.empty()) vo.c = parse_rational(opt.c.front());
  if (opt.steps) vo.steps = *opt.steps;
  if (opt.tol) vo.tol = *opt.tol;
  vo.samples = opt.samples;
  vo.seed = opt.seed;
  Report report = verify_document<T>(doc, vo);
  emit(opt, to_json(report));
  for (const auto& c : report.checks) {
    if (!c.pass && c.actual.rfind("not run", 0) != 0) std::cerr << "cw: check " << c.check_id << " failed: " << c.actual << "\n";
  }
  return report.all_pass() ? kExitOk : kExitIdentity;
}

int dispatch(const Options& opt) {
  PolygonDocument doc = load_document(opt.input);
  bool exact = opt.backend == "rational";
  if (opt.command == "verify") return exact ? run_verify<Rational>(opt, doc) : run_verify<double>(opt, doc);
  return exact ? run<Rational>(opt, doc) : run<double>(opt, doc);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constant-width geometry of convex polygons"};
  app.require_subcommand(1);
  Options opt;

  struct Spec {
    const char* name;
    const char* help;
  };
  const std::vector<Spec> commands{
      {"ball", "unit ball U in which the polygon has constant width 2a"},
      {"dual", "unit ball U and its dual V"},
      {"central", "central equidistant M and optional equidistants (--c, repeatable)"},
      {"evolute", "evolute E, curvature radii and cusps"},
      {"involute", "involute N of the central equidistant and the signed-area gap"},
      {"iterate", "iterated involutes converging to the central point"},
      {"scene", "full figure: polygon, balls, equidistants, M, E and N"},
      {"verify", "run every invariant and print a JSON report"},
  };
  for (const auto& entry : commands) {
    CLI::App* sub = app.add_subcommand(entry.name, entry.help);
    sub->add_option("input", opt.input, "polygon JSON document")->required();
    sub->add_option("--a", opt.a, "half-width a (integer, decimal or p/q); default 1/2");
    sub->add_option("--c", opt.c, "equidistant parameter c");
    sub->add_option("--d", opt.d, "dual equidistant parameter d");
    sub->add_option("--steps", opt.steps, "maximum number of involute pairs")->check(CLI::PositiveNumber);
    sub->add_option("--tol", opt.tol, "stop once the front diameter is below this")->check(CLI::PositiveNumber);
    sub->add_option("--backend", opt.backend, "scalar backend")->check(CLI::IsMember({"rational", "float"}));
    sub->add_option("--seed", opt.seed, "seed recorded in reports");
    sub->add_option("--samples", opt.samples, "points per segment in the containment check");
    sub->add_option("--svg", opt.svg, "write an SVG figure");
    sub->add_option("--out", opt.out, "write JSON here instead of stdout");
    sub->add_option("--csv", opt.csv, "write the iteration trace as CSV");
    sub->callback([&opt, sub] { opt.command = sub->get_name(); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    return dispatch(opt);
  } catch (const GeometryError& e) {
    std::cerr << "cw: " << error_label(e.kind()) << ": " << e.what() << "\n";
    return e.kind() == ErrorKind::identity_failure ? kExitIdentity : kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "cw: error: " << e.what() << "\n";
    return kExitInput;
  }
}
