#pragma once

// Reading and writing polygon documents, plus report and trace output.
//
// A polygon document looks like
//   {"name": "triangle", "vertices": [[0, 0], [1, 0], ["0", "1/1"]]}
// Coordinates are JSON numbers or strings holding an integer, a decimal or
// "p/q". An optional "ball" lists the vertices of a centred unit ball to test
// the polygon against instead of the ball built from the polygon itself.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cwpoly/iterate.hpp"

namespace cwpoly {

using Json = nlohmann::ordered_json;

struct PolygonDocument {
  std::string name;
  Points<Rational> vertices;
  std::optional<Points<Rational>> ball;
};

namespace detail {

inline Rational coordinate_from_json(const Json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Rational(j.get<unsigned long long>()) : Rational(j.get<long long>());
  }
  if (j.is_number_float()) return rational_from_double(j.get<double>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw GeometryError(ErrorKind::invalid_input, "coordinate must be a number or a string");
}

inline Points<Rational> points_from_json(const Json& j, const char* field) {
  if (!j.is_array()) throw GeometryError(ErrorKind::invalid_input, std::string(field) + " must be an array");
  Points<Rational> out;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2) {
      throw GeometryError(ErrorKind::invalid_input, std::string(field) + " entries must be [x, y] pairs");
    }
    out.push_back({coordinate_from_json(item[0]), coordinate_from_json(item[1])});
  }
  return out;
}

}  // namespace detail

inline PolygonDocument document_from_json(const Json& j) {
  if (!j.is_object()) throw GeometryError(ErrorKind::invalid_input, "document must be a JSON object");
  if (!j.contains("vertices")) throw GeometryError(ErrorKind::invalid_input, "document has no \"vertices\"");
  PolygonDocument doc;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw GeometryError(ErrorKind::invalid_input, "\"name\" must be a string");
    doc.name = j["name"].get<std::string>();
  }
  doc.vertices = detail::points_from_json(j["vertices"], "vertices");
  if (j.contains("ball")) doc.ball = detail::points_from_json(j["ball"], "ball");
  return doc;
}

inline PolygonDocument parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw GeometryError(ErrorKind::invalid_input, std::string("malformed JSON: ") + e.what());
  }
  return document_from_json(j);
}

inline PolygonDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GeometryError(ErrorKind::invalid_input, "cannot read file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  PolygonDocument doc = parse_document(buf.str());
  if (doc.name.empty()) doc.name = path;
  return doc;
}

/// Scalars go out as exact "p/q" strings (rational) or JSON numbers (float).
template <Scalar T>
Json scalar_json(const T& x) {
  if constexpr (ScalarTraits<T>::exact) {
    return x.str();
  } else {
    return x;
  }
}

template <Scalar T>
Json point_json(const Vec2<T>& p) {
  return Json::array({scalar_json(p.x), scalar_json(p.y)});
}

template <class Range>
Json points_json(const Range& pts) {
  Json out = Json::array();
  for (const auto& p : pts) out.push_back(point_json(p));
  return out;
}

template <class Range>
Json scalars_json(const Range& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(scalar_json(x));
  return out;
}

inline Json to_json(const PolygonDocument& doc) {
  Json j;
  if (!doc.name.empty()) j["name"] = doc.name;
  j["vertices"] = points_json(doc.vertices);
  if (doc.ball) j["ball"] = points_json(*doc.ball);
  return j;
}

struct CheckRecord {
  std::string check_id;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct Report {
  std::string input;
  std::string backend;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> checks;

  std::size_t passed() const {
    std::size_t count = 0;
    for (const auto& c : checks) count += c.pass;
    return count;
  }
  std::size_t failed() const { return checks.size() - passed(); }
  bool all_pass() const { return failed() == 0; }
};

inline Json to_json(const Report& r) {
  Json j;
  j["input"] = r.input;
  j["backend"] = r.backend;
  j["seed"] = r.seed;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back(Json{{"check_id", c.check_id},
                          {"expected", c.expected},
                          {"actual", c.actual},
                          {"pass", c.pass},
                          {"backend", r.backend}});
  }
  j["checks"] = std::move(checks);
  j["summary"] = Json{{"total", r.checks.size()}, {"passed", r.passed()}, {"failed", r.failed()}};
  return j;
}

/// One row per step. The SA_N column is empty at k = 0.
template <Scalar T>
std::string trace_csv(const IterationTrace<T>& trace) {
  std::string out = "k,SA_M,SA_N,diameter\n";
  for (const auto& step : trace.steps) {
    out += std::to_string(step.k);
    out += ',';
    out += to_string(step.sa_m);
    out += ',';
    if (step.sa_n) out += to_string(*step.sa_n);
    out += ',';
    out += ScalarTraits<double>::to_string(step.diameter);
    out += '\n';
  }
  return out;
}

template <Scalar T>
Json trace_json(const IterationTrace<T>& trace) {
  Json steps = Json::array();
  for (const auto& step : trace.steps) {
    Json s;
    s["k"] = step.k;
    s["M"] = points_json(step.m);
    if (step.n) s["N"] = points_json(*step.n);
    s["SA_M"] = scalar_json(step.sa_m);
    if (step.sa_n) s["SA_N"] = scalar_json(*step.sa_n);
    if (step.gap_from_n) s["gap_from_N"] = scalar_json(*step.gap_from_n);
    if (step.gap_to_next_n) s["gap_to_next_N"] = scalar_json(*step.gap_to_next_n);
    s["diameter"] = step.diameter;
    steps.push_back(std::move(s));
  }
  Json j;
  j["steps"] = std::move(steps);
  j["O"] = point_json(trace.o);
  j["error_radius"] = trace.error_radius;
  j["converged"] = trace.converged;
  return j;
}

}  // namespace cwpoly
