#pragma once

// Deterministic SVG output. A scene is a list of layers, each drawn as one
// <g> element with a stable id. Coordinates are printed with a fixed number
// of decimals so the same scene always gives the same bytes.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include "cwpoly/iterate.hpp"

namespace cwpoly {

enum class LayerStyle { base, ball, thick, traced, evolute, involute, iterate };

struct Layer {
  std::string id;
  LayerStyle style = LayerStyle::base;
  std::vector<std::vector<Vec2<double>>> shapes;  // closed polygons
};

struct Scene {
  std::vector<Layer> layers;

  bool has_layer(const std::string& id) const {
    return std::any_of(layers.begin(), layers.end(), [&](const Layer& l) { return l.id == id; });
  }
};

namespace detail {

inline std::string fixed(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::fixed, 6);
  std::string s(buf, end);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

struct Stroke {
  const char* colour;
  double width;     // in units of the scene size
  double dash = 0;  // dash and gap length, 0 for a solid line
};

inline Stroke stroke_for(LayerStyle style) {
  switch (style) {
    case LayerStyle::base: return {"#000000", 0.004};
    case LayerStyle::ball: return {"#1f5fa8", 0.004};
    case LayerStyle::thick: return {"#000000", 0.010};
    case LayerStyle::traced: return {"#555555", 0.003, 0.015};
    case LayerStyle::evolute: return {"#b22222", 0.004};
    case LayerStyle::involute: return {"#2e8b57", 0.006};
    case LayerStyle::iterate: return {"#6a3d9a", 0.003};
  }
  return {"#000000", 0.004};
}

}  // namespace detail

/// Converts a cyclic vertex list to one closed shape, dropping the repeated
/// second half of a period-n front.
template <Scalar T>
std::vector<Vec2<double>> shape_of(const Cyclic<Vec2<T>>& x, bool one_period = false) {
  std::vector<Vec2<double>> out;
  std::size_t count = one_period ? x.size() / 2 : x.size();
  if (count == 0) count = x.size();
  for (std::size_t i = 0; i < count; ++i) out.push_back(to_double(x.items()[i]));
  return out;
}

inline std::string render_svg(const Scene& scene) {
  double lo_x = 0, lo_y = 0, hi_x = 0, hi_y = 0;
  bool any = false;
  for (const auto& layer : scene.layers) {
    for (const auto& shape : layer.shapes) {
      for (const auto& p : shape) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
          throw GeometryError(ErrorKind::invalid_input, "render_svg: non-finite coordinate");
        }
        if (!any) {
          lo_x = hi_x = p.x;
          lo_y = hi_y = p.y;
          any = true;
        }
        lo_x = std::min(lo_x, p.x);
        hi_x = std::max(hi_x, p.x);
        lo_y = std::min(lo_y, p.y);
        hi_y = std::max(hi_y, p.y);
      }
    }
  }
  if (!any) throw GeometryError(ErrorKind::invalid_input, "render_svg: empty scene");

  double size = std::max(hi_x - lo_x, hi_y - lo_y);
  if (size <= 0) size = 1;
  const double margin = 0.05 * size;
  const double vx = lo_x - margin;
  const double vy = -(hi_y + margin);  // y is flipped so the plane reads upwards
  const double vw = (hi_x - lo_x) + 2 * margin;
  const double vh = (hi_y - lo_y) + 2 * margin;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"600\" height=\"600\" viewBox=\"";
  out += detail::fixed(vx) + ' ' + detail::fixed(vy) + ' ' + detail::fixed(vw) + ' ' + detail::fixed(vh);
  out += "\" preserveAspectRatio=\"xMidYMid meet\">\n";
  out += "<g transform=\"scale(1,-1)\" fill=\"none\" stroke-linejoin=\"round\">\n";
  for (const auto& layer : scene.layers) {
    auto stroke = detail::stroke_for(layer.style);
    out += "<g id=\"" + layer.id + "\" stroke=\"" + stroke.colour + "\" stroke-width=\"" +
           detail::fixed(stroke.width * size) + "\"";
    if (stroke.dash > 0) out += " stroke-dasharray=\"" + detail::fixed(stroke.dash * size) + "\"";
    out += ">\n";
    for (const auto& shape : layer.shapes) {
      bool point = std::all_of(shape.begin(), shape.end(), [&](const Vec2<double>& p) {
        return std::abs(p.x - shape.front().x) < 1e-12 && std::abs(p.y - shape.front().y) < 1e-12;
      });
      if (point) {
        out += "<circle cx=\"" + detail::fixed(shape.front().x) + "\" cy=\"" + detail::fixed(shape.front().y) +
               "\" r=\"" + detail::fixed(0.012 * size) + "\" fill=\"" + stroke.colour + "\"/>\n";
        continue;
      }
      out += "<polygon points=\"";
      for (std::size_t i = 0; i < shape.size(); ++i) {
        if (i) out += ' ';
        out += detail::fixed(shape[i].x) + ',' + detail::fixed(shape[i].y);
      }
      out += "\"/>\n";
    }
    out += "</g>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

/// Every object of the construction in one scene, with one traced layer per
/// requested equidistant.
template <Scalar T>
Scene full_scene(const PairedPolygon<T>& p, const MinkowskiPlane<T>& plane, const std::vector<T>& equidistants = {}) {
  auto cm = central_equidistant(p, plane.u);
  Scene scene;
  scene.layers.push_back({"polygon-p", LayerStyle::base, {shape_of(p.vertices)}});
  scene.layers.push_back({"ball-u", LayerStyle::ball, {shape_of(plane.u.vertices)}});
  scene.layers.push_back({"dual-v", LayerStyle::ball, {shape_of(plane.v.vertices)}});
  for (std::size_t j = 0; j < equidistants.size(); ++j) {
    scene.layers.push_back({"equidistant-" + std::to_string(j), LayerStyle::traced,
                            {shape_of(equidistant(cm, plane.u, equidistants[j]).vertices)}});
  }
  scene.layers.push_back({"central-m", LayerStyle::thick, {shape_of(cm.m, true)}});
  scene.layers.push_back({"evolute-e", LayerStyle::evolute, {shape_of(evolute(p, plane.u, plane.v).e, true)}});
  scene.layers.push_back({"involute-n", LayerStyle::involute, {shape_of(involute(cm, plane.u, plane.v).n, true)}});
  return scene;
}

template <Scalar T>
Scene iterate_scene(const PairedPolygon<T>& p, const IterationTrace<T>& trace) {
  Scene scene;
  scene.layers.push_back({"polygon-p", LayerStyle::base, {shape_of(p.vertices)}});
  for (const auto& step : trace.steps) {
    scene.layers.push_back({"iterate-k" + std::to_string(step.k), LayerStyle::iterate, {shape_of(step.m, true)}});
  }
  return scene;
}

}  // namespace cwpoly
