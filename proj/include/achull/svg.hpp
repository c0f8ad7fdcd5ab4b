#pragma once

#include <string>
#include <vector>

#include "achull/geom.hpp"

namespace achull {

struct LayerStyle {
    std::string stroke = "black";
    std::string fill = "none";
    double fill_opacity = 0.0;
};

// One drawable layer: a point cloud or one or more closed outlines (a polygon
// is a single loop; an alpha-shape boundary may have several).
struct SceneLayer {
    enum class Kind { Points, Outline };

    Kind kind = Kind::Points;
    std::vector<Point2> points;               // Kind::Points
    std::vector<std::vector<Point2>> loops;   // Kind::Outline
    LayerStyle style;

    static SceneLayer point_layer(std::vector<Point2> pts, LayerStyle style = {});
    static SceneLayer polygon_layer(const SimplePolygon& poly, LayerStyle style = {});
    static SceneLayer outline_layer(std::vector<std::vector<Point2>> loops, LayerStyle style = {});
};

struct Scene {
    std::vector<SceneLayer> layers;
};

// Well-formed SVG 1.1: viewBox fitted to the scene bounding box with a 5%
// margin, outlines as closed paths, points as circles with radius 0.5% of the
// viewBox size. Output depends only on the scene, so reruns are byte-equal.
std::string render_svg(const Scene& scene);

}  // namespace achull
