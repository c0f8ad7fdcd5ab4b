#include "achull/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "achull/io.hpp"

namespace achull {

SceneLayer SceneLayer::point_layer(std::vector<Point2> pts, LayerStyle style) {
    SceneLayer layer;
    layer.kind = Kind::Points;
    layer.points = std::move(pts);
    layer.style = std::move(style);
    return layer;
}

SceneLayer SceneLayer::polygon_layer(const SimplePolygon& poly, LayerStyle style) {
    SceneLayer layer;
    layer.kind = Kind::Outline;
    layer.loops.push_back(poly.vertices());
    layer.style = std::move(style);
    return layer;
}

SceneLayer SceneLayer::outline_layer(std::vector<std::vector<Point2>> loops, LayerStyle style) {
    SceneLayer layer;
    layer.kind = Kind::Outline;
    layer.loops = std::move(loops);
    layer.style = std::move(style);
    return layer;
}

std::string render_svg(const Scene& scene) {
    if (scene.layers.empty()) throw std::invalid_argument("scene needs at least one layer");

    bool saw_point = false;
    double minx = 0.0, maxx = 0.0, miny = 0.0, maxy = 0.0;
    auto grow = [&](const Point2& p) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
            throw std::invalid_argument("non-finite scene coordinate");
        }
        if (!saw_point) {
            minx = maxx = p.x;
            miny = maxy = p.y;
            saw_point = true;
            return;
        }
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    };
    for (const SceneLayer& layer : scene.layers) {
        for (const Point2& p : layer.points) grow(p);
        for (const auto& loop : layer.loops) {
            for (const Point2& p : loop) grow(p);
        }
    }
    if (!saw_point) throw std::invalid_argument("scene has no coordinates");

    double w = maxx - minx;
    double h = maxy - miny;
    double pad = 0.05 * std::max({w, h, 1e-12});
    double vx = minx - pad;
    double vy = miny - pad;
    double vw = w + 2.0 * pad;
    double vh = h + 2.0 * pad;
    double unit = std::max(vw, vh);
    double point_radius = 0.005 * unit;
    double stroke_width = 0.003 * unit;

    // SVG y grows downward; emit mirrored y so figures read math-style.
    auto sy = [&](double y) { return vy + vh - (y - vy); };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
        << "width=\"640\" height=\"640\" viewBox=\"" << format_double(vx) << ' '
        << format_double(vy) << ' ' << format_double(vw) << ' ' << format_double(vh) << "\">\n";
    for (const SceneLayer& layer : scene.layers) {
        const LayerStyle& st = layer.style;
        if (layer.kind == SceneLayer::Kind::Points) {
            for (const Point2& p : layer.points) {
                out << "  <circle cx=\"" << format_double(p.x) << "\" cy=\""
                    << format_double(sy(p.y)) << "\" r=\"" << format_double(point_radius)
                    << "\" fill=\"" << st.stroke << "\"/>\n";
            }
        } else {
            for (const auto& loop : layer.loops) {
                if (loop.empty()) continue;
                out << "  <path d=\"";
                for (std::size_t i = 0; i < loop.size(); ++i) {
                    out << (i == 0 ? 'M' : 'L') << format_double(loop[i].x) << ' '
                        << format_double(sy(loop[i].y));
                }
                out << "Z\" stroke=\"" << st.stroke << "\" stroke-width=\""
                    << format_double(stroke_width) << "\" fill=\"" << st.fill
                    << "\" fill-opacity=\"" << format_double(st.fill_opacity) << "\"/>\n";
            }
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace achull
