#include <doctest.h>

#include <cmath>
#include <sstream>

#include "achull/alpha_hull.hpp"
#include "achull/io.hpp"
#include "achull/svg.hpp"

using namespace achull;

namespace {

int count_occurrences(const std::string& hay, const std::string& needle) {
    int count = 0;
    for (std::size_t at = hay.find(needle); at != std::string::npos;
         at = hay.find(needle, at + needle.size())) {
        ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("format_double round-trips exactly") {
    for (double v : {0.1, 1.0 / 3.0, 0.137859085, 1e-30, -2.5e17, 0.0}) {
        CHECK(std::stod(format_double(v)) == v);
    }
}

TEST_CASE("point files: comments and blank lines are skipped, values round-trip") {
    std::istringstream in("# corpus header\n0.25 0.5\n\n  # indented comment\n1 2\n-3.5e-2 7\n");
    std::vector<Point2> pts = read_points(in);
    REQUIRE(pts.size() == 3);
    CHECK(pts[0] == Point2{0.25, 0.5});
    CHECK(pts[2] == Point2{-0.035, 7});

    std::ostringstream out;
    write_points(out, pts);
    std::istringstream back(out.str());
    std::vector<Point2> again = read_points(back);
    REQUIRE(again.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(again[i] == pts[i]);
}

TEST_CASE("malformed point lines are reported") {
    std::istringstream in("0.5 oops\n");
    CHECK_THROWS(read_points(in));
}

TEST_CASE("polygon writer starts at the lexicographically smallest vertex") {
    SimplePolygon a({{1, 0}, {1, 1}, {0, 1}, {0, 0}});
    SimplePolygon b({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    CHECK(polygon_to_string(a) == polygon_to_string(b));
    CHECK(polygon_to_string(a).substr(0, 3) == "0 0");
}

TEST_CASE("render_svg: a point layer becomes that many circles") {
    Scene scene;
    scene.layers.push_back(SceneLayer::point_layer({{0, 0}, {1, 0}, {0.5, 1}, {0.25, 0.25}}));
    std::string svg = render_svg(scene);
    CHECK(count_occurrences(svg, "<circle") == 4);
    CHECK(count_occurrences(svg, "<path") == 0);
    CHECK(svg.find("viewBox=") != std::string::npos);
    CHECK(svg.rfind("</svg>\n") == svg.size() - 7);
}

TEST_CASE("render_svg: three outlines with distinct strokes") {
    SimplePolygon poly({{0, 0}, {1, 0}, {0.5, 0.5}, {1, 1}, {0, 1}});
    SimplePolygon hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    SimplePolygon mid({{0, 0}, {1, 0}, {1, 1}, {0.5, 0.75}, {0, 1}});
    Scene scene;
    scene.layers.push_back(SceneLayer::polygon_layer(poly, {.stroke = "blue"}));
    scene.layers.push_back(SceneLayer::polygon_layer(hull, {.stroke = "red"}));
    scene.layers.push_back(SceneLayer::polygon_layer(mid, {.stroke = "green"}));
    std::string svg = render_svg(scene);
    CHECK(count_occurrences(svg, "<path") == 3);
    CHECK(count_occurrences(svg, "stroke=\"blue\"") == 1);
    CHECK(count_occurrences(svg, "stroke=\"red\"") == 1);
    CHECK(count_occurrences(svg, "stroke=\"green\"") == 1);
    CHECK(count_occurrences(svg, "Z\"") == 3);
}

TEST_CASE("render_svg: viewBox carries the 5% margin") {
    Scene scene;
    scene.layers.push_back(SceneLayer::point_layer({{0, 0}, {2, 0}, {2, 1}, {0, 1}}));
    std::string svg = render_svg(scene);
    auto at = svg.find("viewBox=\"");
    REQUIRE(at != std::string::npos);
    std::istringstream vb(svg.substr(at + 9));
    double vx, vy, vw, vh;
    vb >> vx >> vy >> vw >> vh;
    CHECK(vx == doctest::Approx(-0.1));
    CHECK(vw == doctest::Approx(2.2));
    CHECK(vh == doctest::Approx(1.2));
}

TEST_CASE("render_svg: deterministic output, empty scene rejected") {
    Scene scene;
    scene.layers.push_back(SceneLayer::point_layer({{0, 0}, {1, 1}}));
    CHECK(render_svg(scene) == render_svg(scene));
    CHECK_THROWS_AS(render_svg(Scene{}), std::invalid_argument);
}

TEST_CASE("alpha sweep renders with non-increasing exact hull areas") {
    PointSet pts({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}});
    double prev = 1e30;
    for (double a : {0.0, 60.0, 120.0, 180.0}) {
        HullResult hr = ach_exact(pts, AlphaDegrees(a));
        CHECK(hr.area <= prev + 1e-12);
        prev = hr.area;
        Scene scene;
        scene.layers.push_back(SceneLayer::point_layer(pts.points()));
        scene.layers.push_back(SceneLayer::polygon_layer(hr.polygon, {.stroke = "green"}));
        std::string svg = render_svg(scene);
        CHECK(count_occurrences(svg, "<circle") == 5);
        CHECK(count_occurrences(svg, "<path") == 1);
    }
}
