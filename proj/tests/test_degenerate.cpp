// Exercises the exact-degeneracy paths: points on hull edges during
// triangulation, large exactly-cocircular clusters, collinear polygon
// vertices, and the containment pockets that plain crossing tests miss.

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "achull/alpha_hull.hpp"
#include "achull/predicates.hpp"
#include "achull/triangulate.hpp"

using namespace achull;

namespace {

bool delaunay_property_holds(const Triangulation& t) {
    const auto& p = t.points.points();
    for (const auto& tr : t.triangles) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            int ii = static_cast<int>(i);
            if (ii == tr[0] || ii == tr[1] || ii == tr[2]) continue;
            if (incircle(p[tr[0]], p[tr[1]], p[tr[2]], p[i]) > 0.0) return false;
        }
    }
    return true;
}

std::set<std::array<double, 6>> coordinate_triangles(const Triangulation& t) {
    std::set<std::array<double, 6>> out;
    const auto& p = t.points.points();
    for (const auto& tr : t.triangles) {
        std::array<int, 3> idx = tr;
        // Rotate so the lexicographically smallest point leads.
        int best = 0;
        for (int e = 1; e < 3; ++e) {
            if (p[idx[e]] < p[idx[best]]) best = e;
        }
        std::rotate(idx.begin(), idx.begin() + best, idx.end());
        out.insert({p[idx[0]].x, p[idx[0]].y, p[idx[1]].x, p[idx[1]].y, p[idx[2]].x, p[idx[2]].y});
    }
    return out;
}

}  // namespace

TEST_CASE("delaunay splits hull edges hit by later points") {
    // (0.5, 0) lands exactly on the bottom edge after the square is built.
    PointSet pts({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0}});
    Triangulation t = delaunay(pts);
    CHECK(delaunay_property_holds(t));
    // The split edge may not survive as a single hull edge.
    CHECK(t.edge_triangles.count({0, 1}) == 0);
    std::size_t V = pts.size(), E = t.edge_triangles.size(), F = t.triangles.size();
    CHECK(V - E + F == 1);
}

TEST_CASE("delaunay handles a fully collinear prefix") {
    PointSet pts({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {1.5, 2}});
    Triangulation t = delaunay(pts);
    REQUIRE(t.triangles.size() == 3);
    CHECK(delaunay_property_holds(t));
    double total = 0.0;
    const auto& p = pts.points();
    for (const auto& tr : t.triangles) {
        total += 0.5 * ((p[tr[1]].x - p[tr[0]].x) * (p[tr[2]].y - p[tr[0]].y) -
                        (p[tr[1]].y - p[tr[0]].y) * (p[tr[2]].x - p[tr[0]].x));
    }
    CHECK(total == doctest::Approx(3.0));  // hull triangle (0,0),(3,0),(1.5,2)
}

TEST_CASE("an exactly cocircular cluster triangulates deterministically") {
    // Twelve lattice points on the circle x^2 + y^2 = 25: exact ties on every
    // interior quad. The tie rule must fan all triangles from the smallest
    // point and the result must not depend on insertion order.
    std::vector<Point2> ring = {{5, 0},  {4, 3},   {3, 4},   {0, 5},  {-3, 4},  {-4, 3},
                                {-5, 0}, {-4, -3}, {-3, -4}, {0, -5}, {3, -4},  {4, -3}};
    PointSet a(ring);
    Triangulation ta = delaunay(a);
    REQUIRE(ta.triangles.size() == 10);
    CHECK(delaunay_property_holds(ta));
    int lexmin = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < a[lexmin]) lexmin = static_cast<int>(i);
    }
    for (const auto& tr : ta.triangles) {
        CHECK((tr[0] == lexmin || tr[1] == lexmin || tr[2] == lexmin));
    }

    std::vector<Point2> shuffled = {{0, 5},  {4, -3}, {-5, 0}, {3, 4},   {0, -5}, {-4, 3},
                                    {5, 0},  {-3, -4}, {4, 3},  {-4, -3}, {3, -4}, {-3, 4}};
    Triangulation tb = delaunay(PointSet(shuffled));
    CHECK(coordinate_triangles(ta) == coordinate_triangles(tb));
}

TEST_CASE("cocircular cluster with interior points stays consistent") {
    std::vector<Point2> pts = {{5, 0}, {3, 4},  {-3, 4}, {-5, 0},
                               {-3, -4}, {3, -4}, {0, 0}, {1, 1}};
    Triangulation t = delaunay(PointSet(pts));
    CHECK(delaunay_property_holds(t));
    std::size_t V = pts.size(), E = t.edge_triangles.size(), F = t.triangles.size();
    CHECK(V - E + F == 1);
}

TEST_CASE("polygons may carry consecutive collinear vertices") {
    SimplePolygon poly({{0, 0}, {1, 0}, {2, 0}, {2, 2}, {0, 2}});
    CHECK(is_simple(poly));
    CHECK(interior_angle(poly, 1) == 180.0);
    CHECK(is_alpha_polygon(poly, AlphaDegrees(0)));
    double sum = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i) sum += interior_angle(poly, i);
    CHECK(sum == doctest::Approx((poly.size() - 2) * 180.0));
}

TEST_CASE("polygon_contains_polygon rejects pocket crossings without proper intersections") {
    // Outer is a square dented to (2,2); the inner square's top edge spans the
    // dent mouth, touching only at shared vertices. No edge pair crosses
    // properly, yet the inner polygon is not contained.
    SimplePolygon outer({{0, 0}, {4, 0}, {4, 4}, {2, 2}, {0, 4}});
    SimplePolygon inner({{0, 0}, {4, 0}, {4, 4}, {0, 4}});
    const auto& h = outer.vertices();
    const auto& q = inner.vertices();
    for (std::size_t i = 0; i < h.size(); ++i) {
        for (std::size_t j = 0; j < q.size(); ++j) {
            CHECK_FALSE(segments_properly_cross(h[i], h[(i + 1) % h.size()], q[j],
                                                q[(j + 1) % q.size()]));
        }
    }
    for (const Point2& v : inner.vertices()) {
        CHECK(contains_point(outer, v) != Containment::Outside);
    }
    CHECK_FALSE(polygon_contains_polygon(outer, inner));

    // A deeper dent stays inside; a shallower one pokes into the pocket.
    SimplePolygon deeper({{0, 0}, {4, 0}, {4, 4}, {2, 1.5}, {0, 4}});
    CHECK(polygon_contains_polygon(outer, deeper));
    SimplePolygon shallower({{0, 0}, {4, 0}, {4, 4}, {2, 2.5}, {0, 4}});
    CHECK_FALSE(polygon_contains_polygon(outer, shallower));
    CHECK(polygon_contains_polygon(outer, outer));
}

TEST_CASE("heuristic skips zero-area digs of points on the boundary") {
    // (0.5, 0) sits on the hull edge; only the center is worth digging.
    PointSet pts({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0}, {0.5, 0.5}});
    HullResult hr = ach_heuristic(pts, AlphaDegrees(90));
    CHECK(std::fabs(hr.area - 0.75) <= 1e-12);
    CHECK(verify_certificate(pts, hr.polygon, AlphaDegrees(90), {hr.area, 1e-9}));
    // The on-edge point never becomes a vertex but stays on the boundary.
    bool is_vertex = false;
    for (const Point2& v : hr.polygon.vertices()) {
        if (v == Point2{0.5, 0}) is_vertex = true;
    }
    CHECK_FALSE(is_vertex);
    CHECK(contains_point(hr.polygon, {0.5, 0}) == Containment::OnBoundary);
}

TEST_CASE("exact solver tolerates points on hull edges") {
    PointSet pts({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0}, {0.5, 0.5}});
    HullResult hr = ach_exact(pts, AlphaDegrees(90));
    CHECK(std::fabs(hr.area - 0.75) <= 1e-9);
    CHECK(verify_certificate(pts, hr.polygon, AlphaDegrees(90), {hr.area, 1e-9}));
}