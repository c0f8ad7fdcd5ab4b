#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "achull/error.hpp"

namespace achull {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point2& a, const Point2& b) { return !(a == b); }
    // Lexicographic (x, then y).
    friend bool operator<(const Point2& a, const Point2& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    }
};

enum class Orientation { CCW, CW, Collinear };

enum class Containment { Inside, OnBoundary, Outside };

// Sign of the doubled signed area of triangle p,q,r, evaluated sign-exactly.
// Every degeneracy decision in the library routes through this predicate.
Orientation orient(const Point2& p, const Point2& q, const Point2& r);

// Input points with near-duplicates removed at construction. Order of first
// occurrence is preserved.
class PointSet {
public:
    static constexpr double kDedupTolerance = 1e-12;

    PointSet() = default;
    explicit PointSet(std::vector<Point2> pts);

    const std::vector<Point2>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    const Point2& operator[](std::size_t i) const { return points_[i]; }

private:
    std::vector<Point2> points_;
};

// Closed vertex cycle in counter-clockwise order with positive area and no
// repeated vertices. Construction normalizes orientation (a clockwise input
// cycle is reversed) and rejects zero-area or degenerate cycles. Simplicity
// is NOT validated here; use is_simple() where the contract requires it.
// Consecutive collinear vertices (interior angle of exactly 180 degrees)
// are legal.
class SimplePolygon {
public:
    explicit SimplePolygon(std::vector<Point2> vertices);

    const std::vector<Point2>& vertices() const { return verts_; }
    std::size_t size() const { return verts_.size(); }
    const Point2& operator[](std::size_t i) const { return verts_[i]; }

private:
    std::vector<Point2> verts_;
};

// One half the shoelace sum; positive for CCW cycles.
double signed_area(std::span<const Point2> cycle);
double signed_area(const SimplePolygon& poly);

// True iff the cycle bounds a simple polygon: non-adjacent edges share no
// point at all, adjacent edges share exactly their common endpoint, and no
// vertex repeats. O(n^2) pairwise segment tests.
bool is_simple(std::span<const Point2> cycle);
bool is_simple(const SimplePolygon& poly);

// Angle measured inside the polygon at vertex i, in degrees in (0, 360).
// Reflex vertices yield values in (180, 360); exactly collinear neighbors
// yield exactly 180.
double interior_angle(const SimplePolygon& poly, std::size_t i);

// Interior angle at vertex v of a CCW cycle ... prev, v, next ...
double interior_angle_at(const Point2& prev, const Point2& v, const Point2& next);

Containment contains_point(const SimplePolygon& poly, const Point2& p);
Containment contains_point(std::span<const Point2> ccw_cycle, const Point2& p);

// CCW convex hull with collinear boundary points excluded from the vertex
// list. Throws DEGENERATE_INPUT if fewer than 3 distinct points or all
// collinear.
SimplePolygon convex_hull(const PointSet& pts);

// Hull as indices into the point set, CCW starting at the lexicographically
// smallest point.
std::vector<int> convex_hull_indices(const PointSet& pts);

// --- segment helpers shared by the hull/triangulation modules ---

// p collinear with [a,b] and within its bounding box (endpoints included).
bool point_on_segment(const Point2& p, const Point2& a, const Point2& b);

// Interiors cross in exactly one point (endpoints strictly excluded).
bool segments_properly_cross(const Point2& a, const Point2& b, const Point2& c, const Point2& d);

// Any shared point at all: proper crossing, endpoint touching, or collinear
// overlap.
bool segments_intersect(const Point2& a, const Point2& b, const Point2& c, const Point2& d);

// True iff `inner` lies in the closed region bounded by `outer`. Checks the
// vertex containment and proper-crossing conditions, then classifies each
// piece of every inner edge between boundary touches; touching boundaries are
// legal, crossing through a shared vertex is not.
bool polygon_contains_polygon(const SimplePolygon& outer, const SimplePolygon& inner);

// Parameters 0..1 along [a,b] of the boundary touches `outer` makes with the
// segment, endpoints included, sorted. Shared helper for piecewise
// containment tests.
std::vector<double> boundary_touch_params(std::span<const Point2> outer_vertices, const Point2& a,
                                          const Point2& b);

// True iff the [t0,t1] piece of segment [a,b] runs along edge [u,w]: both
// edge endpoints exactly collinear with a-b and the piece within the edge's
// parameter span. Such pieces count as on-boundary without sampling, which a
// rounded midpoint could misclassify.
bool piece_along_edge(const Point2& u, const Point2& w, const Point2& a, const Point2& b,
                      double t0, double t1);

}  // namespace achull
