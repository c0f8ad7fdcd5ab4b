#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "achull/geom.hpp"

namespace achull {

// Positive disk radius; INFINITY degenerates the disk to a half-plane.
struct Radius {
    double value = std::numeric_limits<double>::infinity();

    Radius() = default;
    explicit Radius(double v);
    static Radius infinite() { return Radius(); }
    bool is_infinite() const { return std::isinf(value); }
};

struct Triangulation {
    PointSet points;
    // CCW index triples, each rotated so its smallest index comes first,
    // sorted lexicographically.
    std::vector<std::array<int, 3>> triangles;
    // (i,j) with i<j -> incident triangle ids; second id is -1 on hull edges.
    std::map<std::pair<int, int>, std::array<int, 2>> edge_triangles;
};

// Delaunay triangulation by incremental insertion with a symbolic ghost
// vertex covering the outer face. Exact co-circular ties are normalized
// afterwards: each tied quad keeps the diagonal whose lexicographically
// smallest endpoint is smallest (equivalently, the diagonal through the
// quad's lexicographically smallest point).
Triangulation delaunay(const PointSet& pts);

Point2 circumcenter(const Point2& a, const Point2& b, const Point2& c);
double circumradius(const Point2& a, const Point2& b, const Point2& c);
double triangle_circumradius(const Triangulation& t, int tri);

// Edges (i,j), i<j, such that some empty disk of radius r touches both
// endpoints ("empty": no input point strictly inside). Computed per Delaunay
// edge from the attainable radius interval along its dual Voronoi edge.
// For r infinite the result is exactly the hull edge set.
std::set<std::pair<int, int>> alpha_edges(const Triangulation& t, Radius r);

struct AlphaShape {
    Radius radius;
    std::vector<int> region_triangles;              // circumradius <= r
    std::vector<std::vector<int>> boundary_loops;   // vertex cycles; outer CCW, holes CW
    bool connected = false;                         // one component, one loop
    double area = 0.0;                              // outer loops minus holes
};

AlphaShape alpha_region(const Triangulation& t, Radius r);

// Smallest-area connected alpha region that contains the target polygon
// (every target vertex covered, no boundary edge properly crossing a target
// edge), searching the finite candidate set of triangle circumradii plus
// infinity; area ties resolve toward larger r. The triangulation must be
// built on the target's vertex set; the hull fallback keeps this feasible.
std::pair<Radius, AlphaShape> best_containing_alpha(const Triangulation& t,
                                                    const SimplePolygon& target);

}  // namespace achull
