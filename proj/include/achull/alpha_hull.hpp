#pragma once

#include "achull/geom.hpp"

namespace achull {

// Hull smoothness parameter in degrees: interior angles of an alpha-polygon
// stay at or below 180 + alpha. 0 forces convexity; 180 allows any simple
// polygon.
struct AlphaDegrees {
    explicit AlphaDegrees(double degrees);
    double value() const { return value_; }

private:
    double value_;
};

enum class HullMethod { Exact, Heuristic };

struct HullResult {
    SimplePolygon polygon;
    AlphaDegrees alpha;
    double area;
    HullMethod method;
};

struct AreaBudget {
    double area;
    double tolerance = 1e-9;
};

// Comparison slack on the interior-angle bound, in degrees.
inline constexpr double kAngleToleranceDeg = 1e-9;
// Area slack when ranking enumerated candidates.
inline constexpr double kAreaTieTolerance = 1e-9;
// Exact solvers enumerate vertex orders; beyond this many points they refuse
// rather than silently degrade, so callers opt into the heuristic knowingly.
inline constexpr int kDefaultExactCap = 10;

bool is_alpha_polygon(const SimplePolygon& poly, AlphaDegrees alpha);

// Polynomial-time certificate check: poly's vertices all come from P, poly is
// simple, it is an alpha-polygon for `alpha`, it contains every point of P,
// and its area is within the budget. Runs in O(n^2) for n = |P| + |poly|
// (pairwise segment tests dominate); `false` is the rejection signal.
bool verify_certificate(const PointSet& points, const SimplePolygon& poly, AlphaDegrees alpha,
                        const AreaBudget& budget);

// Global minimum-area enclosing alpha-polygon over all vertex subsets S with
// extreme(P) subseteq S subseteq P and all circular orders of S. Area ties
// resolve to the lexicographically smallest canonical vertex-index cycle
// (smallest index first, then the smaller second neighbor).
HullResult ach_exact(const PointSet& points, AlphaDegrees alpha, int cap = kDefaultExactCap);

// Greedy edge digging from the convex hull: repeatedly remove the largest
// point-empty triangle over a boundary edge that keeps the polygon simple and
// within the angle bound. Not optimal, but every output passes
// verify_certificate at its own area.
HullResult ach_heuristic(const PointSet& points, AlphaDegrees alpha);

// Minimum-area simple polygon through EVERY point, by enumeration of circular
// orders (first vertex fixed, reflections identified). Same tie-break as
// ach_exact.
SimplePolygon min_area_polygonalization(const PointSet& points, int cap = kDefaultExactCap);

}  // namespace achull
