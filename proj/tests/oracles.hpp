#pragma once

// Brute-force reference implementations used to cross-check the library.
// They share only the Point2 struct with the library: all arithmetic here is
// plain doubles and exhaustive scans, independent of the robust predicates
// and of the algorithms under test.

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "achull/geom.hpp"

namespace oracle {

using achull::Point2;

// Signed area via the triangle fan anchored at the first vertex.
double fan_area(const std::vector<Point2>& cycle);

// All-pairs segment-intersection simplicity test.
bool naive_is_simple(const std::vector<Point2>& cycle);

// Point containment by parity ray casting; boundary detected within eps.
enum class Where { Inside, OnBoundary, Outside };
Where naive_contains(const std::vector<Point2>& cycle, const Point2& p, double eps = 1e-12);

// A point is extreme iff some closed half-plane through it and another point
// contains all the rest. O(n^3).
std::vector<int> brute_extreme_indices(const std::vector<Point2>& pts);

// Alpha edges by the two-disk-center test over every point pair; r may be
// infinity (disk becomes a half-plane).
std::set<std::pair<int, int>> brute_alpha_edges(const std::vector<Point2>& pts, double r);

// Exhaustive minimum-area enclosing alpha-polygon over every vertex subset
// and every circular order. Returns the area, or nullopt if no feasible
// polygon exists (cannot happen for valid input).
std::optional<double> brute_min_alpha_polygon_area(const std::vector<Point2>& pts,
                                                   double alpha_degrees);

// Exhaustive minimum-area simple polygon through every point.
std::optional<double> brute_min_polygonalization_area(const std::vector<Point2>& pts);

// Max interior angle of a cycle (degrees), orienting it CCW first.
double max_interior_angle(const std::vector<Point2>& cycle);

// Every sample point along each edge of `inner` lies in `outer` (within eps).
bool contains_polygon_sampled(const std::vector<Point2>& outer, const std::vector<Point2>& inner,
                              int samples_per_edge = 16, double eps = 1e-9);

}  // namespace oracle
