#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "achull/alpha_hull.hpp"
#include "achull/geom.hpp"

namespace achull {

// Absolute area tolerance used when bucketing hull-vs-alpha-shape outcomes.
inline constexpr double kErrorEqualityTolerance = 1e-9;

struct ErrorRow {
    int id;
    double polygon_area;
    double chull_area;
    double ashape_area;
    double ahull_area;
    double chull_err;
    double ashape_err;
    double ahull_err;
};

struct ColumnAverages {
    double polygon_area = 0.0;
    double chull_area = 0.0;
    double ashape_area = 0.0;
    double ahull_area = 0.0;
    double chull_err = 0.0;
    double ashape_err = 0.0;
    double ahull_err = 0.0;
};

struct ComparisonReport {
    std::vector<ErrorRow> rows;
    long count_better = 0;  // alpha-concave hull error < alpha shape error
    long count_equal = 0;
    long count_worse = 0;
    ColumnAverages averages;
};

// Area of the approximating region minus the area of the approximated
// polygon. Throws NEGATIVE_ERROR if the approximation is smaller than the
// polygon beyond tolerance, which signals a containment bug upstream.
double approx_error(double approx_area, double polygon_area);

// {0, 10, ..., 180}.
std::vector<double> default_alpha_grid();

// Per grid alpha, compute the alpha-concave hull of the polygon's vertex set
// (exact when the vertex count is within the cap, heuristic otherwise), keep
// the candidates whose hull contains the whole polygon, and return the one of
// minimum area; ties go to the larger alpha. Alpha 0 (the convex hull) is
// always feasible.
std::pair<AlphaDegrees, HullResult> select_ach_alpha(const SimplePolygon& poly,
                                                     std::span<const double> grid_degrees,
                                                     int exact_cap = kDefaultExactCap);

struct VertexCountRange {
    int lo = 3;
    int hi = 3;
};

// The full comparison pipeline: `count` scaled random polygons, each
// approximated by the convex hull, the best containing alpha shape, and the
// best containing alpha-concave hull of its vertex set. Fully deterministic
// given (count, n, seed, grid).
ComparisonReport run_comparison(int count, VertexCountRange n, std::uint64_t seed,
                                std::span<const double> grid_degrees);

// CSV with exact header
// id,polygon_area,chull_area,ashape_area,ahull_area,chull_err,ashape_err,ahull_err
// followed by '#'-prefixed summary lines (averages, then the three counts).
std::string report_to_csv(const ComparisonReport& report);

}  // namespace achull
