#include "achull/bench.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>

#include "achull/io.hpp"
#include "achull/polygen.hpp"
#include "achull/triangulate.hpp"

namespace achull {

double approx_error(double approx_area, double polygon_area) {
    if (approx_area < polygon_area - kErrorEqualityTolerance) {
        throw DomainError(Errc::negative_error,
                          "approximation area " + format_double(approx_area) +
                              " below polygon area " + format_double(polygon_area));
    }
    return approx_area - polygon_area;
}

std::vector<double> default_alpha_grid() {
    std::vector<double> grid;
    for (int a = 0; a <= 180; a += 10) grid.push_back(static_cast<double>(a));
    return grid;
}

namespace {

// A hull of the polygon's vertices can still cut across the polygon, so
// candidates must pass the full piecewise containment test.
bool hull_contains_polygon(const SimplePolygon& hull, const SimplePolygon& poly) {
    return polygon_contains_polygon(hull, poly);
}

}  // namespace

std::pair<AlphaDegrees, HullResult> select_ach_alpha(const SimplePolygon& poly,
                                                     std::span<const double> grid_degrees,
                                                     int exact_cap) {
    if (grid_degrees.empty()) throw std::invalid_argument("alpha grid is empty");
    PointSet verts{poly.vertices()};
    const bool exact = static_cast<int>(verts.size()) <= exact_cap;

    std::optional<HullResult> best;
    double best_alpha = 0.0;
    for (double a : grid_degrees) {
        AlphaDegrees alpha(a);
        HullResult hr = exact ? ach_exact(verts, alpha, exact_cap) : ach_heuristic(verts, alpha);
        if (!hull_contains_polygon(hr.polygon, poly)) continue;
        if (!best || hr.area < best->area || (hr.area == best->area && a > best_alpha)) {
            best_alpha = a;
            best = std::move(hr);
        }
    }
    if (!best) {
        // Alpha 0 yields the convex hull of the vertices, which always
        // contains the polygon; reaching this means the grid lacked it.
        throw std::invalid_argument("no feasible alpha in grid (include 0)");
    }
    return {AlphaDegrees(best_alpha), std::move(*best)};
}

ComparisonReport run_comparison(int count, VertexCountRange n, std::uint64_t seed,
                                std::span<const double> grid_degrees) {
    if (count < 1) throw std::invalid_argument("count must be >= 1");
    if (n.lo < 3 || n.hi < n.lo) throw std::invalid_argument("bad vertex count range");

    ComparisonReport report;
    report.rows.reserve(count);
    for (int k = 0; k < count; ++k) {
        try {
            const std::uint64_t pseed = batch_polygon_seed(seed, static_cast<std::uint64_t>(k));
            int nk = n.lo;
            if (n.hi > n.lo) {
                nk = n.lo + static_cast<int>((pseed >> 32) %
                                             static_cast<std::uint64_t>(n.hi - n.lo + 1));
            }
            SimplePolygon poly = scale_to_unit(random_simple_polygon({nk, pseed, -1}));

            ErrorRow row;
            row.id = k;
            row.polygon_area = signed_area(poly);

            PointSet verts{poly.vertices()};
            row.chull_area = signed_area(convex_hull(verts));

            Triangulation tri = delaunay(verts);
            auto [r, shape] = best_containing_alpha(tri, poly);
            row.ashape_area = shape.area;

            auto [alpha, hull] = select_ach_alpha(poly, grid_degrees);
            row.ahull_area = hull.area;

            row.chull_err = approx_error(row.chull_area, row.polygon_area);
            row.ashape_err = approx_error(row.ashape_area, row.polygon_area);
            row.ahull_err = approx_error(row.ahull_area, row.polygon_area);
            report.rows.push_back(row);
        } catch (const DomainError& e) {
            throw DomainError(e.code(), "polygon " + std::to_string(k) + ": " + e.what());
        }
    }

    for (const ErrorRow& row : report.rows) {
        double diff = row.ahull_err - row.ashape_err;
        if (diff < -kErrorEqualityTolerance) {
            ++report.count_better;
        } else if (diff > kErrorEqualityTolerance) {
            ++report.count_worse;
        } else {
            ++report.count_equal;
        }
        report.averages.polygon_area += row.polygon_area;
        report.averages.chull_area += row.chull_area;
        report.averages.ashape_area += row.ashape_area;
        report.averages.ahull_area += row.ahull_area;
        report.averages.chull_err += row.chull_err;
        report.averages.ashape_err += row.ashape_err;
        report.averages.ahull_err += row.ahull_err;
    }
    const double m = static_cast<double>(report.rows.size());
    report.averages.polygon_area /= m;
    report.averages.chull_area /= m;
    report.averages.ashape_area /= m;
    report.averages.ahull_area /= m;
    report.averages.chull_err /= m;
    report.averages.ashape_err /= m;
    report.averages.ahull_err /= m;
    return report;
}

std::string report_to_csv(const ComparisonReport& report) {
    std::ostringstream out;
    out << "id,polygon_area,chull_area,ashape_area,ahull_area,chull_err,ashape_err,ahull_err\n";
    for (const ErrorRow& r : report.rows) {
        out << r.id << ',' << format_double(r.polygon_area) << ',' << format_double(r.chull_area)
            << ',' << format_double(r.ashape_area) << ',' << format_double(r.ahull_area) << ','
            << format_double(r.chull_err) << ',' << format_double(r.ashape_err) << ','
            << format_double(r.ahull_err) << '\n';
    }
    const ColumnAverages& a = report.averages;
    out << "# averages polygon_area=" << format_double(a.polygon_area)
        << " chull_area=" << format_double(a.chull_area)
        << " ashape_area=" << format_double(a.ashape_area)
        << " ahull_area=" << format_double(a.ahull_area)
        << " chull_err=" << format_double(a.chull_err)
        << " ashape_err=" << format_double(a.ashape_err)
        << " ahull_err=" << format_double(a.ahull_err) << '\n';
    out << "# counts better=" << report.count_better << " equal=" << report.count_equal
        << " worse=" << report.count_worse << '\n';
    return out.str();
}

}  // namespace achull
