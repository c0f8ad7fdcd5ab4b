#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace oracle {

namespace {

double cross3(const Point2& o, const Point2& a, const Point2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool on_segment_eps(const Point2& p, const Point2& a, const Point2& b, double eps) {
    double abx = b.x - a.x, aby = b.y - a.y;
    double apx = p.x - a.x, apy = p.y - a.y;
    double len2 = abx * abx + aby * aby;
    double t = len2 == 0.0 ? 0.0 : (apx * abx + apy * aby) / len2;
    t = std::clamp(t, 0.0, 1.0);
    double dx = a.x + t * abx - p.x;
    double dy = a.y + t * aby - p.y;
    return dx * dx + dy * dy <= eps * eps;
}

bool seg_intersect(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
    double d1 = cross3(c, d, a);
    double d2 = cross3(c, d, b);
    double d3 = cross3(a, b, c);
    double d4 = cross3(a, b, d);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
        return true;
    }
    auto on = [](const Point2& p, const Point2& u, const Point2& v) {
        return cross3(u, v, p) == 0.0 && std::min(u.x, v.x) <= p.x && p.x <= std::max(u.x, v.x) &&
               std::min(u.y, v.y) <= p.y && p.y <= std::max(u.y, v.y);
    };
    return on(a, c, d) || on(b, c, d) || on(c, a, b) || on(d, a, b);
}

}  // namespace

double fan_area(const std::vector<Point2>& cycle) {
    double sum = 0.0;
    for (std::size_t i = 1; i + 1 < cycle.size(); ++i) {
        sum += cross3(cycle[0], cycle[i], cycle[i + 1]);
    }
    return 0.5 * sum;
}

bool naive_is_simple(const std::vector<Point2>& cycle) {
    const std::size_t n = cycle.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (cycle[i] == cycle[j]) return false;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = cycle[i];
        const Point2& b = cycle[(i + 1) % n];
        for (std::size_t j = i + 1; j < n; ++j) {
            const Point2& c = cycle[j];
            const Point2& d = cycle[(j + 1) % n];
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) {
                // Allowing only the shared endpoint: a double-back means the
                // far endpoints land on each other's edge.
                const Point2& shared = (j == i + 1) ? b : a;
                const Point2& u = (j == i + 1) ? a : b;
                const Point2& w = (j == i + 1) ? d : c;
                if (cross3(shared, u, w) == 0.0 &&
                    (u.x - shared.x) * (w.x - shared.x) + (u.y - shared.y) * (w.y - shared.y) >
                        0.0) {
                    return false;
                }
            } else if (seg_intersect(a, b, c, d)) {
                return false;
            }
        }
    }
    return true;
}

Where naive_contains(const std::vector<Point2>& cycle, const Point2& p, double eps) {
    const std::size_t n = cycle.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (on_segment_eps(p, cycle[i], cycle[(i + 1) % n], eps)) return Where::OnBoundary;
    }
    bool inside = false;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = cycle[i];
        const Point2& b = cycle[(i + 1) % n];
        if ((a.y > p.y) != (b.y > p.y)) {
            double xint = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (p.x < xint) inside = !inside;
        }
    }
    return inside ? Where::Inside : Where::Outside;
}

std::vector<int> brute_extreme_indices(const std::vector<Point2>& pts) {
    const int n = static_cast<int>(pts.size());
    std::vector<char> extreme(n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            bool all_left = true;
            for (int k = 0; k < n && all_left; ++k) {
                if (k == i || k == j) continue;
                if (cross3(pts[i], pts[j], pts[k]) < 0.0) all_left = false;
            }
            if (all_left) {
                extreme[i] = extreme[j] = 1;
            }
        }
    }
    std::vector<int> out;
    for (int i = 0; i < n; ++i) {
        if (extreme[i]) out.push_back(i);
    }
    return out;
}

std::set<std::pair<int, int>> brute_alpha_edges(const std::vector<Point2>& pts, double r) {
    const int n = static_cast<int>(pts.size());
    std::set<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Point2& p = pts[i];
            const Point2& q = pts[j];
            if (std::isinf(r)) {
                // Half-plane test on both sides.
                bool left_empty = true, right_empty = true;
                for (int k = 0; k < n; ++k) {
                    if (k == i || k == j) continue;
                    double c = cross3(p, q, pts[k]);
                    if (c > 0.0) left_empty = false;
                    if (c < 0.0) right_empty = false;
                }
                if (left_empty || right_empty) out.insert({i, j});
                continue;
            }
            double dx = q.x - p.x, dy = q.y - p.y;
            double d = std::hypot(dx, dy);
            if (d > 2.0 * r) continue;
            double h = std::sqrt(std::max(0.0, r * r - 0.25 * d * d));
            double mx = 0.5 * (p.x + q.x), my = 0.5 * (p.y + q.y);
            double nx = -dy / d, ny = dx / d;
            for (double sgn : {1.0, -1.0}) {
                double cx = mx + sgn * h * nx;
                double cy = my + sgn * h * ny;
                bool empty = true;
                for (int k = 0; k < n && empty; ++k) {
                    if (k == i || k == j) continue;
                    double sx = pts[k].x - cx, sy = pts[k].y - cy;
                    if (sx * sx + sy * sy < r * r) empty = false;
                }
                if (empty) {
                    out.insert({i, j});
                    break;
                }
            }
        }
    }
    return out;
}

double max_interior_angle(const std::vector<Point2>& cycle) {
    std::vector<Point2> cyc = cycle;
    double area2 = 0.0;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        const Point2& a = cyc[i];
        const Point2& b = cyc[(i + 1) % cyc.size()];
        area2 += a.x * b.y - b.x * a.y;
    }
    if (area2 < 0.0) std::reverse(cyc.begin(), cyc.end());
    const std::size_t n = cyc.size();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& prev = cyc[(i + n - 1) % n];
        const Point2& v = cyc[i];
        const Point2& next = cyc[(i + 1) % n];
        double ux = prev.x - v.x, uy = prev.y - v.y;
        double wx = next.x - v.x, wy = next.y - v.y;
        double cr = wx * uy - wy * ux;
        double dt = wx * ux + wy * uy;
        double ang;
        if (cr == 0.0) {
            ang = dt < 0.0 ? 180.0 : 360.0;
        } else {
            ang = std::atan2(std::fabs(cr), dt) * (180.0 / std::numbers::pi);
            if (cr < 0.0) ang = 360.0 - ang;
        }
        worst = std::max(worst, ang);
    }
    return worst;
}

namespace {

// Shared enumeration: every subset of >= 3 points (optionally forced to all),
// every circular order; feasibility decided by the callers' checks.
std::optional<double> enumerate_min_area(const std::vector<Point2>& pts, bool all_points,
                                         double alpha_degrees, bool check_alpha_and_containment) {
    const int n = static_cast<int>(pts.size());
    std::optional<double> best;
    const std::uint64_t masks = 1ull << n;
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
        if (all_points && mask + 1 != masks) continue;
        std::vector<int> subset;
        for (int b = 0; b < n; ++b) {
            if (mask & (1ull << b)) subset.push_back(b);
        }
        if (subset.size() < 3) continue;
        std::vector<int> tail(subset.begin() + 1, subset.end());
        std::sort(tail.begin(), tail.end());
        do {
            std::vector<Point2> cyc;
            cyc.push_back(pts[subset[0]]);
            for (int i : tail) cyc.push_back(pts[i]);
            if (!naive_is_simple(cyc)) continue;
            if (check_alpha_and_containment) {
                if (max_interior_angle(cyc) > 180.0 + alpha_degrees + 1e-9) continue;
                bool contains_all = true;
                for (int i = 0; i < n && contains_all; ++i) {
                    if (mask & (1ull << i)) continue;
                    if (naive_contains(cyc, pts[i]) == Where::Outside) contains_all = false;
                }
                if (!contains_all) continue;
            }
            double area = std::fabs(fan_area(cyc));
            if (!best || area < *best) best = area;
        } while (std::next_permutation(tail.begin(), tail.end()));
    }
    return best;
}

}  // namespace

std::optional<double> brute_min_alpha_polygon_area(const std::vector<Point2>& pts,
                                                   double alpha_degrees) {
    return enumerate_min_area(pts, false, alpha_degrees, true);
}

std::optional<double> brute_min_polygonalization_area(const std::vector<Point2>& pts) {
    return enumerate_min_area(pts, true, 0.0, false);
}

bool contains_polygon_sampled(const std::vector<Point2>& outer, const std::vector<Point2>& inner,
                              int samples_per_edge, double eps) {
    const std::size_t n = inner.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = inner[i];
        const Point2& b = inner[(i + 1) % n];
        for (int s = 0; s <= samples_per_edge; ++s) {
            double t = static_cast<double>(s) / samples_per_edge;
            Point2 p{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
            if (naive_contains(outer, p, eps) == Where::Outside) return false;
        }
    }
    return true;
}

}  // namespace oracle
