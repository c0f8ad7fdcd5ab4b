#include "achull/geom.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "achull/predicates.hpp"

namespace achull {

namespace {

bool finite_point(const Point2& p) { return std::isfinite(p.x) && std::isfinite(p.y); }

void require_finite(std::span<const Point2> pts) {
    for (const Point2& p : pts) {
        if (!finite_point(p)) throw DomainError(Errc::degenerate_input, "non-finite coordinate");
    }
}

double sq_dist(const Point2& a, const Point2& b) {
    double dx = a.x - b.x;
    double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

}  // namespace

Orientation orient(const Point2& p, const Point2& q, const Point2& r) {
    double det = orient2d(p, q, r);
    if (det > 0.0) return Orientation::CCW;
    if (det < 0.0) return Orientation::CW;
    return Orientation::Collinear;
}

PointSet::PointSet(std::vector<Point2> pts) {
    require_finite(pts);
    points_.reserve(pts.size());
    const double tol2 = kDedupTolerance * kDedupTolerance;
    for (const Point2& p : pts) {
        bool dup = false;
        for (const Point2& q : points_) {
            if (sq_dist(p, q) < tol2) {
                dup = true;
                break;
            }
        }
        if (!dup) points_.push_back(p);
    }
}

SimplePolygon::SimplePolygon(std::vector<Point2> vertices) {
    if (vertices.size() < 3) {
        throw DomainError(Errc::degenerate_input, "polygon needs at least 3 vertices");
    }
    require_finite(vertices);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (vertices[i] == vertices[j]) {
                throw DomainError(Errc::degenerate_input, "repeated polygon vertex");
            }
        }
    }
    double area = signed_area(std::span<const Point2>(vertices));
    if (area == 0.0) {
        throw DomainError(Errc::degenerate_input, "polygon has zero signed area");
    }
    if (area < 0.0) std::reverse(vertices.begin(), vertices.end());
    verts_ = std::move(vertices);
}

double signed_area(std::span<const Point2> cycle) {
    double sum = 0.0;
    const std::size_t n = cycle.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = cycle[i];
        const Point2& b = cycle[(i + 1) % n];
        sum += a.x * b.y - b.x * a.y;
    }
    return 0.5 * sum;
}

double signed_area(const SimplePolygon& poly) {
    return signed_area(std::span<const Point2>(poly.vertices()));
}

bool point_on_segment(const Point2& p, const Point2& a, const Point2& b) {
    if (orient(a, b, p) != Orientation::Collinear) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_properly_cross(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
    Orientation o1 = orient(a, b, c);
    Orientation o2 = orient(a, b, d);
    Orientation o3 = orient(c, d, a);
    Orientation o4 = orient(c, d, b);
    if (o1 == Orientation::Collinear || o2 == Orientation::Collinear ||
        o3 == Orientation::Collinear || o4 == Orientation::Collinear) {
        return false;
    }
    return o1 != o2 && o3 != o4;
}

bool segments_intersect(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
    if (segments_properly_cross(a, b, c, d)) return true;
    return point_on_segment(c, a, b) || point_on_segment(d, a, b) ||
           point_on_segment(a, c, d) || point_on_segment(b, c, d);
}

bool is_simple(std::span<const Point2> cycle) {
    const std::size_t n = cycle.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (cycle[i] == cycle[j]) return false;
        }
    }
    auto vert = [&](std::size_t i) -> const Point2& { return cycle[i % n]; };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            bool adj_forward = (j == i + 1);
            bool adj_wrap = (i == 0 && j == n - 1);
            if (adj_forward || adj_wrap) {
                // Shared endpoint only: reject a collinear double-back, where
                // the polygon retraces along the previous edge.
                const Point2& shared = adj_forward ? vert(j) : vert(0);
                const Point2& u = adj_forward ? vert(i) : vert(n - 1);
                const Point2& w = adj_forward ? vert(j + 1) : vert(1);
                if (orient(u, shared, w) == Orientation::Collinear) {
                    double dot = (u.x - shared.x) * (w.x - shared.x) +
                                 (u.y - shared.y) * (w.y - shared.y);
                    if (dot > 0.0) return false;
                }
            } else {
                if (segments_intersect(vert(i), vert(i + 1), vert(j), vert(j + 1))) return false;
            }
        }
    }
    return true;
}

bool is_simple(const SimplePolygon& poly) {
    return is_simple(std::span<const Point2>(poly.vertices()));
}

double interior_angle_at(const Point2& prev, const Point2& v, const Point2& next) {
    Orientation o = orient(prev, v, next);
    if (o == Orientation::Collinear) return 180.0;
    double ux = prev.x - v.x, uy = prev.y - v.y;
    double wx = next.x - v.x, wy = next.y - v.y;
    double cross = wx * uy - wy * ux;
    double dot = wx * ux + wy * uy;
    double turn = std::atan2(std::fabs(cross), dot) * (180.0 / std::numbers::pi);
    return o == Orientation::CCW ? turn : 360.0 - turn;
}

double interior_angle(const SimplePolygon& poly, std::size_t i) {
    const auto& v = poly.vertices();
    const std::size_t n = v.size();
    if (i >= n) throw std::out_of_range("interior_angle: vertex index");
    return interior_angle_at(v[(i + n - 1) % n], v[i], v[(i + 1) % n]);
}

Containment contains_point(std::span<const Point2> cycle, const Point2& p) {
    const std::size_t n = cycle.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (point_on_segment(p, cycle[i], cycle[(i + 1) % n])) return Containment::OnBoundary;
    }
    // Crossing parity against the rightward horizontal ray, half-open in y so
    // vertices on the ray are counted once.
    bool inside = false;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = cycle[i];
        const Point2& b = cycle[(i + 1) % n];
        if (a.y <= p.y) {
            if (b.y > p.y && orient(a, b, p) == Orientation::CCW) inside = !inside;
        } else {
            if (b.y <= p.y && orient(a, b, p) == Orientation::CW) inside = !inside;
        }
    }
    return inside ? Containment::Inside : Containment::Outside;
}

Containment contains_point(const SimplePolygon& poly, const Point2& p) {
    return contains_point(std::span<const Point2>(poly.vertices()), p);
}

std::vector<double> boundary_touch_params(std::span<const Point2> outer_vertices, const Point2& a,
                                          const Point2& b) {
    std::vector<double> ts = {0.0, 1.0};
    const bool horizontal = std::fabs(b.x - a.x) >= std::fabs(b.y - a.y);
    for (const Point2& v : outer_vertices) {
        if (!point_on_segment(v, a, b)) continue;
        double t = horizontal ? (v.x - a.x) / (b.x - a.x) : (v.y - a.y) / (b.y - a.y);
        ts.push_back(std::clamp(t, 0.0, 1.0));
    }
    std::sort(ts.begin(), ts.end());
    return ts;
}

bool piece_along_edge(const Point2& u, const Point2& w, const Point2& a, const Point2& b,
                      double t0, double t1) {
    if (orient(a, b, u) != Orientation::Collinear) return false;
    if (orient(a, b, w) != Orientation::Collinear) return false;
    const bool horizontal = std::fabs(b.x - a.x) >= std::fabs(b.y - a.y);
    double pu = horizontal ? (u.x - a.x) / (b.x - a.x) : (u.y - a.y) / (b.y - a.y);
    double pw = horizontal ? (w.x - a.x) / (b.x - a.x) : (w.y - a.y) / (b.y - a.y);
    const double eps = 1e-12;
    return std::min(pu, pw) <= t0 + eps && t1 <= std::max(pu, pw) + eps;
}

bool polygon_contains_polygon(const SimplePolygon& outer, const SimplePolygon& inner) {
    for (const Point2& v : inner.vertices()) {
        if (contains_point(outer, v) == Containment::Outside) return false;
    }
    const auto& h = outer.vertices();
    const auto& q = inner.vertices();
    for (std::size_t i = 0; i < h.size(); ++i) {
        const Point2& a = h[i];
        const Point2& b = h[(i + 1) % h.size()];
        for (std::size_t j = 0; j < q.size(); ++j) {
            if (segments_properly_cross(a, b, q[j], q[(j + 1) % q.size()])) return false;
        }
    }
    // With proper crossings excluded, an inner edge can only change sides at a
    // touch with the outer boundary, and every touch happens at an outer
    // vertex or an edge endpoint. Pieces running along an outer edge count as
    // on-boundary; one interior sample decides each remaining piece.
    for (std::size_t j = 0; j < q.size(); ++j) {
        const Point2& a = q[j];
        const Point2& b = q[(j + 1) % q.size()];
        std::vector<double> ts = boundary_touch_params(std::span<const Point2>(h), a, b);
        for (std::size_t k = 0; k + 1 < ts.size(); ++k) {
            double tm = 0.5 * (ts[k] + ts[k + 1]);
            if (tm <= ts[k] || tm >= ts[k + 1]) continue;  // degenerate piece
            bool on_edge = false;
            for (std::size_t i = 0; i < h.size() && !on_edge; ++i) {
                on_edge = piece_along_edge(h[i], h[(i + 1) % h.size()], a, b, ts[k], ts[k + 1]);
            }
            if (on_edge) continue;
            Point2 m{a.x + tm * (b.x - a.x), a.y + tm * (b.y - a.y)};
            if (contains_point(outer, m) == Containment::Outside) return false;
        }
    }
    return true;
}

std::vector<int> convex_hull_indices(const PointSet& pts) {
    const auto& p = pts.points();
    const int n = static_cast<int>(p.size());
    if (n < 3) throw DomainError(Errc::degenerate_input, "convex hull needs 3 distinct points");

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return p[a] < p[b]; });

    // Monotone chain keeping strict left turns, so collinear boundary points
    // never become hull vertices.
    auto build = [&](auto begin, auto end) {
        std::vector<int> chain;
        for (auto it = begin; it != end; ++it) {
            while (chain.size() >= 2 &&
                   orient(p[chain[chain.size() - 2]], p[chain.back()], p[*it]) !=
                       Orientation::CCW) {
                chain.pop_back();
            }
            chain.push_back(*it);
        }
        return chain;
    };
    std::vector<int> lower = build(order.begin(), order.end());
    std::vector<int> upper = build(order.rbegin(), order.rend());

    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    if (lower.size() < 3) throw DomainError(Errc::degenerate_input, "all points collinear");
    return lower;
}

SimplePolygon convex_hull(const PointSet& pts) {
    std::vector<int> idx = convex_hull_indices(pts);
    std::vector<Point2> verts;
    verts.reserve(idx.size());
    for (int i : idx) verts.push_back(pts[i]);
    return SimplePolygon(std::move(verts));
}

}  // namespace achull
