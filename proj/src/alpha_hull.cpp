#include "achull/alpha_hull.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace achull {

namespace {

double dot_at(const Point2& shared, const Point2& u, const Point2& w) {
    return (u.x - shared.x) * (w.x - shared.x) + (u.y - shared.y) * (w.y - shared.y);
}

// Collinear continuation that retraces the incoming edge (interior angle 0 /
// 360); straight-through collinearity (angle 180) is legal.
bool doubles_back(const Point2& u, const Point2& shared, const Point2& w) {
    return orient(u, shared, w) == Orientation::Collinear && dot_at(shared, u, w) > 0.0;
}

// Rotation- and reflection-invariant index form of a cycle: smallest index
// first, then the smaller of its two neighbors.
std::vector<int> canonical_cycle(const std::vector<int>& cycle) {
    const std::size_t n = cycle.size();
    std::size_t at = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (cycle[i] < cycle[at]) at = i;
    }
    int next = cycle[(at + 1) % n];
    int prev = cycle[(at + n - 1) % n];
    std::vector<int> out;
    out.reserve(n);
    if (next <= prev) {
        for (std::size_t i = 0; i < n; ++i) out.push_back(cycle[(at + i) % n]);
    } else {
        for (std::size_t i = 0; i < n; ++i) out.push_back(cycle[(at + n - i) % n]);
    }
    return out;
}

// Enumerates every simple circular order of `subset` (first vertex fixed,
// reflections skipped), pruning as soon as a partial chain self-intersects.
// Calls `leaf` with each simple cycle.
template <typename Leaf>
void enumerate_simple_cycles(const std::vector<Point2>& pts, const std::vector<int>& subset,
                             Leaf&& leaf) {
    const std::size_t k = subset.size();
    std::vector<int> seq;
    seq.reserve(k);
    seq.push_back(subset[0]);
    std::vector<char> used(k, 0);
    used[0] = 1;

    auto edge_ok = [&](int candidate) {
        const std::size_t m = seq.size();
        const Point2& tail = pts[seq[m - 1]];
        const Point2& c = pts[candidate];
        if (m >= 2 && doubles_back(pts[seq[m - 2]], tail, c)) return false;
        for (std::size_t j = 0; j + 2 < m; ++j) {
            if (segments_intersect(pts[seq[j]], pts[seq[j + 1]], tail, c)) return false;
        }
        return true;
    };

    auto close_ok = [&] {
        const std::size_t m = seq.size();
        const Point2& tail = pts[seq[m - 1]];
        const Point2& head = pts[seq[0]];
        if (doubles_back(pts[seq[m - 2]], tail, head)) return false;
        if (doubles_back(tail, head, pts[seq[1]])) return false;
        for (std::size_t j = 1; j + 2 < m; ++j) {
            if (segments_intersect(pts[seq[j]], pts[seq[j + 1]], tail, head)) return false;
        }
        return true;
    };

    auto recurse = [&](auto&& self) -> void {
        if (seq.size() == k) {
            if (k > 2 && seq[1] > seq[k - 1]) return;  // reflection duplicate
            if (close_ok()) leaf(seq);
            return;
        }
        for (std::size_t i = 1; i < k; ++i) {
            if (used[i]) continue;
            if (!edge_ok(subset[i])) continue;
            used[i] = 1;
            seq.push_back(subset[i]);
            self(self);
            seq.pop_back();
            used[i] = 0;
        }
    };
    recurse(recurse);
}

struct BestCycle {
    double area = 0.0;
    std::vector<int> cycle;

    bool offer(double candidate_area, const std::vector<int>& candidate_cycle) {
        if (!cycle.empty()) {
            if (candidate_area >= area - kAreaTieTolerance) {
                bool tie = candidate_area <= area + kAreaTieTolerance;
                if (!tie) return false;
                std::vector<int> canon = canonical_cycle(candidate_cycle);
                if (!(canon < cycle)) return false;
                area = std::min(area, candidate_area);
                cycle = std::move(canon);
                return true;
            }
        }
        area = candidate_area;
        cycle = canonical_cycle(candidate_cycle);
        return true;
    }
};

SimplePolygon realize_ccw(const std::vector<Point2>& pts, const std::vector<int>& cycle) {
    std::vector<Point2> verts;
    verts.reserve(cycle.size());
    for (int i : cycle) verts.push_back(pts[i]);
    return SimplePolygon(std::move(verts));
}

bool cycle_angles_within(const std::vector<Point2>& cyc, double limit) {
    const std::size_t n = cyc.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (interior_angle_at(cyc[(i + n - 1) % n], cyc[i], cyc[(i + 1) % n]) > limit) {
            return false;
        }
    }
    return true;
}

}  // namespace

AlphaDegrees::AlphaDegrees(double degrees) : value_(degrees) {
    if (!(degrees >= 0.0 && degrees <= 180.0)) {
        throw std::invalid_argument("alpha must lie in [0, 180] degrees");
    }
}

bool is_alpha_polygon(const SimplePolygon& poly, AlphaDegrees alpha) {
    const double limit = 180.0 + alpha.value() + kAngleToleranceDeg;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        if (interior_angle(poly, i) > limit) return false;
    }
    return true;
}

bool verify_certificate(const PointSet& points, const SimplePolygon& poly, AlphaDegrees alpha,
                        const AreaBudget& budget) {
    const auto& p = points.points();
    for (const Point2& v : poly.vertices()) {
        bool found = false;
        for (const Point2& q : p) {
            if (q == v) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    if (!is_simple(poly)) return false;
    if (!is_alpha_polygon(poly, alpha)) return false;
    for (const Point2& q : p) {
        if (contains_point(poly, q) == Containment::Outside) return false;
    }
    return signed_area(poly) <= budget.area + budget.tolerance;
}

HullResult ach_exact(const PointSet& points, AlphaDegrees alpha, int cap) {
    const auto& p = points.points();
    const int n = static_cast<int>(p.size());
    if (n < 3) throw DomainError(Errc::degenerate_input, "need at least 3 distinct points");
    if (n > cap) {
        throw DomainError(Errc::too_large, std::to_string(n) + " points exceed exact cap " +
                                               std::to_string(cap));
    }

    std::vector<int> extremes = convex_hull_indices(points);
    std::sort(extremes.begin(), extremes.end());
    std::vector<char> is_extreme(n, 0);
    for (int i : extremes) is_extreme[i] = 1;
    std::vector<int> free_pts;
    for (int i = 0; i < n; ++i) {
        if (!is_extreme[i]) free_pts.push_back(i);
    }

    const double limit = 180.0 + alpha.value() + kAngleToleranceDeg;
    BestCycle best;

    const std::uint64_t masks = 1ull << free_pts.size();
    std::vector<int> subset;
    std::vector<Point2> cyc;
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
        subset = extremes;
        for (std::size_t b = 0; b < free_pts.size(); ++b) {
            if (mask & (1ull << b)) subset.push_back(free_pts[b]);
        }
        std::sort(subset.begin(), subset.end());
        std::vector<char> in_subset(n, 0);
        for (int i : subset) in_subset[i] = 1;

        enumerate_simple_cycles(p, subset, [&](const std::vector<int>& seq) {
            cyc.clear();
            for (int i : seq) cyc.push_back(p[i]);
            double a = signed_area(std::span<const Point2>(cyc));
            if (a < 0.0) {
                std::reverse(cyc.begin(), cyc.end());
                a = -a;
            }
            if (!cycle_angles_within(cyc, limit)) return;
            for (int i = 0; i < n; ++i) {
                if (in_subset[i]) continue;
                if (contains_point(std::span<const Point2>(cyc), p[i]) == Containment::Outside) {
                    return;
                }
            }
            best.offer(a, seq);
        });
    }

    if (best.cycle.empty()) {
        // The convex hull is always feasible, so this is unreachable.
        throw std::logic_error("ach_exact: no feasible cycle");
    }
    SimplePolygon poly = realize_ccw(p, best.cycle);
    double area = signed_area(poly);
    return HullResult{std::move(poly), alpha, area, HullMethod::Exact};
}

SimplePolygon min_area_polygonalization(const PointSet& points, int cap) {
    const auto& p = points.points();
    const int n = static_cast<int>(p.size());
    if (n < 3) throw DomainError(Errc::degenerate_input, "need at least 3 distinct points");
    if (n > cap) {
        throw DomainError(Errc::too_large, std::to_string(n) + " points exceed exact cap " +
                                               std::to_string(cap));
    }
    {
        // Rejects all-collinear input up front.
        convex_hull_indices(points);
    }

    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;

    BestCycle best;
    std::vector<Point2> cyc;
    enumerate_simple_cycles(p, all, [&](const std::vector<int>& seq) {
        cyc.clear();
        for (int i : seq) cyc.push_back(p[i]);
        best.offer(std::fabs(signed_area(std::span<const Point2>(cyc))), seq);
    });
    if (best.cycle.empty()) throw std::logic_error("min_area_polygonalization: no simple cycle");
    return realize_ccw(p, best.cycle);
}

HullResult ach_heuristic(const PointSet& points, AlphaDegrees alpha) {
    const auto& p = points.points();
    const int n = static_cast<int>(p.size());
    if (n < 3) throw DomainError(Errc::degenerate_input, "need at least 3 distinct points");

    std::vector<int> cycle = convex_hull_indices(points);
    std::vector<char> on_cycle(n, 0);
    for (int i : cycle) on_cycle[i] = 1;
    std::vector<int> pool;
    for (int i = 0; i < n; ++i) {
        if (!on_cycle[i]) pool.push_back(i);
    }

    const double limit = 180.0 + alpha.value() + kAngleToleranceDeg;

    struct Candidate {
        double area;
        int point;
        int edge;
    };

    auto legal = [&](const Candidate& cand) {
        const int m = static_cast<int>(cycle.size());
        const int e = cand.edge;
        const int ia = cycle[e];
        const int ib = cycle[(e + 1) % m];
        const int iprev = cycle[(e + m - 1) % m];
        const int inext = cycle[(e + 2) % m];
        const Point2& a = p[ia];
        const Point2& b = p[ib];
        const Point2& q = p[cand.point];

        // New interior angles at the dig point and the edge endpoints.
        if (interior_angle_at(a, q, b) > limit) return false;
        if (interior_angle_at(p[iprev], a, q) > limit) return false;
        if (interior_angle_at(q, b, p[inext]) > limit) return false;

        // Triangle must not capture any other point: a point strictly inside
        // it, or on the retired edge a-b, would end up outside the polygon.
        for (int i = 0; i < n; ++i) {
            if (i == ia || i == ib || i == cand.point) continue;
            const Point2& s = p[i];
            bool inside = orient(a, b, s) == Orientation::CCW &&
                          orient(b, q, s) == Orientation::CCW &&
                          orient(q, a, s) == Orientation::CCW;
            if (inside || point_on_segment(s, a, b)) return false;
        }

        // The two new edges may touch the boundary only at a and b.
        for (int j = 0; j < m; ++j) {
            if (j == e) continue;
            const Point2& u = p[cycle[j]];
            const Point2& v = p[cycle[(j + 1) % m]];
            if (j == (e + m - 1) % m) {
                if (doubles_back(u, a, q)) return false;
            } else if (segments_intersect(a, q, u, v)) {
                return false;
            }
        }
        for (int j = 0; j < m; ++j) {
            if (j == e) continue;
            const Point2& u = p[cycle[j]];
            const Point2& v = p[cycle[(j + 1) % m]];
            if (j == (e + 1) % m) {
                if (doubles_back(q, b, v)) return false;
            } else if (segments_intersect(q, b, u, v)) {
                return false;
            }
        }
        return true;
    };

    std::vector<Candidate> candidates;
    while (!pool.empty()) {
        const int m = static_cast<int>(cycle.size());
        candidates.clear();
        for (int pt : pool) {
            for (int e = 0; e < m; ++e) {
                const Point2& a = p[cycle[e]];
                const Point2& b = p[cycle[(e + 1) % m]];
                const Point2& q = p[pt];
                if (orient(a, b, q) != Orientation::CCW) continue;
                double doubled = (b.x - a.x) * (q.y - a.y) - (b.y - a.y) * (q.x - a.x);
                candidates.push_back({0.5 * doubled, pt, e});
            }
        }
        // Largest removed area first; ties by smaller point then edge index.
        std::sort(candidates.begin(), candidates.end(), [](const Candidate& x, const Candidate& y) {
            if (x.area != y.area) return x.area > y.area;
            if (x.point != y.point) return x.point < y.point;
            return x.edge < y.edge;
        });
        bool dug = false;
        for (const Candidate& cand : candidates) {
            if (!legal(cand)) continue;
            cycle.insert(cycle.begin() + cand.edge + 1, cand.point);
            pool.erase(std::find(pool.begin(), pool.end(), cand.point));
            dug = true;
            break;
        }
        if (!dug) break;
    }

    std::vector<Point2> verts;
    verts.reserve(cycle.size());
    for (int i : cycle) verts.push_back(p[i]);
    SimplePolygon poly{std::move(verts)};
    double area = signed_area(poly);
    return HullResult{std::move(poly), alpha, area, HullMethod::Heuristic};
}

}  // namespace achull
