#include "achull/triangulate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "achull/predicates.hpp"

namespace achull {

namespace {

constexpr int kGhost = -1;

// Triangles are stored as index triples. Finite triangles are CCW; ghost
// triangles stand for the outer face and are normalized to (b, a, kGhost)
// where a->b is a CCW hull edge.
struct TriSoup {
    std::vector<std::array<int, 3>> tris;
    std::vector<bool> alive;

    int add(std::array<int, 3> t) {
        tris.push_back(t);
        alive.push_back(true);
        return static_cast<int>(tris.size()) - 1;
    }
};

std::array<int, 3> normalize_ghost_last(std::array<int, 3> t) {
    while (t[2] != kGhost) {
        t = {t[1], t[2], t[0]};
    }
    return t;
}

bool strictly_between(const Point2& p, const Point2& a, const Point2& b) {
    // Assumes p collinear with a,b; true iff p is interior to the segment.
    if (a.x != b.x) return std::min(a.x, b.x) < p.x && p.x < std::max(a.x, b.x);
    return std::min(a.y, b.y) < p.y && p.y < std::max(a.y, b.y);
}

// Circumdisk membership for insertion: strict for finite triangles; a ghost
// triangle's disk is the open half-plane right of its hull edge plus the
// open hull edge segment itself.
bool in_circumdisk(const std::vector<Point2>& pts, const std::array<int, 3>& t, const Point2& p) {
    if (t[2] == kGhost) {
        const Point2& b = pts[t[0]];
        const Point2& a = pts[t[1]];
        Orientation o = orient(a, b, p);
        if (o == Orientation::CW) return true;
        if (o == Orientation::Collinear) return strictly_between(p, a, b);
        return false;
    }
    return incircle(pts[t[0]], pts[t[1]], pts[t[2]], p) > 0.0;
}

const Point2& lex_min_point(const std::vector<Point2>& pts, int i, int j) {
    return pts[i] < pts[j] ? pts[i] : pts[j];
}

}  // namespace

Radius::Radius(double v) : value(v) {
    if (!(v > 0.0)) throw std::invalid_argument("radius must be positive");
}

Point2 circumcenter(const Point2& a, const Point2& b, const Point2& c) {
    double abx = b.x - a.x, aby = b.y - a.y;
    double acx = c.x - a.x, acy = c.y - a.y;
    double d = 2.0 * (abx * acy - aby * acx);
    double ab2 = abx * abx + aby * aby;
    double ac2 = acx * acx + acy * acy;
    double ux = (acy * ab2 - aby * ac2) / d;
    double uy = (abx * ac2 - acx * ab2) / d;
    return Point2{a.x + ux, a.y + uy};
}

double circumradius(const Point2& a, const Point2& b, const Point2& c) {
    Point2 cc = circumcenter(a, b, c);
    return std::hypot(cc.x - a.x, cc.y - a.y);
}

double triangle_circumradius(const Triangulation& t, int tri) {
    const auto& v = t.triangles[tri];
    const auto& p = t.points.points();
    return circumradius(p[v[0]], p[v[1]], p[v[2]]);
}

Triangulation delaunay(const PointSet& pts) {
    const auto& p = pts.points();
    const int n = static_cast<int>(p.size());
    if (n < 3) throw DomainError(Errc::degenerate_input, "triangulation needs 3 distinct points");

    // Seed triangle: the first two points plus the first non-collinear point.
    int k = -1;
    for (int i = 2; i < n; ++i) {
        if (orient(p[0], p[1], p[i]) != Orientation::Collinear) {
            k = i;
            break;
        }
    }
    if (k < 0) throw DomainError(Errc::degenerate_input, "all points collinear");

    TriSoup soup;
    {
        std::array<int, 3> seed = {0, 1, k};
        if (orient(p[0], p[1], p[k]) == Orientation::CW) std::swap(seed[1], seed[2]);
        soup.add(seed);
        soup.add(normalize_ghost_last({seed[1], seed[0], kGhost}));
        soup.add(normalize_ghost_last({seed[2], seed[1], kGhost}));
        soup.add(normalize_ghost_last({seed[0], seed[2], kGhost}));
    }

    std::vector<char> is_bad;
    for (int pi = 2; pi < n; ++pi) {
        if (pi == k) continue;
        const Point2& q = p[pi];

        is_bad.assign(soup.tris.size(), 0);
        bool any_bad = false;
        for (std::size_t t = 0; t < soup.tris.size(); ++t) {
            if (!soup.alive[t]) continue;
            if (in_circumdisk(p, soup.tris[t], q)) {
                is_bad[t] = 1;
                any_bad = true;
            }
        }
        if (!any_bad) {
            throw std::logic_error("delaunay: insertion point in no circumdisk");
        }

        // Directed-edge ownership map for the current soup.
        std::map<std::pair<int, int>, int> owner;
        for (std::size_t t = 0; t < soup.tris.size(); ++t) {
            if (!soup.alive[t]) continue;
            const auto& tr = soup.tris[t];
            for (int e = 0; e < 3; ++e) {
                owner[{tr[e], tr[(e + 1) % 3]}] = static_cast<int>(t);
            }
        }

        // Cavity boundary: directed edges of bad triangles whose across
        // neighbor is good; each gets joined to the new point.
        std::vector<std::array<int, 3>> fresh;
        for (std::size_t t = 0; t < soup.tris.size(); ++t) {
            if (!soup.alive[t] || !is_bad[t]) continue;
            const auto& tr = soup.tris[t];
            for (int e = 0; e < 3; ++e) {
                int u = tr[e], v = tr[(e + 1) % 3];
                auto it = owner.find({v, u});
                bool neighbor_bad = it != owner.end() && is_bad[it->second];
                if (!neighbor_bad) fresh.push_back({u, v, pi});
            }
            soup.alive[t] = false;
        }
        for (auto t : fresh) {
            if (t[0] == kGhost || t[1] == kGhost) t = normalize_ghost_last(t);
            soup.add(t);
        }
    }

    // Collect finite triangles.
    std::vector<std::array<int, 3>> tris;
    for (std::size_t t = 0; t < soup.tris.size(); ++t) {
        if (soup.alive[t] && soup.tris[t][2] != kGhost) tris.push_back(soup.tris[t]);
    }

    // Normalize exact co-circular ties: whenever the four corners of an
    // interior quad lie on one circle, keep the diagonal through the quad's
    // lexicographically smallest point. Each flip moves a diagonal onto a
    // lexicographically smaller endpoint, so the loop terminates.
    bool changed = true;
    std::size_t guard = 0;
    const std::size_t guard_max = 10 * tris.size() * tris.size() + 64;
    while (changed) {
        if (++guard > guard_max) throw std::logic_error("delaunay: tie normalization diverged");
        changed = false;
        std::map<std::pair<int, int>, std::vector<int>> edges;
        for (std::size_t t = 0; t < tris.size(); ++t) {
            const auto& tr = tris[t];
            for (int e = 0; e < 3; ++e) {
                int u = tr[e], v = tr[(e + 1) % 3];
                edges[{std::min(u, v), std::max(u, v)}].push_back(static_cast<int>(t));
            }
        }
        for (const auto& [edge, owners] : edges) {
            if (owners.size() != 2) continue;
            auto& t1 = tris[owners[0]];
            auto& t2 = tris[owners[1]];
            auto opposite = [&](const std::array<int, 3>& tr) {
                for (int v : tr) {
                    if (v != edge.first && v != edge.second) return v;
                }
                return -1;
            };
            int w1 = opposite(t1);
            int w2 = opposite(t2);
            if (incircle(p[t1[0]], p[t1[1]], p[t1[2]], p[w2]) != 0.0) continue;
            const Point2& diag_cur = lex_min_point(p, edge.first, edge.second);
            const Point2& diag_alt = lex_min_point(p, w1, w2);
            if (!(diag_alt < diag_cur)) continue;
            // Flip: orient t1 as (a,b,w1) with a->b the shared edge.
            int a = edge.first, b = edge.second;
            bool found = false;
            for (int e = 0; e < 3 && !found; ++e) {
                if (t1[e] == a && t1[(e + 1) % 3] == b) found = true;
            }
            if (!found) std::swap(a, b);
            t1 = {a, w2, w1};
            t2 = {w2, b, w1};
            changed = true;
            break;
        }
    }

    Triangulation result{pts, {}, {}};
    for (auto t : tris) {
        int m = std::min({t[0], t[1], t[2]});
        while (t[0] != m) t = {t[1], t[2], t[0]};
        result.triangles.push_back(t);
    }
    std::sort(result.triangles.begin(), result.triangles.end());
    for (std::size_t t = 0; t < result.triangles.size(); ++t) {
        const auto& tr = result.triangles[t];
        for (int e = 0; e < 3; ++e) {
            int u = tr[e], v = tr[(e + 1) % 3];
            auto key = std::make_pair(std::min(u, v), std::max(u, v));
            auto [it, inserted] = result.edge_triangles.try_emplace(key, std::array<int, 2>{-1, -1});
            if (it->second[0] < 0) {
                it->second[0] = static_cast<int>(t);
            } else {
                it->second[1] = static_cast<int>(t);
            }
        }
    }
    return result;
}

std::set<std::pair<int, int>> alpha_edges(const Triangulation& t, Radius r) {
    const auto& p = t.points.points();
    std::set<std::pair<int, int>> out;
    for (const auto& [edge, owners] : t.edge_triangles) {
        const Point2& a = p[edge.first];
        const Point2& b = p[edge.second];
        Point2 mid{0.5 * (a.x + b.x), 0.5 * (a.y + b.y)};
        double half = 0.5 * std::hypot(b.x - a.x, b.y - a.y);
        // Along the dual Voronoi edge the empty-disk radius |c - a| is convex
        // with minimum `half` at the edge midpoint's projection.
        double dirx = -(b.y - a.y), diry = b.x - a.x;

        auto center_of = [&](int tri) {
            const auto& tv = t.triangles[tri];
            return circumcenter(p[tv[0]], p[tv[1]], p[tv[2]]);
        };

        double rmin, rmax;
        if (owners[1] >= 0) {
            Point2 c1 = center_of(owners[0]);
            Point2 c2 = center_of(owners[1]);
            double r1 = std::hypot(c1.x - a.x, c1.y - a.y);
            double r2 = std::hypot(c2.x - a.x, c2.y - a.y);
            double s1 = (c1.x - mid.x) * dirx + (c1.y - mid.y) * diry;
            double s2 = (c2.x - mid.x) * dirx + (c2.y - mid.y) * diry;
            bool straddles = (std::min(s1, s2) <= 0.0) && (0.0 <= std::max(s1, s2));
            rmin = straddles ? half : std::min(r1, r2);
            rmax = std::max(r1, r2);
        } else {
            // Hull edge: Voronoi ray from the circumcenter away from the
            // opposite vertex.
            const auto& tv = t.triangles[owners[0]];
            int w = tv[0];
            for (int v : tv) {
                if (v != edge.first && v != edge.second) w = v;
            }
            Point2 c1 = center_of(owners[0]);
            double r1 = std::hypot(c1.x - a.x, c1.y - a.y);
            double sw = (p[w].x - mid.x) * dirx + (p[w].y - mid.y) * diry;
            double outx = sw > 0.0 ? -dirx : dirx;
            double outy = sw > 0.0 ? -diry : diry;
            double tm = (mid.x - c1.x) * outx + (mid.y - c1.y) * outy;
            rmin = tm >= 0.0 ? half : r1;
            rmax = std::numeric_limits<double>::infinity();
        }
        if (rmin <= r.value && r.value <= rmax) out.insert(edge);
    }
    return out;
}

namespace {

struct DirectedEdgeKey {
    int u, v;
    bool operator<(const DirectedEdgeKey& o) const {
        return u < o.u || (u == o.u && v < o.v);
    }
};

}  // namespace

AlphaShape alpha_region(const Triangulation& t, Radius r) {
    const auto& p = t.points.points();
    const int nt = static_cast<int>(t.triangles.size());

    AlphaShape shape;
    shape.radius = r;
    std::vector<char> in_region(nt, 0);
    for (int i = 0; i < nt; ++i) {
        if (triangle_circumradius(t, i) <= r.value) {
            in_region[i] = 1;
            shape.region_triangles.push_back(i);
        }
    }
    if (shape.region_triangles.empty()) {
        shape.connected = false;
        shape.area = 0.0;
        return shape;
    }

    // Edge-connected components via union-find over region triangles.
    std::vector<int> parent(nt);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [edge, owners] : t.edge_triangles) {
        (void)edge;
        if (owners[1] >= 0 && in_region[owners[0]] && in_region[owners[1]]) {
            parent[find(owners[0])] = find(owners[1]);
        }
    }
    int components = 0;
    for (int i : shape.region_triangles) {
        if (find(i) == i) ++components;
    }

    // Boundary: directed edges of region triangles whose across-neighbor is
    // outside the region. The successor of (u,v) is found by pivoting around
    // v through region triangles, which handles pinch vertices correctly.
    std::map<DirectedEdgeKey, int> dir_owner;
    for (int i = 0; i < nt; ++i) {
        if (!in_region[i]) continue;
        const auto& tr = t.triangles[i];
        for (int e = 0; e < 3; ++e) {
            dir_owner[{tr[e], tr[(e + 1) % 3]}] = i;
        }
    }
    auto is_boundary = [&](int u, int v) {
        return dir_owner.count({u, v}) != 0 && dir_owner.count({v, u}) == 0;
    };
    std::map<DirectedEdgeKey, char> visited;
    for (const auto& [key, tri] : dir_owner) {
        (void)tri;
        if (is_boundary(key.u, key.v)) visited[key] = 0;
    }

    auto vertex_after = [&](int tri, int v) {
        const auto& tr = t.triangles[tri];
        for (int e = 0; e < 3; ++e) {
            if (tr[e] == v) return tr[(e + 1) % 3];
        }
        throw std::logic_error("alpha_region: vertex not in triangle");
    };

    for (auto& [start, seen] : visited) {
        if (seen) continue;
        std::vector<int> loop;
        DirectedEdgeKey cur = start;
        do {
            visited[cur] = 1;
            loop.push_back(cur.u);
            // Pivot around cur.v until the outgoing boundary edge appears.
            int v = cur.v;
            int w = vertex_after(dir_owner[{cur.u, cur.v}], v);
            while (!is_boundary(v, w)) {
                auto it = dir_owner.find({w, v});
                if (it == dir_owner.end()) throw std::logic_error("alpha_region: open pivot");
                w = vertex_after(it->second, v);
            }
            cur = {v, w};
        } while (!(cur.u == start.u && cur.v == start.v));
        shape.boundary_loops.push_back(std::move(loop));
    }

    double area = 0.0;
    for (const auto& loop : shape.boundary_loops) {
        std::vector<Point2> cycle;
        cycle.reserve(loop.size());
        for (int i : loop) cycle.push_back(p[i]);
        area += signed_area(std::span<const Point2>(cycle));
    }
    shape.area = area;
    shape.connected = components == 1 && shape.boundary_loops.size() == 1;
    return shape;
}

namespace {

bool region_contains_point(const Triangulation& t, const std::vector<int>& region_triangles,
                           const Point2& q) {
    const auto& p = t.points.points();
    for (int tri : region_triangles) {
        const auto& tr = t.triangles[tri];
        if (orient(p[tr[0]], p[tr[1]], q) != Orientation::CW &&
            orient(p[tr[1]], p[tr[2]], q) != Orientation::CW &&
            orient(p[tr[2]], p[tr[0]], q) != Orientation::CW) {
            return true;
        }
    }
    return false;
}

bool region_contains_polygon(const Triangulation& t, const AlphaShape& shape,
                             const SimplePolygon& target) {
    const auto& p = t.points.points();
    const auto& tv = target.vertices();

    // Map target vertices onto triangulation point indices.
    std::vector<int> vertex_index(tv.size(), -1);
    for (std::size_t i = 0; i < tv.size(); ++i) {
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (p[j] == tv[i]) {
                vertex_index[i] = static_cast<int>(j);
                break;
            }
        }
        if (vertex_index[i] < 0) {
            throw std::invalid_argument("triangulation was not built on the target's vertex set");
        }
    }

    std::vector<char> covered(p.size(), 0);
    for (int tri : shape.region_triangles) {
        for (int v : t.triangles[tri]) covered[v] = 1;
    }
    for (int vi : vertex_index) {
        if (!covered[vi]) return false;
    }

    for (const auto& loop : shape.boundary_loops) {
        for (std::size_t e = 0; e < loop.size(); ++e) {
            const Point2& a = p[loop[e]];
            const Point2& b = p[loop[(e + 1) % loop.size()]];
            for (std::size_t i = 0; i < tv.size(); ++i) {
                const Point2& c = tv[i];
                const Point2& d = tv[(i + 1) % tv.size()];
                if (segments_properly_cross(a, b, c, d)) return false;
            }
        }
    }

    // The boundary can still pass through a target edge at shared vertices;
    // classify each piece of every target edge between such touches. Pieces
    // running along a boundary edge count as on-boundary.
    for (std::size_t i = 0; i < tv.size(); ++i) {
        const Point2& a = tv[i];
        const Point2& b = tv[(i + 1) % tv.size()];
        std::vector<double> ts = boundary_touch_params(std::span<const Point2>(p), a, b);
        for (std::size_t k = 0; k + 1 < ts.size(); ++k) {
            double tm = 0.5 * (ts[k] + ts[k + 1]);
            if (tm <= ts[k] || tm >= ts[k + 1]) continue;
            bool on_edge = false;
            for (const auto& loop : shape.boundary_loops) {
                for (std::size_t e = 0; e < loop.size() && !on_edge; ++e) {
                    on_edge = piece_along_edge(p[loop[e]], p[loop[(e + 1) % loop.size()]], a, b,
                                               ts[k], ts[k + 1]);
                }
                if (on_edge) break;
            }
            if (on_edge) continue;
            Point2 m{a.x + tm * (b.x - a.x), a.y + tm * (b.y - a.y)};
            if (!region_contains_point(t, shape.region_triangles, m)) return false;
        }
    }
    return true;
}

}  // namespace

std::pair<Radius, AlphaShape> best_containing_alpha(const Triangulation& t,
                                                    const SimplePolygon& target) {
    std::vector<double> radii;
    radii.reserve(t.triangles.size());
    for (std::size_t i = 0; i < t.triangles.size(); ++i) {
        radii.push_back(triangle_circumradius(t, static_cast<int>(i)));
    }
    std::sort(radii.begin(), radii.end());
    radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
    radii.push_back(std::numeric_limits<double>::infinity());

    bool have_best = false;
    Radius best_r;
    AlphaShape best_shape;
    for (double rv : radii) {
        Radius r = std::isinf(rv) ? Radius::infinite() : Radius(rv);
        AlphaShape shape = alpha_region(t, r);
        if (!shape.connected) continue;
        if (!region_contains_polygon(t, shape, target)) continue;
        // The region grows with r, so areas of distinct candidates are
        // strictly increasing except at the final infinite duplicate; ties go
        // to the larger radius.
        if (!have_best || shape.area < best_shape.area ||
            (shape.area == best_shape.area && rv > best_r.value)) {
            have_best = true;
            best_r = r;
            best_shape = std::move(shape);
        }
    }
    if (!have_best) throw std::logic_error("best_containing_alpha: hull candidate not feasible");
    return {best_r, std::move(best_shape)};
}

}  // namespace achull
