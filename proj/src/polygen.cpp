#include "achull/polygen.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace achull {

namespace {

std::vector<Point2> sample_distinct_points(SplitMix64& rng, int n) {
    std::vector<Point2> pts;
    pts.reserve(n);
    while (static_cast<int>(pts.size()) < n) {
        Point2 p{rng.next_unit(), rng.next_unit()};
        bool dup = false;
        for (const Point2& q : pts) {
            if (q == p) {
                dup = true;
                break;
            }
        }
        if (!dup) pts.push_back(p);
    }
    return pts;
}

// First improper pair of non-adjacent edges, or (-1,-1) when none.
std::pair<int, int> find_crossing(const std::vector<Point2>& cyc) {
    const int n = static_cast<int>(cyc.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (j == i + 1 || (i == 0 && j == n - 1)) continue;
            if (segments_intersect(cyc[i], cyc[(i + 1) % n], cyc[j], cyc[(j + 1) % n])) {
                return {i, j};
            }
        }
    }
    return {-1, -1};
}

}  // namespace

std::uint64_t batch_polygon_seed(std::uint64_t batch_seed, std::uint64_t k) {
    return SplitMix64(batch_seed ^ k).next();
}

GenOutcome random_simple_polygon_traced(const GenConfig& cfg) {
    if (cfg.n < 3) throw DomainError(Errc::degenerate_input, "polygon needs n >= 3");
    const long budget = cfg.max_2opt_rounds < 0 ? 10L * cfg.n * cfg.n : cfg.max_2opt_rounds;
    constexpr int kMaxReseeds = 4096;

    for (int attempt = 0; attempt <= kMaxReseeds; ++attempt) {
        const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(attempt);
        SplitMix64 rng(seed);
        std::vector<Point2> cyc = sample_distinct_points(rng, cfg.n);
        for (int i = cfg.n - 1; i > 0; --i) {
            std::swap(cyc[i], cyc[rng.next_below(static_cast<std::uint64_t>(i) + 1)]);
        }

        long moves = 0;
        bool ok = true;
        while (true) {
            auto [i, j] = find_crossing(cyc);
            if (i < 0) break;
            if (++moves > budget) {
                ok = false;
                break;
            }
            std::reverse(cyc.begin() + i + 1, cyc.begin() + j + 1);
        }
        if (!ok) continue;
        if (!is_simple(std::span<const Point2>(cyc))) continue;
        double area = signed_area(std::span<const Point2>(cyc));
        if (area == 0.0) continue;
        if (area < 0.0) std::reverse(cyc.begin(), cyc.end());
        return GenOutcome{SimplePolygon(std::move(cyc)), seed, attempt};
    }
    throw DomainError(Errc::generation_failed,
                      "no simple polygon within budget from seed " + std::to_string(cfg.seed));
}

SimplePolygon random_simple_polygon(const GenConfig& cfg) {
    return random_simple_polygon_traced(cfg).polygon;
}

SimplePolygon scale_to_unit(const SimplePolygon& poly) {
    const auto& v = poly.vertices();
    double minx = v[0].x, maxx = v[0].x, miny = v[0].y, maxy = v[0].y;
    for (const Point2& p : v) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    }
    const double side = std::max(maxx - minx, maxy - miny);
    const double s = 1.0 / side;
    std::vector<Point2> out;
    out.reserve(v.size());
    for (const Point2& p : v) {
        out.push_back(Point2{(p.x - minx) * s, (p.y - miny) * s});
    }
    return SimplePolygon(std::move(out));
}

}  // namespace achull
