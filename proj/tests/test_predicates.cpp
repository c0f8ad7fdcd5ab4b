#include <doctest.h>

#include <cmath>

#include "achull/geom.hpp"
#include "achull/polygen.hpp"
#include "achull/predicates.hpp"

using namespace achull;

namespace {

// Dyadic coordinates keep the constructions below exact in doubles.
Point2 dyadic_point(SplitMix64& rng) {
    auto coord = [&] { return static_cast<double>(static_cast<int>(rng.next_below(513)) - 256) / 256.0; };
    return Point2{coord(), coord()};
}

}  // namespace

TEST_CASE("orient2d signs on canonical triples") {
    CHECK(orient2d({0, 0}, {1, 0}, {0, 1}) > 0.0);
    CHECK(orient2d({0, 0}, {0, 1}, {1, 0}) < 0.0);
    CHECK(orient2d({0, 0}, {1, 1}, {2, 2}) == 0.0);
}

TEST_CASE("orient2d is exact on constructed collinear triples") {
    SplitMix64 rng(2024);
    int checked = 0;
    while (checked < 500) {
        Point2 a = dyadic_point(rng);
        Point2 b = dyadic_point(rng);
        if (a == b) continue;
        // c = a + (k/16)(b - a) is exact for dyadic inputs.
        double t = static_cast<double>(rng.next_below(33)) / 16.0;
        Point2 c{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
        CAPTURE(a.x);
        CAPTURE(a.y);
        REQUIRE(orient2d(a, b, c) == 0.0);
        // A one-ulp nudge must tip the sign deterministically both ways.
        Point2 up{c.x, std::nextafter(c.y, 1e30)};
        Point2 dn{c.x, std::nextafter(c.y, -1e30)};
        double su = orient2d(a, b, up);
        double sd = orient2d(a, b, dn);
        if (a.x != b.x) {
            REQUIRE(su != 0.0);
            REQUIRE(sd != 0.0);
            REQUIRE((su > 0.0) != (sd > 0.0));
        }
        ++checked;
    }
}

TEST_CASE("orient antisymmetry and cyclic invariance") {
    SplitMix64 rng(7);
    for (int it = 0; it < 500; ++it) {
        Point2 p{rng.next_unit(), rng.next_unit()};
        Point2 q{rng.next_unit(), rng.next_unit()};
        Point2 r{rng.next_unit(), rng.next_unit()};
        Orientation o = orient(p, q, r);
        CHECK(orient(q, r, p) == o);
        CHECK(orient(r, p, q) == o);
        Orientation rev = orient(p, r, q);
        if (o == Orientation::Collinear) {
            CHECK(rev == Orientation::Collinear);
        } else {
            CHECK(rev != o);
            CHECK(rev != Orientation::Collinear);
        }
    }
}

TEST_CASE("incircle detects inside, outside and exact cocircularity") {
    Point2 a{0, 0}, b{1, 0}, c{1, 1}, d{0, 1};
    CHECK(incircle(a, b, c, Point2{0.5, 0.5}) > 0.0);
    CHECK(incircle(a, b, c, Point2{2, 2}) < 0.0);
    CHECK(incircle(a, b, c, d) == 0.0);  // unit-square corners share a circle

    // Swapping two of the first three flips the sign convention.
    CHECK(incircle(b, a, c, Point2{0.5, 0.5}) < 0.0);
}

TEST_CASE("incircle agrees with long-double evaluation away from ties") {
    SplitMix64 rng(99);
    auto lift_det = [](const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
        long double adx = (long double)a.x - d.x, ady = (long double)a.y - d.y;
        long double bdx = (long double)b.x - d.x, bdy = (long double)b.y - d.y;
        long double cdx = (long double)c.x - d.x, cdy = (long double)c.y - d.y;
        long double al = adx * adx + ady * ady;
        long double bl = bdx * bdx + bdy * bdy;
        long double cl = cdx * cdx + cdy * cdy;
        return al * (bdx * cdy - cdx * bdy) + bl * (cdx * ady - adx * cdy) +
               cl * (adx * bdy - bdx * ady);
    };
    for (int it = 0; it < 300; ++it) {
        Point2 a{rng.next_unit(), rng.next_unit()};
        Point2 b{rng.next_unit(), rng.next_unit()};
        Point2 c{rng.next_unit(), rng.next_unit()};
        Point2 d{rng.next_unit(), rng.next_unit()};
        long double ref = lift_det(a, b, c, d);
        if (std::fabs((double)ref) < 1e-12) continue;  // too close to decide in long double
        double got = incircle(a, b, c, d);
        CHECK((got > 0.0) == (ref > 0.0L));
    }
}
