#pragma once

namespace achull {

struct Point2;

// Sign-exact geometric predicates. Each returns a double whose sign is the
// exact sign of the underlying determinant; the magnitude is approximate.
//
// Fast floating-point evaluation with a forward error bound decides the
// common case; near-degenerate inputs fall back to exact evaluation with
// floating-point expansions (error-free transformations), so the sign is
// always correct. Requires strict IEEE-754 double arithmetic in this
// translation unit (no FMA contraction, no fast-math).

// > 0 if a,b,c make a left turn (counter-clockwise), < 0 for a right turn,
// 0 exactly when collinear.
double orient2d(const Point2& a, const Point2& b, const Point2& c);

// > 0 if d lies strictly inside the circle through a,b,c (a,b,c CCW),
// < 0 strictly outside, 0 exactly on the circle. The sign flips if a,b,c
// are given clockwise.
double incircle(const Point2& a, const Point2& b, const Point2& c, const Point2& d);

}  // namespace achull
