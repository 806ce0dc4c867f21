#pragma once

#include "fiberplan/types.hpp"

namespace fiberplan {

struct Segment {
    Point a;
    Point b;
};

double distance(const Point& a, const Point& b);

/// Sign of the signed area of triangle (a, b, c): +1 counter-clockwise,
/// -1 clockwise, 0 collinear. Exact: a filtered double evaluation falls back
/// to expansion arithmetic when the fast result is not certain.
int orient2d(const Point& a, const Point& b, const Point& c);

/// Proper interior crossing of two segments. Touching configurations,
/// including a drop attached at an endpoint of a route edge, do not count.
/// Throws std::invalid_argument on a zero-length segment.
bool segments_intersect(const Segment& s, const Segment& t);

/// Stricter contact test: true for any shared point (proper crossing,
/// T-touch, collinear overlap) except a plain shared endpoint. Used when
/// the rules flag treating touches as crossings is enabled.
bool segments_touch(const Segment& s, const Segment& t);

}  // namespace fiberplan
