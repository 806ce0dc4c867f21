#include "fiberplan/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fiberplan {

double distance(const Point& a, const Point& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

namespace {

inline int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

// Error-free transforms. two_prod relies on FMA; the build must not enable
// -ffast-math or the exact fallback stops being exact.
inline void two_sum(double a, double b, double& s, double& err) {
    s = a + b;
    const double bv = s - a;
    const double av = s - bv;
    err = (a - av) + (b - bv);
}

inline void two_prod(double a, double b, double& p, double& err) {
    p = a * b;
    err = std::fma(a, b, -p);
}

// Merges two nonoverlapping expansions (increasing magnitude) into one,
// dropping zero components. h must hold elen + flen doubles.
int expansion_sum_zeroelim(int elen, const double* e, int flen, const double* f, double* h) {
    int ei = 0;
    int fi = 0;
    int hi = 0;

    auto take_smaller = [&]() {
        if (ei < elen && (fi >= flen || std::fabs(e[ei]) <= std::fabs(f[fi]))) {
            return e[ei++];
        }
        return f[fi++];
    };

    double q = take_smaller();
    if (ei < elen || fi < flen) {
        // fast two-sum: the later component dominates in magnitude.
        double b = take_smaller();
        double s = b + q;
        double hh = q - (s - b);
        q = s;
        if (hh != 0.0) {
            h[hi++] = hh;
        }
        while (ei < elen || fi < flen) {
            b = take_smaller();
            double err;
            two_sum(q, b, s, err);
            q = s;
            if (err != 0.0) {
                h[hi++] = err;
            }
        }
    }
    if (q != 0.0 || hi == 0) {
        h[hi++] = q;
    }
    return hi;
}

// Exact sign of ax*by - ax*cy + bx*cy - bx*ay + cx*ay - cx*by via expansion
// arithmetic over the six raw products.
int orient2d_exact(const Point& a, const Point& b, const Point& c) {
    double p[2], n[2];
    double ta[4], tb[4], tc[4];

    auto pair_diff = [&](double lx, double ly, double rx, double ry, double* out) {
        double lo, hi;
        two_prod(lx, ly, hi, lo);
        p[0] = lo;
        p[1] = hi;
        two_prod(rx, ry, hi, lo);
        n[0] = -lo;
        n[1] = -hi;
        return expansion_sum_zeroelim(2, p, 2, n, out);
    };

    const int la = pair_diff(a.x, b.y, a.x, c.y, ta);
    const int lb = pair_diff(b.x, c.y, b.x, a.y, tb);
    const int lc = pair_diff(c.x, a.y, c.x, b.y, tc);

    double ab[8], abc[12];
    const int lab = expansion_sum_zeroelim(la, ta, lb, tb, ab);
    const int labc = expansion_sum_zeroelim(lab, ab, lc, tc, abc);
    return sign_of(abc[labc - 1]);
}

constexpr double kEps = std::numeric_limits<double>::epsilon() / 2.0;
constexpr double kCcwErrBound = (3.0 + 16.0 * kEps) * kEps;

}  // namespace

int orient2d(const Point& a, const Point& b, const Point& c) {
    const double detleft = (a.x - c.x) * (b.y - c.y);
    const double detright = (a.y - c.y) * (b.x - c.x);
    const double det = detleft - detright;

    double detsum;
    if (detleft > 0.0) {
        if (detright <= 0.0) {
            return sign_of(det);
        }
        detsum = detleft + detright;
    } else if (detleft < 0.0) {
        if (detright >= 0.0) {
            return sign_of(det);
        }
        detsum = -detleft - detright;
    } else {
        return sign_of(det);
    }

    const double errbound = kCcwErrBound * detsum;
    if (det >= errbound || -det >= errbound) {
        return sign_of(det);
    }
    return orient2d_exact(a, b, c);
}

namespace {

void reject_degenerate(const Segment& s, const Segment& t) {
    if (s.a == s.b || t.a == t.b) {
        throw std::invalid_argument("segments_intersect: zero-length segment");
    }
}

bool on_segment(const Point& p, const Point& u, const Point& v) {
    if (orient2d(u, v, p) != 0) {
        return false;
    }
    return std::min(u.x, v.x) <= p.x && p.x <= std::max(u.x, v.x) &&
           std::min(u.y, v.y) <= p.y && p.y <= std::max(u.y, v.y);
}

bool properly_cross(const Segment& s, const Segment& t) {
    const int d1 = orient2d(t.a, t.b, s.a);
    const int d2 = orient2d(t.a, t.b, s.b);
    const int d3 = orient2d(s.a, s.b, t.a);
    const int d4 = orient2d(s.a, s.b, t.b);
    return d1 * d2 < 0 && d3 * d4 < 0;
}

}  // namespace

bool segments_intersect(const Segment& s, const Segment& t) {
    reject_degenerate(s, t);
    return properly_cross(s, t);
}

bool segments_touch(const Segment& s, const Segment& t) {
    reject_degenerate(s, t);
    if (properly_cross(s, t)) {
        return true;
    }
    // Endpoint lying on the other segment counts unless it coincides with
    // one of that segment's endpoints (a plain attachment point).
    auto strict_incidence = [](const Point& p, const Segment& seg) {
        return !(p == seg.a) && !(p == seg.b) && on_segment(p, seg.a, seg.b);
    };
    if (strict_incidence(s.a, t) || strict_incidence(s.b, t) ||
        strict_incidence(t.a, s) || strict_incidence(t.b, s)) {
        return true;
    }
    // Identical (or reversed) collinear segments overlap over their whole
    // length even though every endpoint is shared.
    if ((s.a == t.a && s.b == t.b) || (s.a == t.b && s.b == t.a)) {
        return true;
    }
    return false;
}

}  // namespace fiberplan
