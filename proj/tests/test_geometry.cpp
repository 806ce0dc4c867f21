#include <doctest.h>

#include <cmath>
#include <random>

#include "fiberplan/geometry.hpp"
#include "support/oracles.hpp"

using namespace fiberplan;

TEST_CASE("textbook crossing") {
    CHECK(segments_intersect({{0, 0}, {2, 2}}, {{0, 2}, {2, 0}}));
}

TEST_CASE("shared endpoint is not an intersection") {
    CHECK_FALSE(segments_intersect({{0, 0}, {1, 0}}, {{0, 0}, {0, 1}}));
}

TEST_CASE("T-touch and collinear overlap are not proper crossings") {
    CHECK_FALSE(segments_intersect({{1, 0}, {1, 5}}, {{0, 5}, {2, 5}}));
    CHECK_FALSE(segments_intersect({{0, 0}, {4, 0}}, {{2, 0}, {6, 0}}));
}

TEST_CASE("zero-length segment is rejected") {
    CHECK_THROWS_AS(segments_intersect({{1, 1}, {1, 1}}, {{0, 0}, {2, 2}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(segments_touch({{0, 0}, {2, 2}}, {{1, 1}, {1, 1}}), std::invalid_argument);
}

TEST_CASE("touch semantics for the strict mode") {
    // Plain shared endpoint stays allowed.
    CHECK_FALSE(segments_touch({{0, 0}, {1, 0}}, {{0, 0}, {0, 1}}));
    // Endpoint in the other segment's interior is contact.
    CHECK(segments_touch({{1, 0}, {1, 5}}, {{0, 5}, {2, 5}}));
    // Collinear overlap is contact, identical segments too.
    CHECK(segments_touch({{0, 0}, {4, 0}}, {{2, 0}, {6, 0}}));
    CHECK(segments_touch({{0, 0}, {4, 0}}, {{4, 0}, {0, 0}}));
    // Collinear but merely consecutive: only the endpoint is shared.
    CHECK_FALSE(segments_touch({{0, 0}, {4, 0}}, {{4, 0}, {8, 0}}));
    // Proper crossings count as well.
    CHECK(segments_touch({{0, 0}, {2, 2}}, {{0, 2}, {2, 0}}));
}

TEST_CASE("1000 random segment pairs match the exact orientation oracle") {
    // Lattice coordinates make the oracle exact (int128 arithmetic).
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<int> coord(-40, 40);
    auto pt = [&]() { return Point{static_cast<double>(coord(rng)), static_cast<double>(coord(rng))}; };
    int crossings = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const Point p1 = pt(), p2 = pt(), q1 = pt(), q2 = pt();
        if (p1 == p2 || q1 == q2) {
            continue;
        }
        const bool expected = testsupport::lattice_proper_cross(p1, p2, q1, q2);
        CHECK(segments_intersect({p1, p2}, {q1, q2}) == expected);
        crossings += expected;
    }
    CHECK(crossings > 50);  // the sample actually exercises both outcomes
}

TEST_CASE("orient2d is exactly zero on constructed collinear triples") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coord(-1000, 1000);
    for (int trial = 0; trial < 200; ++trial) {
        const Point a{static_cast<double>(coord(rng)), static_cast<double>(coord(rng))};
        const Point b{static_cast<double>(coord(rng)), static_cast<double>(coord(rng))};
        // Midpoint of integer endpoints is exactly representable.
        const Point mid{(a.x + b.x) / 2.0, (a.y + b.y) / 2.0};
        CHECK(orient2d(a, b, mid) == 0);
    }
}

TEST_CASE("orient2d antisymmetry holds on near-degenerate inputs") {
    // Points one ulp off a long diagonal; naive double evaluation rounds
    // differently under operand swaps, the exact fallback must not.
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> base(0.1, 1.0);
    std::uniform_int_distribution<int> ulps(-2, 2);
    for (int trial = 0; trial < 500; ++trial) {
        const double t = base(rng);
        Point a{t * 1e7, t * 1e7};
        Point b{t * 2.3e7, t * 2.3e7};
        Point c{t * 3.7e7, t * 3.7e7};
        for (int u = ulps(rng); u > 0; --u) c.y = std::nextafter(c.y, 1e30);
        for (int u = ulps(rng); u < 0; ++u) c.y = std::nextafter(c.y, -1e30);
        const int o1 = orient2d(a, b, c);
        CHECK(orient2d(b, a, c) == -o1);
        CHECK(orient2d(a, c, b) == -o1);
        CHECK(orient2d(b, c, a) == o1);
        CHECK(orient2d(c, a, b) == o1);
    }
}

TEST_CASE("distance basics") {
    CHECK(distance({0, 0}, {3, 4}) == doctest::Approx(5.0));
    CHECK(distance({1, 1}, {1, 1}) == 0.0);
}
