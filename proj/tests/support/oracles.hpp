#pragma once

// Independent reference implementations the tests check the library against.
// Everything here is deliberately naive: different algorithms, different code
// paths, no shared helpers with the implementation under test.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <vector>

#include "fiberplan/network_map.hpp"

namespace testsupport {

/// Bellman-Ford distance from `source_index` to the root. O(V*E), no heap,
/// no tie-breaking subtleties.
inline double bellman_ford_to_root(const fiberplan::NetworkMap& map, std::size_t source_index) {
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(map.nodes().size(), inf);
    dist[source_index] = 0.0;
    for (std::size_t pass = 0; pass + 1 < map.nodes().size(); ++pass) {
        bool changed = false;
        for (const fiberplan::MapEdge& e : map.edges()) {
            const std::size_t a = map.index_of(e.a);
            const std::size_t b = map.index_of(e.b);
            if (dist[a] + e.length_m < dist[b]) {
                dist[b] = dist[a] + e.length_m;
                changed = true;
            }
            if (dist[b] + e.length_m < dist[a]) {
                dist[a] = dist[b] + e.length_m;
                changed = true;
            }
        }
        if (!changed) {
            break;
        }
    }
    return dist[map.root_index()];
}

/// Exact orientation sign for points whose coordinates are integer multiples
/// of 2^-20 below 2^40 in magnitude: scaling by 2^20 gives exact int64 and
/// the cross product fits __int128.
inline int lattice_orient(const fiberplan::Point& a, const fiberplan::Point& b,
                          const fiberplan::Point& c) {
    const double scale = 1048576.0;  // 2^20
    const auto sx = [&](double v) { return static_cast<__int128>(v * scale); };
    const __int128 det = (sx(b.x) - sx(a.x)) * (sx(c.y) - sx(a.y)) -
                         (sx(b.y) - sx(a.y)) * (sx(c.x) - sx(a.x));
    return det > 0 ? 1 : (det < 0 ? -1 : 0);
}

/// Proper-crossing test built only on lattice_orient.
inline bool lattice_proper_cross(const fiberplan::Point& p1, const fiberplan::Point& p2,
                                 const fiberplan::Point& q1, const fiberplan::Point& q2) {
    const int d1 = lattice_orient(q1, q2, p1);
    const int d2 = lattice_orient(q1, q2, p2);
    const int d3 = lattice_orient(p1, p2, q1);
    const int d4 = lattice_orient(p1, p2, q2);
    return d1 * d2 < 0 && d3 * d4 < 0;
}

/// Union-find connected components over route nodes.
struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

/// Exhaustive minimal cable pick for a two-capacity catalog: minimise waste,
/// then count.
inline std::map<int, int> exhaustive_cables(int demand, int small, int large) {
    std::map<int, int> best;
    int best_waste = std::numeric_limits<int>::max();
    int best_count = std::numeric_limits<int>::max();
    if (demand == 0) {
        return best;
    }
    for (int nl = 0; nl * large <= demand + large; ++nl) {
        for (int ns = 0; ns * small <= demand + small; ++ns) {
            const int cap = nl * large + ns * small;
            if (cap < demand) {
                continue;
            }
            const int waste = cap - demand;
            const int count = nl + ns;
            if (waste < best_waste || (waste == best_waste && count < best_count)) {
                best_waste = waste;
                best_count = count;
                best.clear();
                if (nl > 0) {
                    best[large] = nl;
                }
                if (ns > 0) {
                    best[small] = ns;
                }
            }
        }
    }
    return best;
}

}  // namespace testsupport
