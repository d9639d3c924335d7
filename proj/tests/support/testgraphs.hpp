#pragma once

#include <vector>

#include "stardecomp/graph.hpp"

// Fixture graphs used across the test binaries. Everything returns a fresh
// Graph; vertex numbering is spelled out where a test depends on it.
namespace testsupport {

using stardecomp::Edge;
using stardecomp::Graph;

inline Graph path_n(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Graph::from_edges(n, e);
}

inline Graph cycle_n(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return Graph::from_edges(n, e);
}

inline Graph complete(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j});
    return Graph::from_edges(n, e);
}

inline Graph complete_bipartite(int a, int b) {
    std::vector<Edge> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.push_back({i, a + j});
    return Graph::from_edges(a + b, e);
}

// d-dimensional hypercube; vertices are bitstrings, edges flip one bit.
inline Graph hypercube(int d) {
    int n = 1 << d;
    std::vector<Edge> e;
    for (int v = 0; v < n; ++v)
        for (int bit = 0; bit < d; ++bit)
            if (v < (v ^ (1 << bit))) e.push_back({v, v ^ (1 << bit)});
    return Graph::from_edges(n, e);
}

inline Graph q3() { return hypercube(3); }

// Outer cycle 0..k-1, inner copy k..2k-1, rungs i -- i+k.
inline Graph prism(int k) {
    std::vector<Edge> e;
    for (int i = 0; i < k; ++i) {
        e.push_back({i, (i + 1) % k});
        e.push_back({k + i, k + (i + 1) % k});
        e.push_back({i, k + i});
    }
    return Graph::from_edges(2 * k, e);
}

// Outer n-cycle, inner star polygon with step k, spokes between them.
inline Graph generalized_petersen(int n, int k) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) {
        e.push_back({i, (i + 1) % n});
        e.push_back({n + i, n + (i + k) % n});
        e.push_back({i, n + i});
    }
    return Graph::from_edges(2 * n, e);
}

inline Graph petersen() { return generalized_petersen(5, 2); }

// Bipartite circulant: parts {0..half-1} and {half..2half-1},
// i adjacent to half + ((i + off) mod half) for each offset.
inline Graph bip_circulant(int half, const std::vector<int>& offsets) {
    std::vector<Edge> e;
    for (int i = 0; i < half; ++i)
        for (int off : offsets) e.push_back({i, half + (i + off) % half});
    return Graph::from_edges(2 * half, e);
}

// Cubic graph on 8 vertices engineered so that S = {0,1,2} is an independent
// cycling set of size 3n/8 avoiding triangles, with alpha(G) = 3: vertices
// 3 and 4 are joined to all of S, {5,6,7} form a triangle, and vertex 5+i
// hangs off center i.
inline Graph anchor8() {
    std::vector<Edge> e = {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 6},
                           {2, 3}, {2, 4}, {2, 7}, {5, 6}, {6, 7}, {5, 7}};
    return Graph::from_edges(8, e);
}

// 4-regular graph on 10 vertices where S = {0,1,2,3} is an independent
// cycling set (a C4 on {4,5,6,7} plus isolated 8, 9 after deletion) with no
// triangle through S.
inline Graph four_regular_anchor10() {
    std::vector<Edge> e = {{8, 0}, {8, 1}, {8, 2}, {8, 3}, {9, 0}, {9, 1}, {9, 2},
                           {9, 3}, {4, 5}, {5, 6}, {6, 7}, {4, 7}, {0, 4}, {0, 6},
                           {2, 4}, {2, 6}, {1, 5}, {1, 7}, {3, 5}, {3, 7}};
    return Graph::from_edges(10, e);
}

// Five-vertex cubic gadget with one free half-edge at its first vertex:
// s -- {a, b}, {a, b, d, e} forming K4 minus the edge ab. Degrees are 3
// everywhere except s, which has degree 2 until the caller attaches it.
inline void add_gadget(std::vector<Edge>& e, int base) {
    int s = base, a = base + 1, b = base + 2, d = base + 3, ee = base + 4;
    e.push_back({s, a});
    e.push_back({s, b});
    e.push_back({a, d});
    e.push_back({a, ee});
    e.push_back({b, d});
    e.push_back({b, ee});
    e.push_back({d, ee});
}

// Smallest cubic graph without a perfect matching: a hub joined to three
// odd gadgets, so removing the hub leaves three odd components.
inline Graph no_pm_16() {
    std::vector<Edge> e;
    for (int i = 0; i < 3; ++i) {
        add_gadget(e, 1 + 5 * i);
        e.push_back({0, 1 + 5 * i});
    }
    return Graph::from_edges(16, e);
}

// Two gadgets joined by a bridge: cubic, vertex connectivity 1.
inline Graph bridge_cubic_10() {
    std::vector<Edge> e;
    add_gadget(e, 0);
    add_gadget(e, 5);
    e.push_back({0, 5});
    return Graph::from_edges(10, e);
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> e = a.edges();
    for (auto [u, v] : b.edges()) e.push_back({a.n + u, a.n + v});
    return Graph::from_edges(a.n + b.n, e);
}

}  // namespace testsupport
