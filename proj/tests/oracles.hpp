#pragma once

// Brute-force reference implementations. They only use adjacency queries,
// never the solvers they are compared against.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "htgraph/graph.hpp"

namespace oracle {

using htg::Graph;
using htg::Vertex;

inline Graph random_graph(int n, double density, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(density);
    std::vector<Graph::Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

/// Lexicographically smallest upper-triangle bit string over all relabelings.
inline std::string min_form(const Graph& g) {
    const int n = g.order();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string s;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s.push_back(g.adjacent(perm[i], perm[j]) ? '1' : '0');
        if (best.empty() || s < best) best = s;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.size() == b.size() && min_form(a) == min_form(b);
}

/// Vertex orderings of `vs` forming a path, visited via f(order); f returns
/// true to stop.
template <typename F>
bool for_each_path_order(const Graph& g, std::vector<Vertex> vs, F&& f) {
    std::sort(vs.begin(), vs.end());
    do {
        bool ok = true;
        for (std::size_t i = 1; i < vs.size() && ok; ++i) ok = g.adjacent(vs[i - 1], vs[i]);
        if (ok && f(vs)) return true;
    } while (std::next_permutation(vs.begin(), vs.end()));
    return false;
}

inline std::vector<Vertex> all_vertices(const Graph& g) {
    std::vector<Vertex> vs(static_cast<std::size_t>(g.order()));
    std::iota(vs.begin(), vs.end(), 0);
    return vs;
}

inline bool hamiltonian(const Graph& g) {
    if (g.order() < 3) return false;
    return for_each_path_order(g, all_vertices(g), [&](const std::vector<Vertex>& p) {
        return g.adjacent(p.front(), p.back());
    });
}

/// Second vertices of Hamilton paths starting at v.
inline htg::VertexSet start_neighbors(const Graph& g, Vertex v) {
    htg::VertexSet out = 0;
    if (g.order() == 1) return 0;
    for_each_path_order(g, all_vertices(g), [&](const std::vector<Vertex>& p) {
        if (p.front() == v) out |= htg::bits::bit(p[1]);
        if (p.back() == v) out |= htg::bits::bit(p[p.size() - 2]);
        return false;
    });
    return out;
}

inline bool traceable_from(const Graph& g, Vertex v) {
    if (g.order() == 1) return true;
    return oracle::start_neighbors(g, v) != 0;
}

inline bool homogeneously_traceable(const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v)
        if (!traceable_from(g, v)) return false;
    return true;
}

inline bool doubly_homogeneously_traceable(const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v)
        if (htg::bits::count(oracle::start_neighbors(g, v)) < 2) return false;
    return true;
}

/// Longest cycle length by trying every vertex subset in every order; 0 if acyclic.
inline int circumference(const Graph& g) {
    const int n = g.order();
    int best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const int size = std::popcount(mask);
        if (size < 3 || size <= best) continue;
        std::vector<Vertex> vs;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) vs.push_back(v);
        const Vertex first = vs.front();
        const bool found = for_each_path_order(g, vs, [&](const std::vector<Vertex>& p) {
            return p.front() == first && g.adjacent(p.front(), p.back());
        });
        if (found) best = size;
    }
    return best;
}

inline bool on_cycle_of_length(const Graph& g, Vertex v, int len) {
    const int n = g.order();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != len || !(mask >> v & 1)) continue;
        std::vector<Vertex> vs;
        for (int u = 0; u < n; ++u)
            if (mask >> u & 1) vs.push_back(u);
        if (for_each_path_order(g, vs, [&](const std::vector<Vertex>& p) {
                return p.front() == v && g.adjacent(p.front(), p.back());
            }))
            return true;
    }
    return false;
}

inline int independence_number(const Graph& g) {
    const int n = g.order();
    int best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const int size = std::popcount(mask);
        if (size <= best) continue;
        bool independent = true;
        for (int v = 0; v < n && independent; ++v)
            if (mask >> v & 1) independent = (g.neighbors(v) & mask) == 0;
        if (independent) best = size;
    }
    return best;
}

/// Every labeled graph of order n, deduplicated by min_form; connected only.
inline std::vector<Graph> connected_classes(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::vector<std::string> seen;
    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::vector<Graph::Edge> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1) edges.push_back(pairs[i]);
        const Graph g = Graph::from_edges(n, edges);
        if (!g.is_connected()) continue;
        std::string f = min_form(g);
        if (std::find(seen.begin(), seen.end(), f) != seen.end()) continue;
        seen.push_back(std::move(f));
        out.push_back(g);
    }
    return out;
}

/// graph6 written straight from the format description, bit by bit.
inline std::string graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        for (int shift : {12, 6, 0}) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    std::vector<int> bitstream;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bitstream.push_back(g.adjacent(i, j) ? 1 : 0);
    while (bitstream.size() % 6) bitstream.push_back(0);
    for (std::size_t k = 0; k < bitstream.size(); k += 6) {
        int value = 0;
        for (int b = 0; b < 6; ++b) value = value * 2 + bitstream[k + b];
        out.push_back(static_cast<char>(value + 63));
    }
    return out;
}

}  // namespace oracle
