#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace htg {

using Vertex = int;
using VertexSet = std::uint64_t;

inline constexpr int kMaxOrder = 64;

namespace bits {

inline constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

inline constexpr VertexSet prefix(int n) {
    return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline constexpr int count(VertexSet s) { return std::popcount(s); }

inline constexpr int lowest(VertexSet s) { return std::countr_zero(s); }

inline constexpr bool has(VertexSet s, int v) { return (s >> v) & 1U; }

template <typename F>
inline void for_each(VertexSet s, F&& f) {
    while (s) {
        f(std::countr_zero(s));
        s &= s - 1;
    }
}

inline std::vector<Vertex> to_vector(VertexSet s) {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(count(s)));
    for_each(s, [&](int v) { out.push_back(v); });
    return out;
}

inline VertexSet from_range(std::span<const Vertex> vs) {
    VertexSet s = 0;
    for (Vertex v : vs) s |= bit(v);
    return s;
}

}  // namespace bits

/// Immutable simple undirected graph on vertices 0..n-1, one 64-bit adjacency
/// row per vertex.
class Graph {
public:
    using Row = VertexSet;
    using Edge = std::pair<Vertex, Vertex>;

    /// The single-vertex graph.
    Graph() : n_(1) {}

    /// Builds a graph from an edge list; duplicates collapse.
    static Graph from_edges(int n, std::span<const Edge> edges) {
        check_order(n);
        Graph g(n);
        for (auto [a, b] : edges) {
            if (a < 0 || a >= n || b < 0 || b >= n)
                throw std::out_of_range("edge endpoint out of range: (" + std::to_string(a) + "," +
                                        std::to_string(b) + ") for order " + std::to_string(n));
            if (a == b) throw std::invalid_argument("loop edge at vertex " + std::to_string(a));
            g.rows_[a] |= bits::bit(b);
            g.rows_[b] |= bits::bit(a);
        }
        return g;
    }

    static Graph from_edges(int n, std::initializer_list<Edge> edges) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    /// Builds a graph from adjacency rows. Rows must be symmetric and loop-free.
    static Graph from_rows(int n, std::span<const Row> rows) {
        check_order(n);
        if (static_cast<int>(rows.size()) != n)
            throw std::invalid_argument("row count does not match order");
        Graph g(n);
        const Row mask = bits::prefix(n);
        for (int i = 0; i < n; ++i) {
            if (rows[i] & ~mask) throw std::out_of_range("adjacency row has bits beyond order");
            if (bits::has(rows[i], i)) throw std::invalid_argument("loop at vertex " + std::to_string(i));
            g.rows_[i] = rows[i];
        }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (bits::has(rows[i], j) != bits::has(rows[j], i))
                    throw std::invalid_argument("adjacency rows are not symmetric");
        return g;
    }

    int order() const { return n_; }

    int size() const {
        int twice = 0;
        for (int i = 0; i < n_; ++i) twice += bits::count(rows_[i]);
        return twice / 2;
    }

    Row neighbors(Vertex v) const { return rows_[check_vertex(v)]; }
    int degree(Vertex v) const { return bits::count(neighbors(v)); }
    bool adjacent(Vertex a, Vertex b) const { return bits::has(neighbors(a), check_vertex(b)); }
    VertexSet all() const { return bits::prefix(n_); }

    std::span<const Row> rows() const { return {rows_.data(), static_cast<std::size_t>(n_)}; }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int i = 0; i < n_; ++i)
            bits::for_each(rows_[i] & ~bits::prefix(i + 1), [&](int j) { out.emplace_back(i, j); });
        return out;
    }

    /// Relabels so that old vertex v becomes perm[v].
    Graph permuted(std::span<const Vertex> perm) const {
        if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation size mismatch");
        Graph g(n_);
        VertexSet seen = 0;
        for (int v = 0; v < n_; ++v) {
            if (perm[v] < 0 || perm[v] >= n_ || bits::has(seen, perm[v]))
                throw std::invalid_argument("not a permutation");
            seen |= bits::bit(perm[v]);
        }
        for (int v = 0; v < n_; ++v)
            bits::for_each(rows_[v], [&](int w) { g.rows_[perm[v]] |= bits::bit(perm[w]); });
        return g;
    }

    /// Induced subgraph on `keep`, relabeled in ascending order of the kept vertices.
    Graph induced(VertexSet keep) const {
        keep &= all();
        std::array<int, kMaxOrder> pos{};
        int m = 0;
        bits::for_each(keep, [&](int v) { pos[v] = m++; });
        if (m == 0) throw std::invalid_argument("induced subgraph on empty vertex set");
        Graph g(m);
        bits::for_each(keep, [&](int v) {
            bits::for_each(rows_[v] & keep, [&](int w) { g.rows_[pos[v]] |= bits::bit(pos[w]); });
        });
        return g;
    }

    bool is_connected() const { return component_of(0, all()) == all(); }

    /// Vertices reachable from `start` inside `within`.
    VertexSet component_of(Vertex start, VertexSet within) const {
        if (!bits::has(within, start)) return 0;
        VertexSet seen = bits::bit(start), frontier = seen;
        while (frontier) {
            VertexSet next = 0;
            bits::for_each(frontier, [&](int v) { next |= rows_[v]; });
            next &= within & ~seen;
            seen |= next;
            frontier = next;
        }
        return seen;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        if (a.n_ != b.n_) return false;
        for (int i = 0; i < a.n_; ++i)
            if (a.rows_[i] != b.rows_[i]) return false;
        return true;
    }

private:
    explicit Graph(int n) : n_(n) {}

    static void check_order(int n) {
        if (n < 1 || n > kMaxOrder)
            throw std::out_of_range("graph order must be in 1..64, got " + std::to_string(n));
    }

    Vertex check_vertex(Vertex v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
        return v;
    }

    int n_ = 0;
    std::array<Row, kMaxOrder> rows_{};
};

// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen() {
    std::vector<Graph::Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
        e.emplace_back(i, i + 5);
    }
    return Graph::from_edges(10, e);
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Graph::Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e);
}

inline Graph path_graph(int n) {
    std::vector<Graph::Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

inline Graph complete_graph(int n) {
    std::vector<Graph::Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

inline Graph star_graph(int leaves) {
    std::vector<Graph::Edge> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, e);
}

struct DegreeProfile {
    std::vector<int> degrees;  // ascending
    std::optional<int> regular;
};

inline DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    for (int v = 0; v < g.order(); ++v) p.degrees.push_back(g.degree(v));
    std::sort(p.degrees.begin(), p.degrees.end());
    if (p.degrees.front() == p.degrees.back()) p.regular = p.degrees.front();
    return p;
}

inline bool is_regular(const Graph& g, int k) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != k) return false;
    return true;
}

inline bool is_clique(const Graph& g, VertexSet vs) {
    if (vs & ~g.all()) throw std::out_of_range("clique candidate has vertices outside the graph");
    bool ok = true;
    bits::for_each(vs, [&](int v) {
        if (((g.neighbors(v) | bits::bit(v)) & vs) != vs) ok = false;
    });
    return ok;
}

inline bool is_clique(const Graph& g, std::span<const Vertex> vs) {
    for (Vertex v : vs)
        if (v < 0 || v >= g.order()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    return is_clique(g, bits::from_range(vs));
}

/// Every 4-clique containing v, as vertex sets in lexicographic order of
/// their sorted members.
inline std::vector<VertexSet> four_cliques_at(const Graph& g, Vertex v) {
    std::vector<VertexSet> out;
    const auto nb = bits::to_vector(g.neighbors(v));
    for (std::size_t a = 0; a < nb.size(); ++a)
        for (std::size_t b = a + 1; b < nb.size(); ++b) {
            if (!g.adjacent(nb[a], nb[b])) continue;
            for (std::size_t c = b + 1; c < nb.size(); ++c)
                if (g.adjacent(nb[a], nb[c]) && g.adjacent(nb[b], nb[c]))
                    out.push_back(bits::bit(v) | bits::bit(nb[a]) | bits::bit(nb[b]) | bits::bit(nb[c]));
        }
    std::sort(out.begin(), out.end(), [](VertexSet x, VertexSet y) {
        return bits::to_vector(x) < bits::to_vector(y);
    });
    return out;
}

/// Articulation-point test restricted to `within`.
inline bool is_cut_vertex(const Graph& g, Vertex v, VertexSet within) {
    VertexSet rest = within & ~bits::bit(v);
    if (!rest) return false;
    return g.component_of(bits::lowest(rest), rest) != rest;
}

}  // namespace htg
