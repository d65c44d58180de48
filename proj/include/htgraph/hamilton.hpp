#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "htgraph/graph.hpp"

namespace htg {

struct HamPath {
    std::vector<Vertex> vertices;
    friend bool operator==(const HamPath&, const HamPath&) = default;
};

struct CycleWitness {
    std::vector<Vertex> vertices;  // cyclic order, first vertex not repeated
    int length() const { return static_cast<int>(vertices.size()); }
    friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

// Validators are deliberately written without reference to the search code.

inline bool is_valid_path(const Graph& g, const std::vector<Vertex>& p) {
    VertexSet seen = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0 || p[i] >= g.order() || bits::has(seen, p[i])) return false;
        seen |= bits::bit(p[i]);
        if (i > 0 && !g.adjacent(p[i - 1], p[i])) return false;
    }
    return !p.empty();
}

inline bool is_valid_hamilton_path(const Graph& g, const HamPath& p) {
    return static_cast<int>(p.vertices.size()) == g.order() && is_valid_path(g, p.vertices);
}

inline bool is_valid_cycle(const Graph& g, const CycleWitness& c) {
    return c.length() >= 3 && is_valid_path(g, c.vertices) && g.adjacent(c.vertices.back(), c.vertices.front());
}

namespace detail {

// Depth-first Hamilton path/cycle extension over `within`. Pruning:
//  * every unvisited vertex needs an unvisited-or-end neighbour (two, plus the
//    start, when closing a cycle);
//  * at most one unvisited vertex may have a single such neighbour on a path
//    (it must be the far endpoint);
//  * the unvisited region together with the end must stay connected.
class HamiltonSearch {
public:
    HamiltonSearch(const Graph& g, VertexSet within, bool cycle) : within_(within), cycle_(cycle) {
        for (int v = 0; v < g.order(); ++v) adj_[v] = g.neighbors(v) & within;
    }

    // `path` must be a valid path inside `within`; on success it is extended in place.
    bool extend(std::vector<Vertex>& path) {
        VertexSet visited = 0;
        for (Vertex v : path) visited |= bits::bit(v);
        path_ = path;
        path_.reserve(static_cast<std::size_t>(bits::count(within_)));
        if (!dfs(visited)) return false;
        path = path_;
        return true;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    bool feasible(VertexSet unvisited, Vertex end) const {
        const Vertex start = path_.front();
        const VertexSet region = unvisited | bits::bit(end);
        if (cycle_) {
            const VertexSet closing = region | bits::bit(start);
            if (!(adj_[start] & unvisited)) return false;
            for (VertexSet s = unvisited; s; s &= s - 1) {
                const int u = bits::lowest(s);
                if (bits::count(adj_[u] & closing) < 2) return false;
            }
        } else {
            int singles = 0;
            for (VertexSet s = unvisited; s; s &= s - 1) {
                const int u = bits::lowest(s);
                const int avail = bits::count(adj_[u] & region);
                if (avail == 0) return false;
                if (avail == 1 && ++singles > 1) return false;
            }
        }
        // connectivity of the region reachable from the end
        VertexSet seen = bits::bit(end), frontier = seen;
        while (frontier) {
            VertexSet next = 0;
            for (VertexSet s = frontier; s; s &= s - 1) next |= adj_[bits::lowest(s)];
            next &= region & ~seen;
            seen |= next;
            frontier = next;
        }
        return seen == region;
    }

    bool dfs(VertexSet visited) {
        ++nodes_;
        const Vertex end = path_.back();
        const VertexSet unvisited = within_ & ~visited;
        if (!unvisited) return !cycle_ || (path_.size() >= 3 && bits::has(adj_[end], path_.front()));
        if (!feasible(unvisited, end)) return false;
        for (VertexSet s = adj_[end] & unvisited; s; s &= s - 1) {
            const int u = bits::lowest(s);
            path_.push_back(u);
            if (dfs(visited | bits::bit(u))) return true;
            path_.pop_back();
        }
        return false;
    }

    std::array<VertexSet, kMaxOrder> adj_{};
    VertexSet within_;
    bool cycle_;
    std::vector<Vertex> path_;
    std::uint64_t nodes_ = 0;
};

inline void check_vertex(const Graph& g, Vertex v) {
    if (v < 0 || v >= g.order()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

inline std::optional<CycleWitness> hamilton_cycle_within(const Graph& g, VertexSet within) {
    if (bits::count(within) < 3) return std::nullopt;
    // start from the lowest-labelled vertex of minimum degree
    int start = -1, best_deg = kMaxOrder + 1;
    for (VertexSet s = within; s; s &= s - 1) {
        const int v = bits::lowest(s);
        const int d = bits::count(g.neighbors(v) & within);
        if (d < 2) return std::nullopt;
        if (d < best_deg) {
            best_deg = d;
            start = v;
        }
    }
    std::vector<Vertex> path{start};
    HamiltonSearch search(g, within, true);
    if (!search.extend(path)) return std::nullopt;
    return CycleWitness{path};
}

}  // namespace detail

/// A Hamilton path with endpoint v, or nullopt when none exists.
inline std::optional<HamPath> hamilton_path_from(const Graph& g, Vertex v) {
    detail::check_vertex(g, v);
    std::vector<Vertex> path{v};
    detail::HamiltonSearch search(g, g.all(), false);
    if (!search.extend(path)) return std::nullopt;
    return HamPath{path};
}

/// A Hamilton path whose first two vertices are v, u.
inline std::optional<HamPath> hamilton_path_from_edge(const Graph& g, Vertex v, Vertex u) {
    detail::check_vertex(g, v);
    detail::check_vertex(g, u);
    if (!g.adjacent(v, u)) return std::nullopt;
    std::vector<Vertex> path{v, u};
    detail::HamiltonSearch search(g, g.all(), false);
    if (!search.extend(path)) return std::nullopt;
    return HamPath{path};
}

/// Neighbours u of v such that some Hamilton path starts v, u.
inline VertexSet start_neighbors(const Graph& g, Vertex v) {
    detail::check_vertex(g, v);
    VertexSet out = 0;
    bits::for_each(g.neighbors(v), [&](int u) {
        if (hamilton_path_from_edge(g, v, u)) out |= bits::bit(u);
    });
    return out;
}

inline std::optional<CycleWitness> is_hamiltonian(const Graph& g) {
    if (g.order() < 3) throw std::invalid_argument("is_hamiltonian: order must be at least 3");
    return detail::hamilton_cycle_within(g, g.all());
}

struct TraceabilityCertificate {
    bool doubly = false;
    // paths[v] holds one Hamilton v-path, or two with distinct second vertices when doubly
    std::vector<std::vector<HamPath>> paths;
};

struct TraceabilityVerdict {
    std::optional<TraceabilityCertificate> certificate;
    std::optional<Vertex> failing_vertex;
    explicit operator bool() const { return certificate.has_value(); }
};

namespace detail {

class WitnessPool {
public:
    WitnessPool(int n, std::size_t per_vertex) : paths_(static_cast<std::size_t>(n)), per_vertex_(per_vertex) {}

    // Offers p to its first endpoint and, reversed, to its last.
    void offer(const std::vector<Vertex>& p) {
        add(p);
        if (p.size() > 1) add(std::vector<Vertex>(p.rbegin(), p.rend()));
    }

    bool full(Vertex v) const { return paths_[v].size() >= per_vertex_; }
    bool uses_second(Vertex v, Vertex u) const {
        for (const auto& p : paths_[v])
            if (p.vertices.size() > 1 && p.vertices[1] == u) return true;
        return false;
    }
    std::vector<std::vector<HamPath>> release() { return std::move(paths_); }

private:
    void add(std::vector<Vertex> p) {
        auto& slot = paths_[p.front()];
        if (slot.size() >= per_vertex_) return;
        if (p.size() > 1 && uses_second(p.front(), p[1])) return;
        slot.push_back(HamPath{std::move(p)});
    }

    std::vector<std::vector<HamPath>> paths_;
    std::size_t per_vertex_;
};

}  // namespace detail

/// One Hamilton v-path per vertex, or the smallest vertex with none.
inline TraceabilityVerdict is_homogeneously_traceable(const Graph& g) {
    detail::WitnessPool pool(g.order(), 1);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (pool.full(v)) continue;
        auto p = hamilton_path_from(g, v);
        if (!p) return {std::nullopt, v};
        pool.offer(p->vertices);
    }
    return {TraceabilityCertificate{false, pool.release()}, std::nullopt};
}

/// Two Hamilton v-paths with distinct first edges per vertex, or the
/// smallest vertex lacking them.
inline TraceabilityVerdict is_doubly_homogeneously_traceable(const Graph& g) {
    if (g.order() == 1) return {std::nullopt, 0};
    detail::WitnessPool pool(g.order(), 2);
    for (Vertex v = 0; v < g.order(); ++v) {
        for (VertexSet s = g.neighbors(v); s && !pool.full(v); s &= s - 1) {
            const int u = bits::lowest(s);
            if (pool.uses_second(v, u)) continue;
            if (auto p = hamilton_path_from_edge(g, v, u)) pool.offer(p->vertices);
        }
        if (!pool.full(v)) return {std::nullopt, v};
    }
    return {TraceabilityCertificate{true, pool.release()}, std::nullopt};
}

namespace detail {

inline VertexSet two_core(const Graph& g) {
    VertexSet core = g.all();
    bool changed = true;
    while (changed) {
        changed = false;
        for (VertexSet s = core; s; s &= s - 1) {
            const int v = bits::lowest(s);
            if (bits::count(g.neighbors(v) & core) < 2) {
                core &= ~bits::bit(v);
                changed = true;
            }
        }
    }
    return core;
}

inline double binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    double r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Visits every k-subset of `pool` in lexicographic order until f returns true.
template <typename F>
bool for_each_subset(VertexSet pool, int k, F&& f) {
    const auto verts = bits::to_vector(pool);
    const int m = static_cast<int>(verts.size());
    if (k > m) return false;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        VertexSet s = 0;
        for (int i : idx) s |= bits::bit(verts[i]);
        if (f(s)) return true;
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Removing `drop` from `within` leaves a graph that could still be hamiltonian:
// connected with minimum degree two.
inline bool may_be_hamiltonian(const Graph& g, VertexSet rest) {
    if (bits::count(rest) < 3) return false;
    for (VertexSet s = rest; s; s &= s - 1)
        if (bits::count(g.neighbors(bits::lowest(s)) & rest) < 2) return false;
    return g.component_of(bits::lowest(rest), rest) == rest;
}

// Branch and bound for long cycles through `anchor`. With `min_anchor` the
// cycle may only use vertices above the anchor. Stops once a cycle of length
// `stop_at` is found; only cycles longer than `best` are recorded.
class CycleSearch {
public:
    CycleSearch(const Graph& g, VertexSet within) {
        for (int v = 0; v < g.order(); ++v) adj_[v] = g.neighbors(v) & within;
        within_ = within;
    }

    void run(Vertex anchor, bool min_anchor, int& best, std::vector<Vertex>& best_cycle, int stop_at) {
        anchor_ = anchor;
        allowed_ = within_;
        if (min_anchor) allowed_ &= ~bits::prefix(anchor);
        best_ = &best;
        best_cycle_ = &best_cycle;
        stop_at_ = stop_at;
        path_.assign(1, anchor);
        done_ = false;
        dfs(bits::bit(anchor));
    }

    bool done() const { return done_; }

private:
    int bound(VertexSet visited, Vertex end) const {
        VertexSet free = allowed_ & ~visited;
        const VertexSet ends = bits::bit(end) | bits::bit(anchor_);
        // peel vertices that cannot be interior to the closing path
        bool changed = true;
        while (changed) {
            changed = false;
            for (VertexSet s = free; s; s &= s - 1) {
                const int u = bits::lowest(s);
                if (bits::count(adj_[u] & (free | ends)) < 2) {
                    free &= ~bits::bit(u);
                    changed = true;
                }
            }
        }
        // vertices reachable from the end through free vertices
        const VertexSet region = free | bits::bit(end);
        VertexSet seen = bits::bit(end), frontier = seen;
        while (frontier) {
            VertexSet next = 0;
            for (VertexSet s = frontier; s; s &= s - 1) next |= adj_[bits::lowest(s)];
            next &= region & ~seen;
            seen |= next;
            frontier = next;
        }
        bool closes = false;
        for (VertexSet s = seen; s; s &= s - 1)
            if (bits::has(adj_[bits::lowest(s)], anchor_)) {
                closes = true;
                break;
            }
        if (!closes) return -1;
        return bits::count(seen & ~bits::bit(end));
    }

    void dfs(VertexSet visited) {
        if (done_) return;
        const Vertex end = path_.back();
        const int len = static_cast<int>(path_.size());
        if (len >= 3 && bits::has(adj_[end], anchor_) && len > *best_) {
            *best_ = len;
            *best_cycle_ = path_;
            if (len >= stop_at_) {
                done_ = true;
                return;
            }
        }
        const int extra = bound(visited, end);
        if (extra < 0 || len + extra <= *best_) return;
        for (VertexSet s = adj_[end] & allowed_ & ~visited; s; s &= s - 1) {
            const int u = bits::lowest(s);
            path_.push_back(u);
            dfs(visited | bits::bit(u));
            path_.pop_back();
            if (done_) return;
        }
    }

    std::array<VertexSet, kMaxOrder> adj_{};
    VertexSet within_ = 0, allowed_ = 0;
    Vertex anchor_ = 0;
    int* best_ = nullptr;
    std::vector<Vertex>* best_cycle_ = nullptr;
    int stop_at_ = 0;
    bool done_ = false;
    std::vector<Vertex> path_;
};

// Vertex subsets examined per deficiency level before switching to branch and bound.
inline constexpr double kSubsetBudget = 60000;

}  // namespace detail

/// A longest cycle, or nullopt for a forest.
///
/// Near-hamiltonian graphs are handled by deleting every t-subset of the
/// 2-core for t = 0, 1, ... and testing the rest for a Hamilton cycle; once
/// the number of subsets exceeds the budget, a branch and bound over anchored
/// cycles finishes the job with the established upper bound.
inline std::optional<CycleWitness> circumference(const Graph& g) {
    const VertexSet core = detail::two_core(g);
    const int m = bits::count(core);
    if (m < 3) return std::nullopt;
    int t = 0;
    for (; t <= m - 3 && detail::binomial(m, t) <= detail::kSubsetBudget; ++t) {
        std::optional<CycleWitness> found;
        detail::for_each_subset(core, t, [&](VertexSet drop) {
            const VertexSet rest = core & ~drop;
            if (!detail::may_be_hamiltonian(g, rest)) return false;
            found = detail::hamilton_cycle_within(g, rest);
            return found.has_value();
        });
        if (found) return found;
    }
    if (t > m - 3) return std::nullopt;  // unreachable for a non-empty 2-core
    const int upper = m - t;
    int best = 0;
    std::vector<Vertex> cycle;
    detail::CycleSearch search(g, core);
    for (VertexSet s = core; s; s &= s - 1) {
        const int anchor = bits::lowest(s);
        if (bits::count(core & ~bits::prefix(anchor)) <= best) break;
        search.run(anchor, true, best, cycle, upper);
        if (search.done()) break;
    }
    if (best < 3) return std::nullopt;
    return CycleWitness{cycle};
}

/// Every vertex lying on some longest cycle.
inline VertexSet longest_cycle_vertices(const Graph& g, int circ) {
    const VertexSet core = detail::two_core(g);
    const int m = bits::count(core);
    if (circ < 3 || circ > m) throw std::invalid_argument("longest_cycle_vertices: bad circumference");
    VertexSet covered = 0;
    if (detail::binomial(m, m - circ) <= detail::kSubsetBudget) {
        detail::for_each_subset(core, m - circ, [&](VertexSet drop) {
            const VertexSet rest = core & ~drop;
            if ((rest & ~covered) == 0 || !detail::may_be_hamiltonian(g, rest)) return false;
            if (auto c = detail::hamilton_cycle_within(g, rest)) covered |= rest;
            return covered == core;
        });
        return covered;
    }
    detail::CycleSearch search(g, core);
    for (VertexSet s = core; s; s &= s - 1) {
        const int v = bits::lowest(s);
        if (bits::has(covered, v)) continue;
        int best = circ - 1;
        std::vector<Vertex> cycle;
        search.run(v, false, best, cycle, circ);
        if (best == circ)
            for (Vertex u : cycle) covered |= bits::bit(u);
    }
    return covered;
}

/// A cycle of length `len` through v, if one exists. `len` must be the
/// circumference of g: the search treats it as an upper bound.
inline std::optional<CycleWitness> longest_cycle_through(const Graph& g, Vertex v, int len) {
    detail::check_vertex(g, v);
    const VertexSet core = detail::two_core(g);
    const int m = bits::count(core);
    if (len < 3 || len > m || !bits::has(core, v)) return std::nullopt;
    if (detail::binomial(m - 1, m - len) <= detail::kSubsetBudget) {
        std::optional<CycleWitness> found;
        detail::for_each_subset(core & ~bits::bit(v), m - len, [&](VertexSet drop) {
            const VertexSet rest = core & ~drop;
            if (!detail::may_be_hamiltonian(g, rest)) return false;
            found = detail::hamilton_cycle_within(g, rest);
            return found.has_value();
        });
        return found;
    }
    int best = len - 1;
    std::vector<Vertex> cycle;
    detail::CycleSearch search(g, core);
    search.run(v, false, best, cycle, len);
    if (best != len) return std::nullopt;
    return CycleWitness{cycle};
}

inline VertexSet longest_cycle_vertices(const Graph& g) {
    const auto c = circumference(g);
    if (!c) throw std::invalid_argument("longest_cycle_vertices: graph is acyclic");
    return longest_cycle_vertices(g, c->length());
}

}  // namespace htg
