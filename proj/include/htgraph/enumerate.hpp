#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "htgraph/canonical.hpp"
#include "htgraph/graph.hpp"

namespace htg {

inline constexpr int kMaxEnumerationOrder = 16;

/// Connected graphs of a given order, optionally restricted to k-regular ones.
struct EnumerationSpec {
    int order = 1;
    std::optional<int> degree;
};

struct EnumerationStats {
    std::uint64_t nodes = 0;    // accepted graphs over all levels
    std::uint64_t classes = 0;  // isomorphism classes at the target order
};

namespace detail {

struct SmallGraph {
    int n = 0;
    std::array<VertexSet, kMaxEnumerationOrder> rows{};
    std::span<const VertexSet> span() const { return {rows.data(), static_cast<std::size_t>(n)}; }
};

// Isomorph-free generation by canonical augmentation: a child H + v is kept
// when v is equivalent to the canonical deletion vertex of the child (the
// non-cut vertex of minimum degree with the largest canonical position), and
// the neighbour sets offered for v are orbit representatives under Aut(H).
class Augmenter {
public:
    explicit Augmenter(EnumerationSpec spec) : spec_(spec) {}

    // Calls leaf() for each class at the target order and node() for each
    // intermediate graph at `stop_level` (if set) instead of descending.
    void run(const SmallGraph& h, const std::function<void(const SmallGraph&)>& leaf,
             int stop_level, const std::function<void(const SmallGraph&)>& node) {
        ++stats_.nodes;
        if (h.n == spec_.order) {
            ++stats_.classes;
            leaf(h);
            return;
        }
        if (h.n == stop_level) {
            node(h);
            return;
        }
        expand(h, [&](const SmallGraph& child) { run(child, leaf, stop_level, node); });
    }

    EnumerationStats stats() const { return stats_; }

    bool feasible(const SmallGraph& h) const {
        if (!spec_.degree) return true;
        const int k = *spec_.degree;
        const int r = spec_.order - h.n;
        int deficit = 0;
        for (int v = 0; v < h.n; ++v) {
            const int d = bits::count(h.rows[v]);
            if (d > k || k - d > r) return false;
            deficit += k - d;
        }
        const int spare = r * k - deficit;  // twice the edges among future vertices
        return spare >= 0 && spare % 2 == 0 && spare / 2 <= r * (r - 1) / 2;
    }

    template <typename F>
    void expand(const SmallGraph& h, F&& accept) const {
        const int m = h.n;
        const std::optional<int> k = spec_.degree;
        VertexSet allowed = bits::prefix(m);
        if (k)
            for (int v = 0; v < m; ++v)
                if (bits::count(h.rows[v]) >= *k) allowed &= ~bits::bit(v);
        const int max_size = k ? *k : m;

        const auto parent = detail::Canonizer(h.span(), {}).result();
        std::vector<std::uint8_t> marked;
        if (!parent.generators.empty()) marked.assign(std::size_t{1} << m, 0);
        std::vector<VertexSet> stack;

        for (VertexSet s = allowed & (~allowed + 1); s; s = (s - allowed) & allowed) {
            const int size = bits::count(s);
            if (size > max_size) continue;
            if (!marked.empty()) {
                if (marked[s]) continue;
                // mark the whole Aut(H)-orbit of s
                marked[s] = 1;
                stack.assign(1, s);
                while (!stack.empty()) {
                    const VertexSet t = stack.back();
                    stack.pop_back();
                    for (const auto& gamma : parent.generators) {
                        VertexSet image = 0;
                        bits::for_each(t, [&](int v) { image |= bits::bit(gamma[v]); });
                        if (!marked[image]) {
                            marked[image] = 1;
                            stack.push_back(image);
                        }
                    }
                }
            }
            SmallGraph child = h;
            child.n = m + 1;
            child.rows[m] = s;
            bits::for_each(s, [&](int v) { child.rows[v] |= bits::bit(m); });
            if (!feasible(child)) continue;
            if (canonical_deletion_matches(child)) accept(child);
        }
    }

private:
    static bool non_cut(const SmallGraph& g, int v) {
        const VertexSet rest = bits::prefix(g.n) & ~bits::bit(v);
        if (!rest) return true;
        VertexSet seen = bits::bit(bits::lowest(rest)), frontier = seen;
        while (frontier) {
            VertexSet next = 0;
            bits::for_each(frontier, [&](int u) { next |= g.rows[u]; });
            next &= rest & ~seen;
            seen |= next;
            frontier = next;
        }
        return seen == rest;
    }

    static bool canonical_deletion_matches(const SmallGraph& g) {
        const int last = g.n - 1;
        const int d = bits::count(g.rows[last]);
        VertexSet ties = 0;
        for (int v = 0; v < last; ++v) {
            const int dv = bits::count(g.rows[v]);
            if (dv > d) continue;
            if (!non_cut(g, v)) continue;
            if (dv < d) return false;
            ties |= bits::bit(v);
        }
        if (!ties) return true;
        ties |= bits::bit(last);
        const auto lab = detail::Canonizer(g.span(), {}).result();
        int chosen = -1;
        bits::for_each(ties, [&](int v) {
            if (chosen < 0 || lab.position[v] > lab.position[chosen]) chosen = v;
        });
        return lab.orbit[chosen] == lab.orbit[last];
    }

    EnumerationSpec spec_;
    EnumerationStats stats_;
};

inline Graph to_graph(const SmallGraph& g) { return Graph::from_rows(g.n, g.span()); }

}  // namespace detail

inline void check_enumeration_spec(const EnumerationSpec& spec) {
    if (spec.order < 1 || spec.order > kMaxEnumerationOrder)
        throw std::out_of_range("enumeration order must be in 1..16");
    if (spec.degree) {
        const int k = *spec.degree;
        if (k < 0 || k >= spec.order || (k * spec.order) % 2 != 0)
            throw std::invalid_argument("no " + std::to_string(k) + "-regular graph of order " +
                                        std::to_string(spec.order));
        if (k == 0 && spec.order > 1) throw std::invalid_argument("0-regular graphs are disconnected");
    }
}

/// Visits one representative of every isomorphism class of connected graphs
/// matching `spec`. With `workers` > 1 the search tree is sharded at a fixed
/// level and subtrees are assigned round-robin; `visit` receives the worker
/// index and must be safe to call concurrently for distinct workers.
inline EnumerationStats for_each_graph(const EnumerationSpec& spec, unsigned workers,
                                       const std::function<void(const Graph&, unsigned)>& visit) {
    check_enumeration_spec(spec);
    if (workers == 0) workers = 1;
    detail::SmallGraph root;
    root.n = 1;
    if (spec.order == 1 || workers == 1) {
        detail::Augmenter aug(spec);
        aug.run(root, [&](const detail::SmallGraph& g) { visit(detail::to_graph(g), 0); }, -1, {});
        return aug.stats();
    }

    const int shard_level = std::min(spec.order - 1, std::max(2, spec.order / 2));
    std::vector<detail::SmallGraph> shards;
    detail::Augmenter top(spec);
    top.run(root, [&](const detail::SmallGraph& g) { visit(detail::to_graph(g), 0); }, shard_level,
            [&](const detail::SmallGraph& g) { shards.push_back(g); });
    EnumerationStats total = top.stats();
    total.nodes -= shards.size();  // counted again as subtree roots

    std::vector<EnumerationStats> partial(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            detail::Augmenter aug(spec);
            for (std::size_t i = w; i < shards.size(); i += workers)
                aug.run(shards[i], [&](const detail::SmallGraph& g) { visit(detail::to_graph(g), w); }, -1, {});
            partial[w] = aug.stats();
        });
    for (auto& t : pool) t.join();
    for (const auto& p : partial) {
        total.nodes += p.nodes;
        total.classes += p.classes;
    }
    return total;
}

}  // namespace htg
