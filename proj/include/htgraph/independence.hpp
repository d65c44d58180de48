#pragma once

#include <stdexcept>

#include "htgraph/graph.hpp"

namespace htg {

struct IndependentSet {
    int size = 0;
    VertexSet members = 0;
};

namespace detail {

// Branch on a vertex of maximum remaining degree; vertices of degree <= 1
// are taken greedily. Bound by |current| + |candidates|.
inline void mis_branch(const Graph& g, VertexSet cand, VertexSet cur, IndependentSet& best) {
    while (true) {
        if (!cand) {
            if (bits::count(cur) > best.size) best = {bits::count(cur), cur};
            return;
        }
        if (bits::count(cur) + bits::count(cand) <= best.size) return;
        int pick = -1, pick_deg = -1;
        bool reduced = false;
        for (VertexSet s = cand; s; s &= s - 1) {
            const int v = bits::lowest(s);
            const int d = bits::count(g.neighbors(v) & cand);
            if (d <= 1) {
                cur |= bits::bit(v);
                cand &= ~(bits::bit(v) | g.neighbors(v));
                reduced = true;
                break;
            }
            if (d > pick_deg) {
                pick = v;
                pick_deg = d;
            }
        }
        if (reduced) continue;
        mis_branch(g, cand & ~(bits::bit(pick) | g.neighbors(pick)), cur | bits::bit(pick), best);
        cand &= ~bits::bit(pick);
    }
}

}  // namespace detail

inline constexpr int kMaxIndependenceOrder = 40;

/// Exact maximum independent set by branch and bound.
inline IndependentSet independence_number(const Graph& g) {
    if (g.order() > kMaxIndependenceOrder)
        throw std::out_of_range("independence_number: order exceeds exact budget of 40");
    IndependentSet best;
    detail::mis_branch(g, g.all(), 0, best);
    return best;
}

}  // namespace htg
