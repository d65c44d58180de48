#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "htgraph/graph.hpp"
#include "htgraph/hamilton.hpp"

namespace htg {

/// Relabeling record of one blow-up step.
struct BlowupMap {
    int source_order = 0;
    Vertex removed = 0;
    int degree = 0;
    std::vector<Vertex> neighbors;         // x_1 < ... < x_d, source labels
    std::vector<Vertex> neighbor_targets;  // the same vertices, target labels
    std::vector<Vertex> clique;            // v_1 .. v_d, target labels; v_i ~ x_i
    std::vector<Vertex> relabel;           // source vertex -> target label, -1 for the removed vertex

    int target_order() const { return source_order + degree - 1; }
};

struct BlowupResult {
    Graph graph;
    BlowupMap map;
};

/// Replaces v by a clique on deg(v) vertices joined to N(v) by a matching.
/// Other vertices keep their relative order; the clique takes the highest
/// labels and v_i is matched to the i-th smallest former neighbour.
inline BlowupResult blow_up(const Graph& g, Vertex v) {
    if (v < 0 || v >= g.order()) throw std::out_of_range("blow_up: vertex " + std::to_string(v) + " out of range");
    const int n = g.order();
    const int d = g.degree(v);
    if (d == 0) throw std::invalid_argument("blow_up: vertex " + std::to_string(v) + " is isolated");
    if (n + d - 1 > kMaxOrder) throw std::out_of_range("blow_up: target order exceeds 64");

    BlowupMap map;
    map.source_order = n;
    map.removed = v;
    map.degree = d;
    map.neighbors = bits::to_vector(g.neighbors(v));
    map.relabel.resize(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) map.relabel[u] = u < v ? u : (u == v ? -1 : u - 1);
    for (Vertex x : map.neighbors) map.neighbor_targets.push_back(map.relabel[x]);
    for (int i = 0; i < d; ++i) map.clique.push_back(n - 1 + i);

    std::vector<Graph::Edge> edges;
    for (auto [a, b] : g.edges())
        if (a != v && b != v) edges.emplace_back(map.relabel[a], map.relabel[b]);
    for (int i = 0; i < d; ++i) {
        edges.emplace_back(map.clique[i], map.neighbor_targets[i]);
        for (int j = i + 1; j < d; ++j) edges.emplace_back(map.clique[i], map.clique[j]);
    }
    return {Graph::from_edges(n + d - 1, edges), std::move(map)};
}

/// Instance-level check of one K3 or K4 blow-up step. Conclusions are left unset when
/// their hypotheses fail; measured values are always filled in.
struct LemmaReport {
    int lemma = 0;  // 1: K3 blow-up, 2: K4 blow-up
    Vertex vertex = 0;

    bool source_doubly_ht = false;
    bool on_longest_cycle = false;
    std::optional<bool> in_four_clique;      // K4 step only
    std::optional<VertexSet> chosen_clique;  // K4 step only, source labels

    int source_circumference = 0;  // 0 for a forest
    int target_circumference = 0;
    bool target_doubly_ht = false;

    std::optional<bool> doubly_preserved;
    std::optional<bool> circumference_delta_ok;
    std::optional<Vertex> v_prime;  // K4 step only, target label
    std::optional<bool> v_prime_on_longest_cycle;
    std::optional<bool> v_prime_in_four_clique;

    Graph target;
    BlowupMap map;

    int circumference_delta() const { return target_circumference - source_circumference; }
    int expected_delta() const { return lemma == 1 ? 2 : 3; }

    bool hypotheses_hold() const {
        return source_doubly_ht && on_longest_cycle && (lemma == 1 || in_four_clique.value_or(false));
    }

    // Every asserted conclusion holds; with all hypotheses met, every conclusion is asserted.
    bool conclusions_hold() const {
        auto ok = [](const std::optional<bool>& f) { return !f.has_value() || *f; };
        if (!ok(doubly_preserved) || !ok(circumference_delta_ok) || !ok(v_prime_on_longest_cycle) ||
            !ok(v_prime_in_four_clique))
            return false;
        if (!hypotheses_hold()) return true;
        if (!doubly_preserved || !circumference_delta_ok) return false;
        return lemma == 1 || (v_prime && v_prime_on_longest_cycle && v_prime_in_four_clique);
    }
};

namespace detail {

inline int circumference_or_zero(const Graph& g) {
    const auto c = circumference(g);
    return c ? c->length() : 0;
}

inline LemmaReport measure_blowup(const Graph& g, Vertex v, int lemma) {
    LemmaReport r;
    r.lemma = lemma;
    r.vertex = v;
    r.source_doubly_ht = static_cast<bool>(is_doubly_homogeneously_traceable(g));
    r.source_circumference = circumference_or_zero(g);
    r.on_longest_cycle = r.source_circumference > 0 && longest_cycle_through(g, v, r.source_circumference).has_value();

    auto [target, map] = blow_up(g, v);
    r.target = target;
    r.map = std::move(map);
    r.target_circumference = circumference_or_zero(r.target);
    r.target_doubly_ht = static_cast<bool>(is_doubly_homogeneously_traceable(r.target));
    if (r.source_doubly_ht) r.doubly_preserved = r.target_doubly_ht;
    return r;
}

}  // namespace detail

inline LemmaReport verify_lemma1(const Graph& g, Vertex v) {
    if (v < 0 || v >= g.order()) throw std::out_of_range("verify_lemma1: vertex out of range");
    if (g.degree(v) != 3) throw std::invalid_argument("verify_lemma1: vertex must have degree 3");
    LemmaReport r = detail::measure_blowup(g, v, 1);
    if (r.on_longest_cycle) r.circumference_delta_ok = r.circumference_delta() == 2;
    return r;
}

/// With several 4-cliques at v, the lexicographically smallest is used; v'
/// is the clique vertex matched to the one neighbour outside it.
inline LemmaReport verify_lemma2(const Graph& g, Vertex v) {
    if (v < 0 || v >= g.order()) throw std::out_of_range("verify_lemma2: vertex out of range");
    if (g.degree(v) != 4) throw std::invalid_argument("verify_lemma2: vertex must have degree 4");
    LemmaReport r = detail::measure_blowup(g, v, 2);
    const auto cliques = four_cliques_at(g, v);
    r.in_four_clique = !cliques.empty();
    if (!cliques.empty()) r.chosen_clique = cliques.front();
    if (r.on_longest_cycle && *r.in_four_clique) {
        r.circumference_delta_ok = r.circumference_delta() == 3;
        const VertexSet outside = g.neighbors(v) & ~*r.chosen_clique;
        const Vertex x4 = bits::lowest(outside);
        for (std::size_t i = 0; i < r.map.neighbors.size(); ++i)
            if (r.map.neighbors[i] == x4) r.v_prime = r.map.clique[i];
        r.v_prime_on_longest_cycle =
            r.target_circumference > 0 && longest_cycle_through(r.target, *r.v_prime, r.target_circumference).has_value();
        r.v_prime_in_four_clique = !four_cliques_at(r.target, *r.v_prime).empty();
    }
    return r;
}

}  // namespace htg
