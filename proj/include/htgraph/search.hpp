#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "htgraph/canonical.hpp"
#include "htgraph/enumerate.hpp"
#include "htgraph/graph.hpp"
#include "htgraph/graph6.hpp"
#include "htgraph/hamilton.hpp"
#include "htgraph/independence.hpp"

namespace htg {

enum class Predicate { any, ht, ht_nonham, doubly_ht, nonham };

inline std::string_view to_string(Predicate p) {
    switch (p) {
        case Predicate::any: return "any";
        case Predicate::ht: return "ht";
        case Predicate::ht_nonham: return "ht-nonham";
        case Predicate::doubly_ht: return "doubly-ht";
        case Predicate::nonham: return "nonham";
    }
    return "any";
}

inline Predicate parse_predicate(std::string_view s) {
    for (auto p : {Predicate::any, Predicate::ht, Predicate::ht_nonham, Predicate::doubly_ht, Predicate::nonham})
        if (to_string(p) == s) return p;
    throw std::invalid_argument("unknown predicate '" + std::string(s) + "'");
}

/// What one predicate evaluation established about a graph.
struct Evaluation {
    bool matches = false;
    std::optional<bool> hamiltonian;
    std::optional<bool> ht;
};

// Cheap facts first: hamiltonicity usually succeeds quickly and settles HT.
inline Evaluation evaluate(Predicate p, const Graph& g) {
    Evaluation e;
    auto hamiltonian = [&] {
        if (!e.hamiltonian) e.hamiltonian = g.order() >= 3 && is_hamiltonian(g).has_value();
        return *e.hamiltonian;
    };
    auto ht = [&] {
        if (!e.ht) e.ht = (g.order() >= 3 && hamiltonian()) || static_cast<bool>(is_homogeneously_traceable(g));
        return *e.ht;
    };
    switch (p) {
        case Predicate::any: e.matches = true; break;
        case Predicate::ht: e.matches = ht(); break;
        case Predicate::ht_nonham: e.matches = !hamiltonian() && ht(); break;
        case Predicate::doubly_ht: e.matches = static_cast<bool>(is_doubly_homogeneously_traceable(g)); break;
        case Predicate::nonham: e.matches = !hamiltonian(); break;
    }
    return e;
}

inline bool satisfies(Predicate p, const Graph& g) { return evaluate(p, g).matches; }

struct SearchReport {
    std::string kind;
    std::vector<std::pair<std::string, long long>> bounds;
    std::string predicate;
    std::uint64_t examined = 0;  // graphs generated, all levels (enumeration) or moves (annealing)
    std::uint64_t classes = 0;   // isomorphism classes at the target order
    std::vector<std::string> witnesses;  // graph6, sorted by canonical form
    bool negative = true;
    std::optional<std::uint64_t> seed;
    double wall_seconds = 0;

    // Extremal probes.
    std::optional<int> value;
    std::optional<int> expected;
    std::optional<bool> agrees;

    // Independence-number audit over every graph found to be traceable from every vertex.
    std::uint64_t ht_graphs = 0;
    std::uint64_t alpha_violations = 0;
};

namespace detail {

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct WorkerTally {
    std::vector<std::pair<CanonicalForm, Graph>> witnesses;
    std::uint64_t ht_graphs = 0;
    std::uint64_t alpha_violations = 0;
};

inline void audit_alpha(const Graph& g, const Evaluation& e, WorkerTally& t) {
    if (!e.ht.value_or(false) && !e.hamiltonian.value_or(false)) return;
    ++t.ht_graphs;
    if (independence_number(g).size > g.order() / 2) ++t.alpha_violations;
}

inline SearchReport run_enumeration(std::string kind, const EnumerationSpec& spec, Predicate pred, unsigned workers) {
    Stopwatch clock;
    if (workers == 0) workers = 1;
    std::vector<WorkerTally> tallies(workers);
    const auto stats = for_each_graph(spec, workers, [&](const Graph& g, unsigned w) {
        const Evaluation e = evaluate(pred, g);
        audit_alpha(g, e, tallies[w]);
        if (e.matches) tallies[w].witnesses.emplace_back(canonical_form(g), g);
    });
    SearchReport r;
    r.kind = std::move(kind);
    r.bounds.emplace_back("n", spec.order);
    if (spec.degree) r.bounds.emplace_back("k", *spec.degree);
    r.predicate = std::string(to_string(pred));
    r.examined = stats.nodes;
    r.classes = stats.classes;
    std::vector<std::pair<CanonicalForm, Graph>> all;
    for (auto& t : tallies) {
        r.ht_graphs += t.ht_graphs;
        r.alpha_violations += t.alpha_violations;
        for (auto& w : t.witnesses) all.push_back(std::move(w));
    }
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [form, g] : all) r.witnesses.push_back(encode_graph6(g));
    r.negative = r.witnesses.empty();
    r.wall_seconds = clock.seconds();
    return r;
}

}  // namespace detail

inline constexpr int kMaxConnectedOrder = 9;

/// Every connected graph of order n satisfying the predicate, one per class.
inline SearchReport enumerate_connected(int n, Predicate pred, unsigned workers = 1, bool unsafe_bounds = false) {
    if (n < 1 || (n > kMaxConnectedOrder && !unsafe_bounds))
        throw std::out_of_range("enumerate_connected: order must be in 1..9");
    return detail::run_enumeration("connected", {n, std::nullopt}, pred, workers);
}

inline bool regular_within_budget(int k, int n) { return (k == 3 && n <= 14) || (k == 4 && n <= 13); }

/// Every connected k-regular graph of order n satisfying the predicate, one per class.
inline SearchReport enumerate_regular(int k, int n, Predicate pred, unsigned workers = 1, bool unsafe_bounds = false) {
    if (k < 1 || n < 1 || (k * n) % 2 != 0 || k >= n)
        throw std::invalid_argument("enumerate_regular: no " + std::to_string(k) + "-regular graph of order " +
                                    std::to_string(n));
    if (!unsafe_bounds && !regular_within_budget(k, n))
        throw std::out_of_range("enumerate_regular: (k, n) outside the desk-scale budget (k=3, n<=14 or k=4, n<=13)");
    return detail::run_enumeration("regular", {n, k}, pred, workers);
}

inline int conjectured_min_circumference(int n) { return (2 * n + 2) / 3 + 2; }  // ceil(2n/3) + 2
inline int known_min_size_ht_nonham(int n) { return (5 * n + 3) / 4; }          // ceil(5n/4)

struct ExtremalResult {
    int value = 0;
    Graph witness;
    SearchReport report;
};

namespace detail {

// Minimises `score` over connected graphs of order n passing `keep`; ties go
// to the smallest canonical form so the witness is deterministic.
template <typename Keep, typename Score>
ExtremalResult minimise(std::string kind, int n, unsigned workers, Keep&& keep, Score&& score) {
    Stopwatch clock;
    if (workers == 0) workers = 1;
    struct Best {
        std::optional<int> value;
        CanonicalForm form;
        Graph g;
        WorkerTally tally;
    };
    std::vector<Best> best(workers);
    const auto stats = for_each_graph({n, std::nullopt}, workers, [&](const Graph& g, unsigned w) {
        Evaluation e;
        if (!keep(g, e)) {
            audit_alpha(g, e, best[w].tally);
            return;
        }
        audit_alpha(g, e, best[w].tally);
        const int s = score(g, e);
        auto& b = best[w];
        if (b.value && s > *b.value) return;
        const auto form = canonical_form(g);
        if (!b.value || s < *b.value || form < b.form) {
            b.value = s;
            b.form = form;
            b.g = g;
        }
    });
    ExtremalResult out;
    out.report.kind = std::move(kind);
    out.report.bounds.emplace_back("n", n);
    out.report.examined = stats.nodes;
    out.report.classes = stats.classes;
    const Best* winner = nullptr;
    for (const auto& b : best) {
        out.report.ht_graphs += b.tally.ht_graphs;
        out.report.alpha_violations += b.tally.alpha_violations;
        if (!b.value) continue;
        if (!winner || *b.value < *winner->value || (*b.value == *winner->value && b.form < winner->form))
            winner = &b;
    }
    if (!winner) throw std::runtime_error(out.report.kind + ": no graph satisfies the predicate");
    out.value = *winner->value;
    out.witness = winner->g;
    out.report.value = out.value;
    out.report.witnesses.push_back(encode_graph6(out.witness));
    out.report.negative = false;
    out.report.wall_seconds = clock.seconds();
    return out;
}

}  // namespace detail

/// Exact minimum circumference over graphs of order n traceable from every
/// vertex, reported next to the conjectured value ceil(2n/3) + 2.
inline ExtremalResult min_circumference_ht(int n, unsigned workers = 1) {
    if (n < 3 || n > kMaxConnectedOrder) throw std::out_of_range("min_circumference_ht: order must be in 3..9");
    auto r = detail::minimise(
        "min-circumference", n, workers,
        [](const Graph& g, Evaluation& e) {
            e = evaluate(Predicate::ht, g);
            return e.matches;
        },
        [](const Graph& g, const Evaluation& e) {
            if (e.hamiltonian.value_or(false)) return g.order();
            return circumference(g)->length();
        });
    r.report.predicate = "ht";
    r.report.expected = conjectured_min_circumference(n);
    r.report.agrees = r.value == *r.report.expected;
    return r;
}

/// Exact minimum size of a nonhamiltonian graph of order 9 traceable from
/// every vertex, reported next to ceil(5n/4).
inline ExtremalResult min_size_ht_nonham(int n, unsigned workers = 1) {
    if (n != 9) throw std::out_of_range("min_size_ht_nonham: only order 9 is within the exhaustive budget");
    auto r = detail::minimise(
        "min-size", n, workers,
        [](const Graph& g, Evaluation& e) {
            e = evaluate(Predicate::ht_nonham, g);
            return e.matches;
        },
        [](const Graph& g, const Evaluation&) { return g.size(); });
    r.report.predicate = "ht-nonham";
    r.report.expected = known_min_size_ht_nonham(n);
    r.report.agrees = r.value == *r.report.expected;
    return r;
}

}  // namespace htg
