#pragma once

#include <array>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "htgraph/blowup.hpp"
#include "htgraph/graph.hpp"
#include "htgraph/graph6.hpp"
#include "htgraph/hamilton.hpp"

namespace htg {

struct FamilyStep {
    Vertex blown = 0;
    LemmaReport report;  // carries the BlowupMap
};

struct FamilyInvariants {
    int order = 0;
    std::optional<int> regular;
    int circumference = 0;
    bool ht = false;
    bool doubly_ht = false;
};

struct FamilyTrace {
    std::string family;  // "cubic" or "quartic"
    Graph seed;
    std::optional<Vertex> seed_marked;
    std::vector<FamilyStep> steps;
    Graph final_graph;
    FamilyInvariants final;

    /// Closed-form circumference for the family at the final order.
    int expected_circumference() const { return family == "cubic" ? final.order - 1 : final.order - 4; }

    bool valid() const {
        for (const auto& s : steps)
            if (!s.report.hypotheses_hold() || !s.report.conclusions_hold()) return false;
        const int k = family == "cubic" ? 3 : 4;
        return final.regular == k && final.ht && final.doubly_ht && final.circumference == expected_circumference();
    }
};

inline FamilyInvariants measure_invariants(const Graph& g) {
    FamilyInvariants inv;
    inv.order = g.order();
    inv.regular = degree_profile(g).regular;
    const auto c = circumference(g);
    inv.circumference = c ? c->length() : 0;
    inv.doubly_ht = static_cast<bool>(is_doubly_homogeneously_traceable(g));
    inv.ht = inv.doubly_ht || static_cast<bool>(is_homogeneously_traceable(g));
    return inv;
}

inline constexpr int kMaxFamilyOrder = 40;

/// Grows the Petersen graph by K3 blow-ups to even order n, each time at the
/// smallest vertex lying on a longest cycle. Every step is re-verified.
inline FamilyTrace cubic_family(int n) {
    if (n % 2 != 0) throw std::invalid_argument("cubic_family: order must be even");
    if (n < 10) throw std::invalid_argument("cubic_family: order must be at least 10");
    if (n > kMaxFamilyOrder) throw std::out_of_range("cubic_family: order exceeds capacity of 40");
    FamilyTrace trace;
    trace.family = "cubic";
    trace.seed = petersen();
    Graph current = trace.seed;
    while (current.order() < n) {
        const int circ = circumference(current)->length();
        Vertex pick = -1;
        for (Vertex v = 0; v < current.order() && pick < 0; ++v)
            if (longest_cycle_through(current, v, circ)) pick = v;
        if (pick < 0) throw std::logic_error("cubic_family: no vertex on a longest cycle");
        FamilyStep step{pick, verify_lemma1(current, pick)};
        current = step.report.target;
        trace.steps.push_back(std::move(step));
    }
    trace.final_graph = current;
    trace.final = measure_invariants(current);
    return trace;
}

struct Seed {
    Graph graph;
    Vertex marked = 0;
};

/// Seeds of orders 18, 19 and 20, indexed by order - 18.
struct SeedSet {
    std::array<Seed, 3> seeds;
    const Seed& for_order(int p) const { return seeds[static_cast<std::size_t>((p - 18) % 3)]; }
};

struct SeedReport {
    bool four_regular = false;
    bool doubly_ht = false;
    int circumference = 0;
    bool circumference_ok = false;  // order - 4
    bool marked_on_longest_cycle = false;
    bool marked_in_four_clique = false;

    bool ok() const {
        return four_regular && doubly_ht && circumference_ok && marked_on_longest_cycle && marked_in_four_clique;
    }
};

inline SeedReport verify_seed(const Graph& g, Vertex marked) {
    SeedReport r;
    r.four_regular = is_regular(g, 4);
    if (const auto c = circumference(g)) r.circumference = c->length();
    r.circumference_ok = r.circumference == g.order() - 4;
    if (marked >= 0 && marked < g.order()) {
        r.marked_on_longest_cycle =
            r.circumference > 0 && longest_cycle_through(g, marked, r.circumference).has_value();
        r.marked_in_four_clique = !four_cliques_at(g, marked).empty();
    }
    r.doubly_ht = static_cast<bool>(is_doubly_homogeneously_traceable(g));
    return r;
}

struct FixtureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses "<graph6> # marked=<int>".
inline Seed parse_seed_line(std::string_view line) {
    const auto hash = line.find('#');
    if (hash == std::string_view::npos) throw FixtureError("seed line lacks '# marked=<int>' annotation");
    std::string_view g6 = line.substr(0, hash);
    while (!g6.empty() && (g6.back() == ' ' || g6.back() == '\t')) g6.remove_suffix(1);
    std::string_view note = line.substr(hash + 1);
    while (!note.empty() && note.front() == ' ') note.remove_prefix(1);
    while (!note.empty() && (note.back() == ' ' || note.back() == '\r' || note.back() == '\n')) note.remove_suffix(1);
    constexpr std::string_view key = "marked=";
    if (!note.starts_with(key)) throw FixtureError("seed annotation must read 'marked=<int>'");
    note.remove_prefix(key.size());
    int marked = -1;
    const auto [ptr, ec] = std::from_chars(note.data(), note.data() + note.size(), marked);
    if (ec != std::errc{} || ptr != note.data() + note.size()) throw FixtureError("seed marked vertex is not an integer");
    Seed s{decode_graph6(g6), marked};
    if (marked < 0 || marked >= s.graph.order()) throw FixtureError("seed marked vertex out of range");
    return s;
}

inline std::string format_seed_line(const Seed& s) {
    return encode_graph6(s.graph) + " # marked=" + std::to_string(s.marked);
}

/// First non-blank line of a fixture file that does not start with '#'.
inline Seed load_seed_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FixtureError("cannot open seed fixture " + path.string());
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line.front() == '#') continue;
        return parse_seed_line(line);
    }
    throw FixtureError("seed fixture " + path.string() + " has no graph line");
}

/// Reads quartic_18.g6, quartic_19.g6 and quartic_20.g6 from `dir`.
inline SeedSet load_seed_set(const std::filesystem::path& dir) {
    SeedSet set;
    for (int p = 18; p <= 20; ++p) {
        set.seeds[static_cast<std::size_t>(p - 18)] = load_seed_file(dir / ("quartic_" + std::to_string(p) + ".g6"));
        if (set.seeds[static_cast<std::size_t>(p - 18)].graph.order() != p)
            throw FixtureError("seed fixture quartic_" + std::to_string(p) + ".g6 has the wrong order");
    }
    return set;
}

/// Grows the seed of matching residue mod 3 by K4 blow-ups to order p. The
/// first step blows the seed's marked vertex, later steps the v' reported by
/// the previous step.
inline FamilyTrace quartic_family(int p, const SeedSet& seeds) {
    if (p < 18) throw std::invalid_argument("quartic_family: order must be at least 18");
    if (p > kMaxFamilyOrder) throw std::out_of_range("quartic_family: order exceeds capacity of 40");
    const Seed& seed = seeds.for_order(p);
    if (seed.graph.order() > p || (p - seed.graph.order()) % 3 != 0)
        throw std::invalid_argument("quartic_family: seed order does not match residue of p");
    FamilyTrace trace;
    trace.family = "quartic";
    trace.seed = seed.graph;
    trace.seed_marked = seed.marked;
    Graph current = seed.graph;
    Vertex tracked = seed.marked;
    if (current.order() == p) {
        if (!verify_seed(current, tracked).ok()) throw std::invalid_argument("quartic_family: seed fails verification");
    }
    while (current.order() < p) {
        FamilyStep step{tracked, verify_lemma2(current, tracked)};
        if (!step.report.hypotheses_hold())
            throw std::invalid_argument("quartic_family: tracked vertex " + std::to_string(tracked) +
                                        " does not satisfy the K4 blow-up hypotheses");
        current = step.report.target;
        tracked = step.report.v_prime.value();
        trace.steps.push_back(std::move(step));
    }
    trace.final_graph = current;
    trace.final = measure_invariants(current);
    return trace;
}

}  // namespace htg
