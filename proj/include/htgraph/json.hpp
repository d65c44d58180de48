#pragma once

// JSON views of certificates, traces and search reports (nlohmann/json).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "htgraph/blowup.hpp"
#include "htgraph/families.hpp"
#include "htgraph/graph.hpp"
#include "htgraph/graph6.hpp"
#include "htgraph/hamilton.hpp"
#include "htgraph/independence.hpp"
#include "htgraph/search.hpp"

namespace htg {

using Json = nlohmann::ordered_json;

namespace detail {

template <typename T>
Json optional_json(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

inline Json set_json(VertexSet s) { return Json(bits::to_vector(s)); }

}  // namespace detail

/// Everything the CLI reports about one graph. Witnesses are vertex-label arrays.
struct PropertyCertificate {
    std::string graph6;
    int order = 0;
    int size = 0;
    std::optional<int> regular;
    bool hamiltonian = false;
    std::optional<CycleWitness> hamilton_cycle;
    int circumference = 0;
    std::optional<CycleWitness> longest_cycle;
    bool homogeneously_traceable = false;
    std::optional<Vertex> ht_failing_vertex;
    std::vector<HamPath> ht_paths;  // one per vertex when traceable from every vertex
    bool doubly = false;
    std::optional<Vertex> doubly_failing_vertex;
    IndependentSet independence;
};

inline PropertyCertificate property_certificate(const Graph& g) {
    PropertyCertificate c;
    c.graph6 = encode_graph6(g);
    c.order = g.order();
    c.size = g.size();
    c.regular = degree_profile(g).regular;
    c.longest_cycle = circumference(g);
    c.circumference = c.longest_cycle ? c.longest_cycle->length() : 0;
    c.hamiltonian = c.circumference == g.order();
    if (c.hamiltonian) c.hamilton_cycle = c.longest_cycle;
    const auto ht = is_homogeneously_traceable(g);
    c.homogeneously_traceable = static_cast<bool>(ht);
    c.ht_failing_vertex = ht.failing_vertex;
    if (ht)
        for (const auto& per_vertex : ht.certificate->paths) c.ht_paths.push_back(per_vertex.front());
    const auto dht = is_doubly_homogeneously_traceable(g);
    c.doubly = static_cast<bool>(dht);
    c.doubly_failing_vertex = dht.failing_vertex;
    if (g.order() <= kMaxIndependenceOrder) c.independence = independence_number(g);
    return c;
}

inline Json to_json(const PropertyCertificate& c) {
    Json j;
    j["graph6"] = c.graph6;
    j["order"] = c.order;
    j["size"] = c.size;
    j["regularity"] = detail::optional_json(c.regular);
    j["hamiltonian"] = {{"value", c.hamiltonian},
                        {"cycle", c.hamilton_cycle ? Json(c.hamilton_cycle->vertices) : Json(nullptr)}};
    j["circumference"] = {{"value", c.circumference},
                          {"cycle", c.longest_cycle ? Json(c.longest_cycle->vertices) : Json(nullptr)}};
    Json paths = Json::array();
    for (const auto& p : c.ht_paths) paths.push_back(p.vertices);
    j["homogeneously_traceable"] = {{"value", c.homogeneously_traceable},
                                    {"failing_vertex", detail::optional_json(c.ht_failing_vertex)},
                                    {"paths", paths}};
    j["doubly"] = {{"value", c.doubly}, {"failing_vertex", detail::optional_json(c.doubly_failing_vertex)}};
    j["independence_number"] = {{"value", c.independence.size}, {"witness", detail::set_json(c.independence.members)}};
    return j;
}

inline Json to_json(const BlowupMap& m) {
    Json j;
    j["source_order"] = m.source_order;
    j["removed"] = m.removed;
    j["degree"] = m.degree;
    j["neighbors"] = m.neighbors;
    j["neighbor_targets"] = m.neighbor_targets;
    j["clique"] = m.clique;
    return j;
}

inline Json to_json(const LemmaReport& r) {
    Json j;
    j["lemma"] = r.lemma;
    j["vertex"] = r.vertex;
    j["hypotheses"] = {{"source_doubly_ht", r.source_doubly_ht},
                       {"on_longest_cycle", r.on_longest_cycle},
                       {"in_four_clique", detail::optional_json(r.in_four_clique)},
                       {"chosen_clique", r.chosen_clique ? detail::set_json(*r.chosen_clique) : Json(nullptr)}};
    j["measured"] = {{"source_circumference", r.source_circumference},
                     {"target_circumference", r.target_circumference},
                     {"circumference_delta", r.circumference_delta()},
                     {"target_doubly_ht", r.target_doubly_ht}};
    j["conclusions"] = {{"doubly_preserved", detail::optional_json(r.doubly_preserved)},
                        {"circumference_delta_ok", detail::optional_json(r.circumference_delta_ok)},
                        {"v_prime", detail::optional_json(r.v_prime)},
                        {"v_prime_on_longest_cycle", detail::optional_json(r.v_prime_on_longest_cycle)},
                        {"v_prime_in_four_clique", detail::optional_json(r.v_prime_in_four_clique)}};
    j["target_graph6"] = encode_graph6(r.target);
    return j;
}

inline Json to_json(const FamilyTrace& t) {
    Json j;
    j["family"] = t.family;
    j["seed"] = encode_graph6(t.seed);
    j["seed_marked"] = detail::optional_json(t.seed_marked);
    Json steps = Json::array();
    for (const auto& s : t.steps)
        steps.push_back({{"blown_vertex", s.blown}, {"map", to_json(s.report.map)}, {"report", to_json(s.report)}});
    j["steps"] = steps;
    j["final"] = encode_graph6(t.final_graph);
    j["final_invariants"] = {{"order", t.final.order},
                             {"regularity", detail::optional_json(t.final.regular)},
                             {"circumference", t.final.circumference},
                             {"homogeneously_traceable", t.final.ht},
                             {"doubly", t.final.doubly_ht}};
    j["valid"] = t.valid();
    return j;
}

inline Json to_json(const SeedReport& r) {
    return {{"four_regular", r.four_regular},
            {"doubly_ht", r.doubly_ht},
            {"circumference", r.circumference},
            {"circumference_ok", r.circumference_ok},
            {"marked_on_longest_cycle", r.marked_on_longest_cycle},
            {"marked_in_four_clique", r.marked_in_four_clique},
            {"ok", r.ok()}};
}

/// `wall_seconds` is the only field that varies between identical runs.
inline Json to_json(const SearchReport& r) {
    Json j;
    j["kind"] = r.kind;
    Json bounds = Json::object();
    for (const auto& [k, v] : r.bounds) bounds[k] = v;
    j["bounds"] = bounds;
    j["predicate"] = r.predicate;
    j["examined"] = r.examined;
    j["classes"] = r.classes;
    j["witnesses"] = r.witnesses;
    j["negative"] = r.negative;
    j["seed"] = detail::optional_json(r.seed);
    if (r.value) {
        j["value"] = *r.value;
        j["expected"] = detail::optional_json(r.expected);
        j["agrees"] = detail::optional_json(r.agrees);
    }
    j["ht_graphs"] = r.ht_graphs;
    j["alpha_violations"] = r.alpha_violations;
    j["wall_seconds"] = r.wall_seconds;
    return j;
}

}  // namespace htg
