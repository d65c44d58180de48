#include <gtest/gtest.h>

#include <set>
#include <string>
#include <vector>

#include "htgraph/canonical.hpp"
#include "htgraph/enumerate.hpp"
#include "htgraph/graph6.hpp"
#include "htgraph/json.hpp"
#include "htgraph/search.hpp"
#include "htgraph/seed_search.hpp"
#include "oracles.hpp"

using namespace htg;

namespace {

std::vector<Graph> collect(EnumerationSpec spec, unsigned workers = 1) {
    std::vector<std::vector<Graph>> per(workers);
    for_each_graph(spec, workers, [&](const Graph& g, unsigned w) { per[w].push_back(g); });
    std::vector<Graph> all;
    for (auto& v : per) all.insert(all.end(), v.begin(), v.end());
    return all;
}

}  // namespace

TEST(Enumerate, ConnectedCountsMatchBruteForce) {
    for (int n = 1; n <= 6; ++n) {
        const auto mine = collect({n, std::nullopt});
        const auto brute = oracle::connected_classes(n);
        ASSERT_EQ(mine.size(), brute.size()) << "n=" << n;
        std::set<std::string> a, b;
        for (const auto& g : mine) a.insert(oracle::min_form(g));
        for (const auto& g : brute) b.insert(oracle::min_form(g));
        EXPECT_EQ(a, b);
    }
}

TEST(Enumerate, PredicateCountsMatchBruteForce) {
    for (int n = 3; n <= 6; ++n) {
        const auto brute = oracle::connected_classes(n);
        for (auto pred : {Predicate::ht, Predicate::doubly_ht, Predicate::nonham, Predicate::ht_nonham}) {
            std::size_t expected = 0;
            for (const auto& g : brute) {
                const bool ham = oracle::hamiltonian(g);
                const bool ht = oracle::homogeneously_traceable(g);
                bool m = false;
                switch (pred) {
                    case Predicate::ht: m = ht; break;
                    case Predicate::doubly_ht: m = oracle::doubly_homogeneously_traceable(g); break;
                    case Predicate::nonham: m = !ham; break;
                    case Predicate::ht_nonham: m = ht && !ham; break;
                    case Predicate::any: m = true; break;
                }
                expected += m;
            }
            EXPECT_EQ(enumerate_connected(n, pred).witnesses.size(), expected) << n << " " << to_string(pred);
        }
    }
}

TEST(Enumerate, KnownClassCounts) {
    const std::vector<std::uint64_t> connected{1, 1, 2, 6, 21, 112, 853, 11117};  // n = 1..8
    for (int n = 1; n <= 8; ++n) EXPECT_EQ(enumerate_connected(n, Predicate::any).classes, connected[n - 1]);
    EXPECT_EQ(enumerate_regular(3, 4, Predicate::any).classes, 1u);
    EXPECT_EQ(enumerate_regular(3, 8, Predicate::any).classes, 5u);
    EXPECT_EQ(enumerate_regular(3, 10, Predicate::any).classes, 19u);
    EXPECT_EQ(enumerate_regular(3, 12, Predicate::any).classes, 85u);
    EXPECT_EQ(enumerate_regular(4, 8, Predicate::any).classes, 6u);
    EXPECT_EQ(enumerate_regular(4, 10, Predicate::any).classes, 59u);
}

TEST(Enumerate, RepresentativesPairwiseNonIsomorphic) {
    for (int n = 1; n <= 8; ++n) {
        std::set<CanonicalForm> forms;
        for (const auto& g : collect({n, std::nullopt})) {
            ASSERT_TRUE(g.is_connected());
            ASSERT_TRUE(forms.insert(canonical_form(g)).second) << encode_graph6(g);
        }
    }
}

TEST(Enumerate, SpecValidation) {
    EXPECT_THROW(enumerate_connected(0, Predicate::any), std::out_of_range);
    EXPECT_THROW(enumerate_connected(10, Predicate::any), std::out_of_range);
    EXPECT_THROW(enumerate_regular(3, 7, Predicate::any), std::invalid_argument);
    EXPECT_THROW(enumerate_regular(4, 14, Predicate::any), std::out_of_range);
    EXPECT_THROW(enumerate_regular(3, 16, Predicate::any), std::out_of_range);
    EXPECT_THROW(for_each_graph({17, std::nullopt}, 1, [](const Graph&, unsigned) {}), std::out_of_range);
}

TEST(Search, OrderThreeTraceable) {
    // P3 is not traceable from its centre, so only K3 qualifies
    const auto r = enumerate_connected(3, Predicate::ht);
    ASSERT_EQ(r.witnesses.size(), 1u);
    EXPECT_EQ(decode_graph6(r.witnesses[0]), complete_graph(3));
    EXPECT_EQ(enumerate_connected(4, Predicate::any).classes, 6u);
}

TEST(Search, CubicOrderTenIsPetersen) {
    const auto r = enumerate_regular(3, 10, Predicate::ht_nonham);
    ASSERT_EQ(r.witnesses.size(), 1u);
    EXPECT_EQ(canonical_form(decode_graph6(r.witnesses[0])), canonical_form(petersen()));
    const auto k4 = enumerate_regular(3, 4, Predicate::any);
    ASSERT_EQ(k4.witnesses.size(), 1u);
    EXPECT_TRUE(satisfies(Predicate::ht, decode_graph6(k4.witnesses[0])));
}

TEST(Search, QuarticSmallOrdersNegative) {
    for (int n = 5; n <= 11; ++n) {
        const auto r = enumerate_regular(4, n, Predicate::ht_nonham);
        EXPECT_TRUE(r.negative) << n;
        EXPECT_EQ(r.alpha_violations, 0u);
    }
}

TEST(Search, WitnessesRepassPredicate) {
    const auto r = enumerate_connected(7, Predicate::doubly_ht);
    for (const auto& s : r.witnesses) ASSERT_TRUE(is_doubly_homogeneously_traceable(decode_graph6(s)));
}

TEST(Search, ParallelMatchesSequential) {
    const auto a = enumerate_regular(4, 10, Predicate::any, 1);
    const auto b = enumerate_regular(4, 10, Predicate::any, 3);
    EXPECT_EQ(a.witnesses, b.witnesses);
    EXPECT_EQ(a.classes, b.classes);
    EXPECT_EQ(a.examined, b.examined);
}

TEST(Search, ReportJsonShape) {
    auto r = enumerate_connected(5, Predicate::ht_nonham);
    const Json j = to_json(r);
    EXPECT_EQ(j["kind"], "connected");
    EXPECT_EQ(j["bounds"]["n"], 5);
    EXPECT_EQ(j["negative"], true);
    EXPECT_TRUE(j["seed"].is_null());
    EXPECT_EQ(parse_predicate("doubly-ht"), Predicate::doubly_ht);
    EXPECT_THROW(parse_predicate("hamiltonian"), std::invalid_argument);
}

TEST(Extremal, SmallOrdersAreHamiltonian) {
    for (int n = 3; n <= 8; ++n) {
        const auto r = min_circumference_ht(n);
        EXPECT_EQ(r.value, n);
    }
    EXPECT_EQ(decode_graph6(min_circumference_ht(3).report.witnesses[0]), complete_graph(3));
    EXPECT_THROW(min_circumference_ht(10), std::out_of_range);
    EXPECT_THROW(min_size_ht_nonham(8), std::out_of_range);
    EXPECT_EQ(conjectured_min_circumference(9), 8);
    EXPECT_EQ(known_min_size_ht_nonham(9), 12);
}

TEST(Anneal, ReproducibleAndThreadIndependent) {
    AnnealConfig c;
    c.p = 14;
    c.max_steps = 150;
    c.restarts = 3;
    c.seed = 99;
    const auto a = anneal_seed_search(c);
    c.workers = 3;
    const auto b = anneal_seed_search(c);
    EXPECT_EQ(a.report.examined, b.report.examined);
    EXPECT_EQ(a.report.witnesses, b.report.witnesses);
    EXPECT_EQ(a.found.has_value(), b.found.has_value());
}

TEST(Anneal, MovesPreserveDegrees) {
    std::mt19937_64 rng(4);
    Graph g = detail::random_regular(18, 4, rng);
    EXPECT_TRUE(is_regular(g, 4));
    for (int i = 0; i < 500; ++i)
        if (auto next = detail::edge_swap(g, rng)) g = *next;
    EXPECT_TRUE(is_regular(g, 4));
}

TEST(Anneal, AdversarialConfigFindsNothing) {
    AnnealConfig c;
    c.p = 12;
    c.target = AnnealTarget::ht_nonham;
    c.max_steps = 300;
    c.restarts = 2;
    const auto r = anneal_seed_search(c);
    EXPECT_FALSE(r.found);
    EXPECT_TRUE(r.report.negative);
    EXPECT_EQ(r.report.seed, 1u);
}

TEST(Anneal, ConfigValidation) {
    AnnealConfig c;
    c.p = 9;
    c.k = 3;
    EXPECT_THROW(anneal_seed_search(c), std::invalid_argument);
    c.p = 10;
    c.max_steps = 0;
    EXPECT_THROW(anneal_seed_search(c), std::invalid_argument);
    c.max_steps = 10;
    c.cooling = 1.5;
    EXPECT_THROW(anneal_seed_search(c), std::invalid_argument);
}

TEST(RungSearch, GadgetCounts) {
    EXPECT_EQ(rung_gadgets(4).size(), 1u);
    EXPECT_EQ(rung_gadgets(5).size(), 2u);
    EXPECT_THROW(rung_gadgets(3), std::out_of_range);
    EXPECT_THROW(rung_seed_search(17), std::out_of_range);
}
