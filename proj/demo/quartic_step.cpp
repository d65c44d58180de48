// One K4 blow-up from the order-18 seed, with its step report as JSON.
#include <iostream>

#include "htgraph/json.hpp"

int main(int argc, char** argv) {
    const auto seeds = htg::load_seed_set(argc > 1 ? argv[1] : HTGRAPH_SEED_DIR);
    const auto& seed = seeds.for_order(18);
    const auto report = htg::verify_lemma2(seed.graph, seed.marked);
    std::cout << htg::to_json(report).dump(2) << '\n';
    return report.conclusions_hold() && report.hypotheses_hold() ? 0 : 1;
}
