// htgraph: property certificates, family constructions and searches.
// Exit codes: 0 success (negative search results included), 1 internal error, 2 input error.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "htgraph/htgraph.hpp"

#ifndef HTGRAPH_SEED_DIR
#define HTGRAPH_SEED_DIR "data/seeds"
#endif

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string trimmed(std::string s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    return s.substr(i);
}

int cmd_props(const std::string& path) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (path != "-") {
        file.open(path);
        if (!file) throw InputError("cannot open " + path);
        in = &file;
    }
    std::string line;
    for (int number = 1; std::getline(*in, line); ++number) {
        line = trimmed(line);
        if (line.empty() || line.front() == '#') continue;
        htg::Graph g;
        try {
            g = htg::decode_graph6(line);
        } catch (const htg::Graph6Error& e) {
            throw InputError("line " + std::to_string(number) + ": " + e.what());
        }
        std::cout << htg::to_json(htg::property_certificate(g)).dump() << '\n';
    }
    return 0;
}

int cmd_construct(const std::string& family, int order, const std::string& trace_path, const std::string& seed_dir) {
    htg::FamilyTrace trace;
    if (family == "cubic") trace = htg::cubic_family(order);
    else if (family == "quartic") trace = htg::quartic_family(order, htg::load_seed_set(seed_dir));
    else throw InputError("unknown family '" + family + "' (cubic or quartic)");
    std::cout << htg::encode_graph6(trace.final_graph) << '\n';
    if (!trace_path.empty()) {
        std::ofstream out(trace_path);
        if (!out) throw InputError("cannot write " + trace_path);
        out << htg::to_json(trace).dump(2) << '\n';
    }
    return trace.valid() ? 0 : 1;
}

struct SearchArgs {
    std::string kind;
    int n = 0;
    int k = 0;
    int p = 0;
    std::string pred = "ht-nonham";
    std::uint64_t seed = 1;
    unsigned threads = 1;
    int steps = 2000;
    int restarts = 4;
    bool unsafe = false;
};

int cmd_search(const SearchArgs& a) {
    auto need = [](int v, const char* flag) {
        if (v <= 0) throw InputError(std::string("missing ") + flag);
        return v;
    };
    htg::SearchReport report;
    if (a.kind == "connected") {
        report = htg::enumerate_connected(need(a.n, "-n"), htg::parse_predicate(a.pred), a.threads, a.unsafe);
    } else if (a.kind == "regular") {
        report = htg::enumerate_regular(need(a.k, "-k"), need(a.n, "-n"), htg::parse_predicate(a.pred), a.threads,
                                        a.unsafe);
    } else if (a.kind == "min-circumference") {
        report = htg::min_circumference_ht(need(a.n, "-n"), a.threads).report;
    } else if (a.kind == "min-size") {
        report = htg::min_size_ht_nonham(need(a.n, "-n"), a.threads).report;
    } else if (a.kind == "anneal") {
        htg::AnnealConfig cfg;
        cfg.p = need(a.p, "-p");
        cfg.k = a.k > 0 ? a.k : 4;
        cfg.seed = a.seed;
        cfg.max_steps = a.steps;
        cfg.restarts = a.restarts;
        cfg.workers = a.threads;
        if (a.pred == "ht-nonham") cfg.target = htg::AnnealTarget::ht_nonham;
        else if (a.pred != "seed") throw InputError("anneal predicate must be 'seed' or 'ht-nonham'");
        const auto out = htg::anneal_seed_search(cfg);
        htg::Json j = htg::to_json(out.report);
        j["marked"] = out.found ? htg::Json(out.found->marked) : htg::Json(nullptr);
        std::cout << j.dump() << '\n';
        return 0;
    } else if (a.kind == "rungs") {
        htg::detail::Stopwatch clock;
        const int p = need(a.p, "-p");
        const auto seed = htg::rung_seed_search(p);
        report.kind = "rungs";
        report.bounds = {{"p", p}};
        report.predicate = "seed";
        if (seed) report.witnesses.push_back(htg::encode_graph6(seed->graph));
        report.negative = !seed;
        report.wall_seconds = clock.seconds();
        htg::Json j = htg::to_json(report);
        j["marked"] = seed ? htg::Json(seed->marked) : htg::Json(nullptr);
        std::cout << j.dump() << '\n';
        return 0;
    } else {
        throw InputError("unknown search kind '" + a.kind + "'");
    }
    std::cout << htg::to_json(report).dump() << '\n';
    return 0;
}

int cmd_verify_seed(const std::string& path) {
    const auto seed = htg::load_seed_file(path);
    const auto report = htg::verify_seed(seed.graph, seed.marked);
    htg::Json j = htg::to_json(report);
    j["graph6"] = htg::encode_graph6(seed.graph);
    j["marked"] = seed.marked;
    std::cout << j.dump() << '\n';
    return report.ok() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Regular homogeneously traceable graphs: certificates, constructions, searches"};
    app.require_subcommand(1);

    std::string props_file;
    auto* props = app.add_subcommand("props", "JSON property certificate per graph6 line ('-' reads stdin)");
    props->add_option("file", props_file)->required();

    std::string family, trace_path, seed_dir = HTGRAPH_SEED_DIR;
    int order = 0;
    auto* construct = app.add_subcommand("construct", "build a cubic or quartic family member");
    construct->add_option("family", family)->required();
    construct->add_option("order", order)->required();
    construct->add_option("--trace", trace_path, "write the construction trace as JSON");
    construct->add_option("--seeds", seed_dir, "directory holding quartic_{18,19,20}.g6");

    SearchArgs sa;
    auto* search = app.add_subcommand("search", "connected | regular | min-circumference | min-size | anneal | rungs");
    search->add_option("kind", sa.kind)->required();
    search->add_option("-n", sa.n, "order");
    search->add_option("-k", sa.k, "degree");
    search->add_option("-p", sa.p, "order for seed searches");
    search->add_option("--pred", sa.pred, "any | ht | ht-nonham | doubly-ht | nonham (anneal: seed | ht-nonham)");
    search->add_option("--seed", sa.seed, "RNG seed");
    search->add_option("--threads", sa.threads, "worker threads");
    search->add_option("--steps", sa.steps, "annealing steps per restart");
    search->add_option("--restarts", sa.restarts, "annealing restarts");
    search->add_flag("--unsafe-bounds", sa.unsafe, "allow orders beyond the desk-scale budget");

    std::string seed_file;
    auto* verify = app.add_subcommand("verify-seed", "check a seed fixture '<graph6> # marked=<int>'");
    verify->add_option("file", seed_file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*props) return cmd_props(props_file);
        if (*construct) return cmd_construct(family, order, trace_path, seed_dir);
        if (*search) {
            if (sa.kind == "anneal" && sa.pred == "ht-nonham" && search->count("--pred") == 0) sa.pred = "seed";
            return cmd_search(sa);
        }
        if (*verify) return cmd_verify_seed(seed_file);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const htg::Graph6Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const htg::FixtureError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
