// hypercore - command-line front end for (k,g)-core analysis of hyperedge lists
//
// Exit codes: 0 success, 1 internal consistency failure, 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "hypercore/hypercore.hpp"

namespace {

constexpr int kUsageError = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

hypercore::Hypergraph load(const std::string& path, bool dedup) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return hypercore::parse_hyperedge_list(in, {.dedup_edges = dedup});
}

// Writes to `path`, or stdout when empty.
template <class Fn>
void emit(const std::string& path, Fn&& write) {
    if (path.empty()) {
        write(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    write(out);
}

std::size_t sweep_threads() {
    std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("HYPERCORE_THREADS")) {
        try {
            threads = std::min<std::size_t>(threads, std::max<std::size_t>(1, std::stoul(env)));
        } catch (const std::exception&) {
            throw InputError("HYPERCORE_THREADS must be a positive integer");
        }
    }
    return threads;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"(k,g)-core analysis for hypergraphs"};
    app.require_subcommand(1);

    std::string path;
    std::string output;
    bool dedup = false;
    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("path", path, "hyperedge-list file")->required();
        cmd->add_flag("--dedup", dedup, "drop repeated hyperedges");
    };

    auto* stats_cmd = app.add_subcommand("stats", "print corpus statistics as JSON");
    add_input(stats_cmd);

    std::size_t k = 0;
    std::size_t g = 0;
    bool naive = false;
    std::string nom_dump;
    auto* core_cmd = app.add_subcommand("core", "compute the (k,g)-core");
    add_input(core_cmd);
    core_cmd->add_option("-k", k, "minimum number of g-frequent neighbours")->required();
    core_cmd->add_option("-g", g, "minimum shared hyperedges per neighbour pair")->required();
    core_cmd->add_flag("--naive", naive, "use the sweep-based reference peeling");
    core_cmd->add_option("-o,--output", output, "write JSON here instead of stdout");
    core_cmd->add_option("--dump-nom", nom_dump, "write pair co-occurrence counts as CSV");

    std::vector<std::size_t> k_list;
    std::vector<std::size_t> g_list;
    auto* decompose_cmd = app.add_subcommand("decompose", "core sizes over a (k,g) grid as CSV");
    add_input(decompose_cmd);
    decompose_cmd->add_option("-k", k_list, "comma-separated k values")->required()->delimiter(',');
    decompose_cmd->add_option("-g", g_list, "comma-separated g values")->required()->delimiter(',');
    decompose_cmd->add_option("-o,--output", output, "write CSV here instead of stdout");

    std::string model_name;
    std::optional<std::size_t> q, d, alpha, beta;
    std::optional<std::size_t> baseline_k;
    auto* baseline_cmd = app.add_subcommand("baseline", "run a comparison core model");
    add_input(baseline_cmd);
    baseline_cmd->add_option("--model", model_name, "kq | nbr_k | kd | clique | alpha_beta")->required();
    baseline_cmd->add_option("-k", baseline_k, "k for kq, nbr_k, kd and clique");
    baseline_cmd->add_option("-q", q, "minimum hyperedge cardinality (kq)");
    baseline_cmd->add_option("-d", d, "minimum degree (kd)");
    baseline_cmd->add_option("--alpha", alpha, "node-side bound (alpha_beta)");
    baseline_cmd->add_option("--beta", beta, "edge-side bound (alpha_beta)");
    baseline_cmd->add_option("-o,--output", output, "write JSON here instead of stdout");

    std::size_t n = 0;
    std::size_t c = 0;
    std::size_t m = 0;
    std::uint64_t seed = 1;
    auto* generate_cmd = app.add_subcommand("generate", "write a random c-uniform hypergraph");
    generate_cmd->add_option("-n", n, "number of nodes")->required();
    generate_cmd->add_option("-c", c, "edge cardinality")->required();
    generate_cmd->add_option("-m", m, "number of hyperedges")->required();
    generate_cmd->add_option("--seed", seed, "RNG seed");
    generate_cmd->add_option("-o,--output", output, "write the edge list here instead of stdout");

    std::vector<std::size_t> m_list;
    std::size_t repeats = 3;
    bool parallel_gen = false;
    auto* bench_cmd = app.add_subcommand("bench", "time kg_core on generated instances, CSV output");
    bench_cmd->add_option("-n", n, "number of nodes")->required();
    bench_cmd->add_option("-c", c, "edge cardinality")->required();
    bench_cmd->add_option("-m", m_list, "comma-separated edge counts")->required()->delimiter(',');
    bench_cmd->add_option("-k", k, "k")->required();
    bench_cmd->add_option("-g", g, "g")->required();
    bench_cmd->add_option("--repeats", repeats, "timed runs per edge count");
    bench_cmd->add_option("--seed", seed, "base RNG seed");
    bench_cmd->add_flag("--parallel-gen", parallel_gen, "generate instances concurrently before timing");
    bench_cmd->add_option("-o,--output", output, "write CSV here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    try {
        if (stats_cmd->parsed()) {
            auto graph = load(path, dedup);
            std::cout << hypercore::to_json(hypercore::stats(graph)).dump(2) << '\n';
        } else if (core_cmd->parsed()) {
            hypercore::CoreParams params{k, g};
            params.validate();
            auto graph = load(path, dedup);
            if (!nom_dump.empty()) {
                auto nom = hypercore::build_nom(graph);
                emit(nom_dump, [&](std::ostream& out) { hypercore::write_nom_csv(out, nom, graph); });
            }
            auto result = naive ? hypercore::kg_core_naive(graph, params) : hypercore::kg_core(graph, params);
            emit(output, [&](std::ostream& out) { out << hypercore::to_json(result, graph).dump(2) << '\n'; });
        } else if (decompose_cmd->parsed()) {
            auto graph = load(path, dedup);
            auto grid = hypercore::kg_decomposition(graph, k_list, g_list, {.threads = sweep_threads()});
            emit(output, [&](std::ostream& out) { hypercore::write_grid_csv(out, grid); });
            auto violations = hypercore::check_monotone(grid);
            for (const auto& v : violations) std::cerr << "containment violation: " << v << '\n';
            if (!violations.empty()) return 1;
        } else if (baseline_cmd->parsed()) {
            hypercore::BaselineParams params;
            params.model = hypercore::parse_baseline_model(model_name);
            auto require = [](const std::optional<std::size_t>& value, const char* flag) {
                if (!value) throw std::invalid_argument(std::string("missing ") + flag);
                return *value;
            };
            switch (params.model) {
                case hypercore::BaselineModel::kq:
                    params.first = require(baseline_k, "-k");
                    params.second = require(q, "-q");
                    break;
                case hypercore::BaselineModel::kd:
                    params.first = require(baseline_k, "-k");
                    params.second = require(d, "-d");
                    break;
                case hypercore::BaselineModel::alpha_beta:
                    params.first = require(alpha, "--alpha");
                    params.second = require(beta, "--beta");
                    break;
                case hypercore::BaselineModel::nbr_k:
                case hypercore::BaselineModel::clique:
                    params.first = require(baseline_k, "-k");
                    break;
            }
            // a flag the chosen model ignores is almost certainly a typo
            auto unused = [&](const std::optional<std::size_t>& value, const char* flag, bool used) {
                if (value && !used) {
                    throw std::invalid_argument(std::string(flag) + " is not a parameter of " + model_name);
                }
            };
            using M = hypercore::BaselineModel;
            unused(baseline_k, "-k", params.model != M::alpha_beta);
            unused(q, "-q", params.model == M::kq);
            unused(d, "-d", params.model == M::kd);
            unused(alpha, "--alpha", params.model == M::alpha_beta);
            unused(beta, "--beta", params.model == M::alpha_beta);
            params.validate();
            auto graph = load(path, dedup);
            auto result = hypercore::run_baseline(graph, params);
            emit(output,
                 [&](std::ostream& out) { out << hypercore::to_json(result, params, graph).dump(2) << '\n'; });
        } else if (generate_cmd->parsed()) {
            auto graph = hypercore::generate_k_uniform(hypercore::GeneratorConfig::uniform(n, c, m, seed));
            emit(output, [&](std::ostream& out) { hypercore::write_hyperedge_list(out, graph); });
        } else if (bench_cmd->parsed()) {
            hypercore::ScalabilityConfig cfg;
            cfg.num_nodes = n;
            cfg.cardinality = c;
            cfg.edge_counts = m_list;
            cfg.params = {k, g};
            cfg.repeats = repeats;
            cfg.seed = seed;
            cfg.parallel_generation = parallel_gen;
            auto rows = hypercore::run_scalability(cfg);
            emit(output, [&](std::ostream& out) { hypercore::write_scalability_csv(out, rows); });
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return 0;
}
