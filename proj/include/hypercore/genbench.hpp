// genbench.hpp - seeded uniform hypergraph generator and scalability harness
#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <future>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "hypercore/hypergraph.hpp"
#include "hypercore/kgcore.hpp"

namespace hypercore {

/**
 * Each hyperedge draws its cardinality uniformly from
 * [min_cardinality, max_cardinality] (a single value gives the c-uniform
 * model) and then a uniformly random subset of that size. The seed fixes the
 * output completely; draws use only std::mt19937_64 words so results do not
 * depend on the standard library's distribution implementations.
 */
struct GeneratorConfig {
    std::size_t num_nodes = 0;
    std::size_t num_edges = 0;
    std::size_t min_cardinality = 1;
    std::size_t max_cardinality = 1;
    std::uint64_t seed = 0;

    static GeneratorConfig uniform(std::size_t n, std::size_t c, std::size_t m, std::uint64_t seed) {
        return {n, m, c, c, seed};
    }

    void validate() const {
        if (min_cardinality < 1 || min_cardinality > max_cardinality) {
            throw std::invalid_argument("cardinality range must satisfy 1 <= min <= max");
        }
        if (max_cardinality > num_nodes) throw std::invalid_argument("edge cardinality exceeds node count");
    }
};

namespace detail {

// Unbiased draw from [0, bound) (Lemire's multiply-and-reject).
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    using u128 = unsigned __int128;
    u128 product = static_cast<u128>(rng()) * bound;
    auto low = static_cast<std::uint64_t>(product);
    if (low < bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            product = static_cast<u128>(rng()) * bound;
            low = static_cast<std::uint64_t>(product);
        }
    }
    return static_cast<std::uint64_t>(product >> 64);
}

}  // namespace detail

inline Hypergraph generate_k_uniform(const GeneratorConfig& cfg) {
    cfg.validate();
    std::mt19937_64 rng(cfg.seed);
    std::vector<std::vector<NodeId>> edges;
    edges.reserve(cfg.num_edges);
    std::vector<bool> taken(cfg.num_nodes, false);

    for (std::size_t i = 0; i < cfg.num_edges; ++i) {
        std::size_t c = cfg.min_cardinality;
        if (cfg.max_cardinality > cfg.min_cardinality) {
            c += detail::uniform_below(rng, cfg.max_cardinality - cfg.min_cardinality + 1);
        }
        // Floyd's sampling of a c-subset of [0, n)
        std::vector<NodeId> members;
        members.reserve(c);
        for (std::size_t j = cfg.num_nodes - c; j < cfg.num_nodes; ++j) {
            auto t = static_cast<NodeId>(detail::uniform_below(rng, j + 1));
            NodeId pick = taken[t] ? static_cast<NodeId>(j) : t;
            taken[pick] = true;
            members.push_back(pick);
        }
        for (NodeId v : members) taken[v] = false;
        edges.push_back(std::move(members));
    }
    return Hypergraph(cfg.num_nodes, edges);
}

struct ScalabilityConfig {
    std::size_t num_nodes = 10000;
    std::size_t cardinality = 100;
    std::vector<std::size_t> edge_counts;
    CoreParams params{3, 3};
    std::size_t repeats = 3;
    std::uint64_t seed = 1;
    // Generate all instances up front on worker threads; timed runs stay sequential.
    bool parallel_generation = false;
};

struct ScalabilityRow {
    std::size_t num_edges = 0;
    double median_millis = 0.0;
    std::size_t core_size = 0;
};

inline double median(std::vector<double> values) {
    if (values.empty()) return 0.0;
    std::sort(values.begin(), values.end());
    std::size_t mid = values.size() / 2;
    return values.size() % 2 ? values[mid] : (values[mid - 1] + values[mid]) / 2.0;
}

/**
 * For each edge count m_i, generates a c-uniform instance seeded with
 * seed + i and times the full kg_core pipeline (co-occurrence counting,
 * thresholding, peeling) `repeats` times, reporting the median.
 */
inline std::vector<ScalabilityRow> run_scalability(const ScalabilityConfig& cfg) {
    cfg.params.validate();
    if (cfg.repeats < 1) throw std::invalid_argument("repeats must be >= 1");
    auto config_for = [&](std::size_t i) {
        return GeneratorConfig::uniform(cfg.num_nodes, cfg.cardinality, cfg.edge_counts[i], cfg.seed + i);
    };
    for (std::size_t i = 0; i < cfg.edge_counts.size(); ++i) config_for(i).validate();

    std::vector<Hypergraph> pregenerated;
    if (cfg.parallel_generation) {
        std::vector<std::future<Hypergraph>> pending;
        for (std::size_t i = 0; i < cfg.edge_counts.size(); ++i) {
            pending.push_back(std::async(std::launch::async, [&, i] { return generate_k_uniform(config_for(i)); }));
        }
        for (auto& f : pending) pregenerated.push_back(f.get());
    }

    using clock = std::chrono::steady_clock;
    std::vector<ScalabilityRow> rows;
    for (std::size_t i = 0; i < cfg.edge_counts.size(); ++i) {
        Hypergraph generated;
        if (!cfg.parallel_generation) generated = generate_k_uniform(config_for(i));
        const Hypergraph& graph = cfg.parallel_generation ? pregenerated[i] : generated;

        std::vector<double> times;
        std::size_t core_size = 0;
        for (std::size_t r = 0; r < cfg.repeats; ++r) {
            auto start = clock::now();
            CoreResult core = kg_core(graph, cfg.params);
            times.push_back(std::chrono::duration<double, std::milli>(clock::now() - start).count());
            core_size = core.members.size();
        }
        rows.push_back({cfg.edge_counts[i], median(std::move(times)), core_size});
    }
    return rows;
}

}  // namespace hypercore
