// kgcore.hpp - (k,g)-core peeling, fixed-g coreness and parameter-grid decomposition
#pragma once

#include <algorithm>
#include <chrono>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "hypercore/cooccur.hpp"
#include "hypercore/hypergraph.hpp"

namespace hypercore {

// k: required number of g-frequent neighbours; g: required shared hyperedges per pair.
struct CoreParams {
    std::size_t k = 1;
    std::size_t g = 1;

    void validate() const {
        if (k < 1) throw std::invalid_argument("k must be >= 1");
        if (g < 1) throw std::invalid_argument("g must be >= 1");
    }
    friend bool operator==(const CoreParams&, const CoreParams&) = default;
};

struct CoreResult {
    std::vector<NodeId> members;  // ascending
    CoreParams params;
    std::size_t rounds = 0;  // peel sweeps that removed at least one node
    std::vector<std::size_t> removed_per_round;
};

/**
 * Classical k-core of a co-occurrence graph by wave peeling: wave 1 removes
 * every node below k, wave i+1 removes the nodes that fell below k because of
 * wave i. Each node is visited once and each adjacency entry decremented at
 * most once, so the cost is linear in the size of the graph.
 */
inline CoreResult peel_k_core(const CoocGraph& graph, std::size_t k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    const std::size_t n = graph.num_nodes();
    CoreResult result;
    result.params = {k, graph.g()};

    std::vector<std::size_t> degree(n);
    std::vector<bool> alive(n, true);
    std::vector<NodeId> wave;
    for (NodeId v = 0; v < n; ++v) {
        degree[v] = graph.degree(v);
        if (degree[v] < k) {
            alive[v] = false;
            wave.push_back(v);
        }
    }

    std::vector<NodeId> next;
    while (!wave.empty()) {
        ++result.rounds;
        result.removed_per_round.push_back(wave.size());
        next.clear();
        for (NodeId v : wave) {
            for (NodeId u : graph.neighbours(v)) {
                if (!alive[u]) continue;
                if (--degree[u] < k) {
                    alive[u] = false;
                    next.push_back(u);
                }
            }
        }
        std::sort(next.begin(), next.end());
        wave.swap(next);
    }

    for (NodeId v = 0; v < n; ++v) {
        if (alive[v]) result.members.push_back(v);
    }
    return result;
}

// Unique maximal node set in which every member has >= k co-members sharing >= g hyperedges with it.
inline CoreResult kg_core(const Hypergraph& graph, CoreParams params) {
    params.validate();
    return peel_k_core(build_cooc_graph(graph, params.g), params.k);
}

/**
 * Direct transcription of the sweep-based peeling loop: count neighbour
 * occurrences into per-node hash maps, keep the g-frequent entries, then
 * sweep the surviving nodes in `order` (ascending id when empty) and delete
 * every node with fewer than k entries, updating its neighbours' maps
 * immediately, until a full sweep removes nothing.
 *
 * Quadratic in the worst case; intended as a reference for kg_core.
 */
inline CoreResult kg_core_naive(const Hypergraph& graph, CoreParams params,
                                std::span<const NodeId> order = {}) {
    params.validate();
    const std::size_t n = graph.num_nodes();
    std::vector<NodeId> sweep_order;
    if (order.empty()) {
        sweep_order.resize(n);
        std::iota(sweep_order.begin(), sweep_order.end(), 0);
    } else {
        if (order.size() != n) throw std::invalid_argument("sweep order must be a permutation of all nodes");
        sweep_order.assign(order.begin(), order.end());
        std::vector<bool> seen(n, false);
        for (NodeId v : sweep_order) {
            if (v >= n || seen[v]) throw std::invalid_argument("sweep order must be a permutation of all nodes");
            seen[v] = true;
        }
    }

    std::vector<std::unordered_map<NodeId, Count>> occur(n);
    for (NodeId v = 0; v < n; ++v) {
        for (EdgeId e : graph.incident_edges(v)) {
            for (NodeId u : graph.edge(e)) {
                if (u != v) ++occur[v][u];
            }
        }
    }
    for (auto& row : occur) {
        std::erase_if(row, [&](const auto& entry) { return entry.second < params.g; });
    }

    std::vector<bool> in_core(n, true);
    CoreResult result;
    result.params = params;
    bool changed = true;
    while (changed) {
        changed = false;
        std::size_t removed = 0;
        for (NodeId w : sweep_order) {
            if (!in_core[w] || occur[w].size() >= params.k) continue;
            in_core[w] = false;
            for (const auto& [u, count] : occur[w]) occur[u].erase(w);
            occur[w].clear();
            ++removed;
            changed = true;
        }
        if (removed > 0) {
            ++result.rounds;
            result.removed_per_round.push_back(removed);
        }
    }

    for (NodeId v = 0; v < n; ++v) {
        if (in_core[v]) result.members.push_back(v);
    }
    return result;
}

/**
 * Fixed-g coreness: coreness[v] is the largest k with v in the (k,g)-core,
 * 0 when v has no g-frequent neighbour. Bucket-sorted peeling in O(n + m)
 * over the threshold graph.
 */
inline std::vector<std::size_t> coreness(const CoocGraph& graph) {
    const std::size_t n = graph.num_nodes();
    std::vector<std::size_t> degree(n);
    std::size_t max_degree = 0;
    for (NodeId v = 0; v < n; ++v) {
        degree[v] = graph.degree(v);
        max_degree = std::max(max_degree, degree[v]);
    }

    // bin_start[d]: first slot of degree-d nodes inside `order`
    std::vector<std::size_t> bin_start(max_degree + 2, 0);
    for (std::size_t d : degree) ++bin_start[d + 1];
    std::partial_sum(bin_start.begin(), bin_start.end(), bin_start.begin());
    std::vector<NodeId> order(n);
    std::vector<std::size_t> position(n);
    {
        std::vector<std::size_t> cursor(bin_start.begin(), bin_start.end() - 1);
        for (NodeId v = 0; v < n; ++v) {
            position[v] = cursor[degree[v]]++;
            order[position[v]] = v;
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        NodeId v = order[i];
        for (NodeId u : graph.neighbours(v)) {
            if (degree[u] <= degree[v]) continue;
            // swap u to the front of its bin, then shrink the bin by one
            std::size_t du = degree[u];
            std::size_t front = bin_start[du];
            NodeId w = order[front];
            if (w != u) {
                std::swap(order[front], order[position[u]]);
                std::swap(position[u], position[w]);
            }
            ++bin_start[du];
            --degree[u];
        }
    }
    return degree;
}

inline std::vector<std::size_t> g_coreness(const Hypergraph& graph, std::size_t g) {
    require_min_cooccurrence(g);
    return coreness(build_cooc_graph(graph, g));
}

/**
 * Splits core members into connected components of the threshold graph
 * restricted to the members. Components are sorted and ordered by their
 * smallest node.
 */
inline std::vector<std::vector<NodeId>> core_components(const CoocGraph& graph, std::span<const NodeId> members) {
    std::vector<bool> in_set(graph.num_nodes(), false);
    for (NodeId v : members) in_set[v] = true;
    std::vector<bool> visited(graph.num_nodes(), false);
    std::vector<NodeId> sorted(members.begin(), members.end());
    std::sort(sorted.begin(), sorted.end());

    std::vector<std::vector<NodeId>> components;
    std::vector<NodeId> stack;
    for (NodeId root : sorted) {
        if (visited[root]) continue;
        auto& comp = components.emplace_back();
        visited[root] = true;
        stack.push_back(root);
        while (!stack.empty()) {
            NodeId v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (NodeId u : graph.neighbours(v)) {
                if (in_set[u] && !visited[u]) {
                    visited[u] = true;
                    stack.push_back(u);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
    }
    return components;
}

struct DecompositionRow {
    std::size_t k = 0;
    std::size_t g = 0;
    std::size_t core_size = 0;
    double millis = 0.0;
    std::optional<std::vector<NodeId>> members;
};

struct DecompositionGrid {
    std::vector<DecompositionRow> rows;
};

struct DecompositionOptions {
    std::size_t threads = 1;  // distinct g values run on separate workers
    bool keep_members = false;
};

/**
 * One row per (k, g) pair, ordered by g_values then k_values as given. The
 * occurrence map is built once; each g is thresholded once and its graph is
 * dropped before the worker moves on. A row's `millis` is the threshold time
 * for its g plus the peel time for its k.
 */
inline DecompositionGrid kg_decomposition(const Hypergraph& graph, std::span<const std::size_t> k_values,
                                          std::span<const std::size_t> g_values,
                                          DecompositionOptions options = {}) {
    for (std::size_t k : k_values) {
        if (k < 1) throw std::invalid_argument("k must be >= 1");
    }
    for (std::size_t g : g_values) require_min_cooccurrence(g);

    DecompositionGrid grid;
    if (k_values.empty() || g_values.empty()) return grid;

    using clock = std::chrono::steady_clock;
    auto millis_since = [](clock::time_point start) {
        return std::chrono::duration<double, std::milli>(clock::now() - start).count();
    };

    const NeighbourOccurrenceMap nom = build_nom(graph, options.threads);
    grid.rows.resize(k_values.size() * g_values.size());

    auto run_g = [&](std::size_t gi) {
        auto start = clock::now();
        CoocGraph cooc = threshold_graph(nom, g_values[gi]);
        double threshold_ms = millis_since(start);
        for (std::size_t ki = 0; ki < k_values.size(); ++ki) {
            auto peel_start = clock::now();
            CoreResult core = peel_k_core(cooc, k_values[ki]);
            auto& row = grid.rows[gi * k_values.size() + ki];
            row.k = k_values[ki];
            row.g = g_values[gi];
            row.core_size = core.members.size();
            row.millis = threshold_ms + millis_since(peel_start);
            if (options.keep_members) row.members = std::move(core.members);
        }
    };

    std::size_t workers = std::max<std::size_t>(1, std::min(options.threads, g_values.size()));
    if (workers == 1) {
        for (std::size_t gi = 0; gi < g_values.size(); ++gi) run_g(gi);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t gi = w; gi < g_values.size(); gi += workers) run_g(gi);
            });
        }
    }
    return grid;
}

/**
 * Containment audit over a grid: a row whose k and g are both >= another
 * row's may not hold a larger core. When both rows carry members the subset
 * relation itself is checked. Returns one message per violation.
 */
inline std::vector<std::string> check_monotone(const DecompositionGrid& grid) {
    std::vector<std::string> violations;
    auto describe = [](const DecompositionRow& r) {
        return "(k=" + std::to_string(r.k) + ",g=" + std::to_string(r.g) + ")";
    };
    for (const auto& lo : grid.rows) {
        for (const auto& hi : grid.rows) {
            bool dominated = lo.k <= hi.k && lo.g <= hi.g && (lo.k != hi.k || lo.g != hi.g);
            if (!dominated) continue;
            if (hi.core_size > lo.core_size) {
                violations.push_back(describe(hi) + " larger than " + describe(lo));
            } else if (lo.members && hi.members &&
                       !std::includes(lo.members->begin(), lo.members->end(), hi.members->begin(),
                                      hi.members->end())) {
                violations.push_back(describe(hi) + " not contained in " + describe(lo));
            }
        }
    }
    return violations;
}

}  // namespace hypercore
