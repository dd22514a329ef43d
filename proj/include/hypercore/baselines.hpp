// baselines.hpp - comparison core models: (k,q), nbr-k, (k,d), clique and (alpha,beta)
//
// These are straightforward fixpoint loops meant for side-by-side studies,
// not tuned implementations. Each returns the full (possibly disconnected)
// fixpoint; use connected_components() to split it.
#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hypercore/hypergraph.hpp"

namespace hypercore {

enum class BaselineModel { kq, nbr_k, kd, clique, alpha_beta };

inline std::string_view to_string(BaselineModel model) {
    switch (model) {
        case BaselineModel::kq: return "kq";
        case BaselineModel::nbr_k: return "nbr_k";
        case BaselineModel::kd: return "kd";
        case BaselineModel::clique: return "clique";
        case BaselineModel::alpha_beta: return "alpha_beta";
    }
    return "unknown";
}

inline BaselineModel parse_baseline_model(std::string_view name) {
    for (auto m : {BaselineModel::kq, BaselineModel::nbr_k, BaselineModel::kd, BaselineModel::clique,
                   BaselineModel::alpha_beta}) {
        if (to_string(m) == name) return m;
    }
    throw std::invalid_argument("unknown baseline model: " + std::string(name));
}

// `first` is k (or alpha); `second` is q, d or beta and is required exactly for kq, kd and alpha_beta.
struct BaselineParams {
    BaselineModel model = BaselineModel::clique;
    std::size_t first = 1;
    std::optional<std::size_t> second;

    void validate() const {
        if (first < 1) throw std::invalid_argument("baseline parameters must be >= 1");
        bool needs_second =
            model == BaselineModel::kq || model == BaselineModel::kd || model == BaselineModel::alpha_beta;
        if (needs_second != second.has_value()) {
            throw std::invalid_argument(std::string(to_string(model)) +
                                        (needs_second ? " requires a second parameter" : " takes one parameter"));
        }
        if (second && *second < 1) throw std::invalid_argument("baseline parameters must be >= 1");
    }
};

struct BaselineResult {
    BaselineModel model = BaselineModel::clique;
    std::vector<NodeId> members;
    std::optional<std::vector<EdgeId>> edges;  // surviving hyperedges, for kq and alpha_beta
    std::size_t rounds = 0;
};

namespace detail {

inline void require_positive(std::size_t a, std::size_t b = 1) {
    if (a < 1 || b < 1) throw std::invalid_argument("baseline parameters must be >= 1");
}

inline std::vector<NodeId> collect(const std::vector<bool>& alive) {
    std::vector<NodeId> out;
    for (NodeId v = 0; v < alive.size(); ++v) {
        if (alive[v]) out.push_back(v);
    }
    return out;
}

/**
 * Shared fixpoint for nbr-k and (k,d): each sweep recounts, over the edges
 * whose members are all alive, every node's distinct neighbours and degree,
 * then deletes all nodes failing either bound at once.
 */
inline BaselineResult strong_neighbour_fixpoint(const Hypergraph& graph, std::size_t k, std::size_t d,
                                                BaselineModel model) {
    const std::size_t n = graph.num_nodes();
    std::vector<bool> alive(n, true);
    std::vector<std::size_t> stamp(n, 0);
    BaselineResult result;
    result.model = model;

    auto edge_alive = [&](EdgeId e) {
        for (NodeId v : graph.edge(e)) {
            if (!alive[v]) return false;
        }
        return true;
    };

    std::size_t sweep = 0;
    while (true) {
        ++sweep;
        std::vector<bool> live_edge(graph.num_edges());
        for (EdgeId e = 0; e < graph.num_edges(); ++e) live_edge[e] = edge_alive(e);

        std::vector<NodeId> doomed;
        for (NodeId v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            std::size_t degree = 0;
            std::size_t distinct = 0;
            for (EdgeId e : graph.incident_edges(v)) {
                if (!live_edge[e]) continue;
                ++degree;
                for (NodeId u : graph.edge(e)) {
                    if (u != v && stamp[u] != sweep * (n + 1) + v + 1) {
                        stamp[u] = sweep * (n + 1) + v + 1;
                        ++distinct;
                    }
                }
            }
            if (distinct < k || degree < d) doomed.push_back(v);
        }
        if (doomed.empty()) break;
        for (NodeId v : doomed) alive[v] = false;
        ++result.rounds;
    }
    result.members = collect(alive);
    return result;
}

}  // namespace detail

/**
 * (k,q)-core: nodes need degree >= k over surviving hyperedges and hyperedges
 * need >= q surviving members. Each sweep recounts both sides and removes all
 * violators, so cardinalities shrink as nodes leave.
 */
inline BaselineResult kq_core(const Hypergraph& graph, std::size_t k, std::size_t q) {
    detail::require_positive(k, q);
    const std::size_t n = graph.num_nodes();
    const std::size_t m = graph.num_edges();
    std::vector<bool> node_alive(n, true);
    std::vector<bool> edge_alive(m, true);
    BaselineResult result;
    result.model = BaselineModel::kq;

    while (true) {
        std::vector<std::size_t> degree(n, 0);
        std::vector<std::size_t> card(m, 0);
        for (EdgeId e = 0; e < m; ++e) {
            if (!edge_alive[e]) continue;
            for (NodeId v : graph.edge(e)) {
                if (!node_alive[v]) continue;
                ++degree[v];
                ++card[e];
            }
        }
        bool changed = false;
        for (NodeId v = 0; v < n; ++v) {
            if (node_alive[v] && degree[v] < k) {
                node_alive[v] = false;
                changed = true;
            }
        }
        for (EdgeId e = 0; e < m; ++e) {
            if (edge_alive[e] && card[e] < q) {
                edge_alive[e] = false;
                changed = true;
            }
        }
        if (!changed) break;
        ++result.rounds;
    }
    result.members = detail::collect(node_alive);
    std::vector<EdgeId> edges;
    for (EdgeId e = 0; e < m; ++e) {
        if (edge_alive[e]) edges.push_back(e);
    }
    result.edges = std::move(edges);
    return result;
}

// nbr-k-core: >= k distinct neighbours within the strongly induced subhypergraph of the survivors.
inline BaselineResult nbr_k_core(const Hypergraph& graph, std::size_t k) {
    detail::require_positive(k);
    return detail::strong_neighbour_fixpoint(graph, k, 0, BaselineModel::nbr_k);
}

// (k,d)-core: nbr-k plus degree >= d, both in the strongly induced subhypergraph.
inline BaselineResult kd_core(const Hypergraph& graph, std::size_t k, std::size_t d) {
    detail::require_positive(k, d);
    return detail::strong_neighbour_fixpoint(graph, k, d, BaselineModel::kd);
}

/**
 * k-core of the clique expansion (u-v adjacent iff they share any
 * hyperedge). Builds the expansion from Hypergraph::neighbours and peels by
 * simultaneous sweeps.
 */
inline BaselineResult clique_core(const Hypergraph& graph, std::size_t k) {
    detail::require_positive(k);
    const std::size_t n = graph.num_nodes();
    std::vector<std::vector<NodeId>> adjacency(n);
    for (NodeId v = 0; v < n; ++v) adjacency[v] = graph.neighbours(v);

    std::vector<bool> alive(n, true);
    BaselineResult result;
    result.model = BaselineModel::clique;
    while (true) {
        std::vector<NodeId> doomed;
        for (NodeId v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            auto live = std::count_if(adjacency[v].begin(), adjacency[v].end(), [&](NodeId u) { return alive[u]; });
            if (static_cast<std::size_t>(live) < k) doomed.push_back(v);
        }
        if (doomed.empty()) break;
        for (NodeId v : doomed) alive[v] = false;
        ++result.rounds;
    }
    result.members = detail::collect(alive);
    return result;
}

/**
 * (alpha,beta)-core of the node/hyperedge incidence bipartite graph: node
 * vertices need >= alpha live incident edge vertices, edge vertices >= beta
 * live member vertices. Queue peeling over the explicit bipartite graph;
 * `rounds` counts cascade waves.
 */
inline BaselineResult alpha_beta_core(const Hypergraph& graph, std::size_t alpha, std::size_t beta) {
    detail::require_positive(alpha, beta);
    const std::size_t n = graph.num_nodes();
    const std::size_t m = graph.num_edges();

    // vertices [0, n) are nodes, [n, n + m) are hyperedges
    std::vector<std::vector<std::size_t>> bipartite(n + m);
    for (EdgeId e = 0; e < m; ++e) {
        for (NodeId v : graph.edge(e)) {
            bipartite[v].push_back(n + e);
            bipartite[n + e].push_back(v);
        }
    }
    auto bound = [&](std::size_t x) { return x < n ? alpha : beta; };

    std::vector<std::size_t> degree(n + m);
    std::vector<bool> alive(n + m, true);
    std::vector<std::size_t> wave;
    for (std::size_t x = 0; x < n + m; ++x) {
        degree[x] = bipartite[x].size();
        if (degree[x] < bound(x)) {
            alive[x] = false;
            wave.push_back(x);
        }
    }

    BaselineResult result;
    result.model = BaselineModel::alpha_beta;
    while (!wave.empty()) {
        ++result.rounds;
        std::vector<std::size_t> next;
        for (std::size_t x : wave) {
            for (std::size_t y : bipartite[x]) {
                if (alive[y] && --degree[y] < bound(y)) {
                    alive[y] = false;
                    next.push_back(y);
                }
            }
        }
        wave = std::move(next);
    }

    std::vector<EdgeId> edges;
    for (NodeId v = 0; v < n; ++v) {
        if (alive[v]) result.members.push_back(v);
    }
    for (EdgeId e = 0; e < m; ++e) {
        if (alive[n + e]) edges.push_back(e);
    }
    result.edges = std::move(edges);
    return result;
}

inline BaselineResult run_baseline(const Hypergraph& graph, const BaselineParams& params) {
    params.validate();
    switch (params.model) {
        case BaselineModel::kq: return kq_core(graph, params.first, *params.second);
        case BaselineModel::nbr_k: return nbr_k_core(graph, params.first);
        case BaselineModel::kd: return kd_core(graph, params.first, *params.second);
        case BaselineModel::clique: return clique_core(graph, params.first);
        case BaselineModel::alpha_beta: return alpha_beta_core(graph, params.first, *params.second);
    }
    throw std::invalid_argument("unknown baseline model");
}

}  // namespace hypercore
