// oracle.hpp - brute-force (k,g)-core reference for toy instances
//
// Deliberately shares nothing with cooccur.hpp / kgcore.hpp: pair counts are
// recomputed by scanning the raw edge list.
#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "hypercore/hypergraph.hpp"
#include "hypercore/kgcore.hpp"

namespace hypercore::oracle {

inline constexpr std::size_t max_brute_force_nodes = 20;
inline constexpr std::size_t max_exhaustive_nodes = 12;

// Number of hyperedges containing both u and v, by a full scan.
inline std::size_t shared_edges(const Hypergraph& graph, NodeId u, NodeId v) {
    std::size_t count = 0;
    for (EdgeId e = 0; e < graph.num_edges(); ++e) {
        bool has_u = false;
        bool has_v = false;
        for (NodeId x : graph.edge(e)) {
            has_u = has_u || x == u;
            has_v = has_v || x == v;
        }
        if (has_u && has_v) ++count;
    }
    return count;
}

// True iff every v in `nodes` has >= k other members sharing >= g original hyperedges with it.
inline bool verify_feasible(const Hypergraph& graph, std::span<const NodeId> nodes, CoreParams params) {
    for (NodeId v : nodes) graph.check_node(v);
    for (NodeId v : nodes) {
        std::size_t strong = 0;
        for (NodeId u : nodes) {
            if (u != v && shared_edges(graph, u, v) >= params.g) ++strong;
        }
        if (strong < params.k) return false;
    }
    return true;
}

/**
 * Union of every feasible subset, by enumerating all 2^|V| subsets. Only for
 * |V| <= max_exhaustive_nodes.
 */
inline std::vector<NodeId> exhaustive_kg_core(const Hypergraph& graph, CoreParams params) {
    const std::size_t n = graph.num_nodes();
    if (n > max_exhaustive_nodes) throw std::invalid_argument("instance too large for exhaustive enumeration");
    std::vector<std::uint32_t> strong_mask(n, 0);
    for (NodeId v = 0; v < n; ++v) {
        for (NodeId u = 0; u < n; ++u) {
            if (u != v && shared_edges(graph, u, v) >= params.g) strong_mask[v] |= 1u << u;
        }
    }
    std::uint32_t united = 0;
    for (std::uint32_t subset = 1; subset < (1u << n); ++subset) {
        bool feasible = true;
        for (std::uint32_t rest = subset; rest != 0 && feasible; rest &= rest - 1) {
            auto v = static_cast<NodeId>(std::countr_zero(rest));
            feasible = static_cast<std::size_t>(std::popcount(strong_mask[v] & subset)) >= params.k;
        }
        if (feasible) united |= subset;
    }
    std::vector<NodeId> out;
    for (NodeId v = 0; v < n; ++v) {
        if (united & (1u << v)) out.push_back(v);
    }
    return out;
}

/**
 * Maximal feasible set by simultaneous deletion: start from V and remove all
 * currently violating nodes at once until none violate, recounting pairs from
 * the edge list every round. For |V| <= max_exhaustive_nodes the answer is
 * also compared against exhaustive_kg_core and a mismatch throws
 * std::logic_error.
 */
inline std::vector<NodeId> brute_force_kg_core(const Hypergraph& graph, CoreParams params) {
    params.validate();
    const std::size_t n = graph.num_nodes();
    if (n > max_brute_force_nodes) throw std::invalid_argument("instance too large for the brute-force oracle");

    std::vector<NodeId> current(n);
    for (NodeId v = 0; v < n; ++v) current[v] = v;
    while (true) {
        std::vector<NodeId> keep;
        for (NodeId v : current) {
            std::size_t strong = 0;
            for (NodeId u : current) {
                if (u != v && shared_edges(graph, u, v) >= params.g) ++strong;
            }
            if (strong >= params.k) keep.push_back(v);
        }
        if (keep.size() == current.size()) break;
        current = std::move(keep);
    }

    if (n <= max_exhaustive_nodes && exhaustive_kg_core(graph, params) != current) {
        throw std::logic_error("simultaneous-deletion fixpoint disagrees with exhaustive enumeration");
    }
    return current;
}

}  // namespace hypercore::oracle
