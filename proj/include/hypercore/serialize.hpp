// serialize.hpp - JSON and CSV envelopes for results, grids and benchmarks
#pragma once

#include <iomanip>
#include <ostream>
#include <span>
#include <vector>

#include <json.hpp>

#include "hypercore/baselines.hpp"
#include "hypercore/genbench.hpp"
#include "hypercore/hypergraph.hpp"
#include "hypercore/kgcore.hpp"

namespace hypercore {

inline nlohmann::json to_json(const HypergraphStats& s) {
    return {{"num_nodes", s.num_nodes},
            {"num_edges", s.num_edges},
            {"avg_neighbour_size", s.avg_neighbour_size},
            {"avg_edge_cardinality", s.avg_edge_cardinality}};
}

inline nlohmann::json member_labels(const Hypergraph& graph, std::span<const NodeId> members) {
    auto out = nlohmann::json::array();
    for (NodeId v : members) out.push_back(graph.label(v));
    return out;
}

// {k, g, size, members, rounds}; members carry the original labels.
inline nlohmann::json to_json(const CoreResult& result, const Hypergraph& graph) {
    return {{"k", result.params.k},
            {"g", result.params.g},
            {"size", result.members.size()},
            {"members", member_labels(graph, result.members)},
            {"rounds", result.rounds}};
}

inline nlohmann::json to_json(const BaselineResult& result, const BaselineParams& params, const Hypergraph& graph) {
    nlohmann::json out{{"model", std::string(to_string(result.model))}};
    switch (params.model) {
        case BaselineModel::kq:
            out["k"] = params.first;
            out["q"] = *params.second;
            break;
        case BaselineModel::kd:
            out["k"] = params.first;
            out["d"] = *params.second;
            break;
        case BaselineModel::alpha_beta:
            out["alpha"] = params.first;
            out["beta"] = *params.second;
            break;
        case BaselineModel::nbr_k:
        case BaselineModel::clique:
            out["k"] = params.first;
            break;
    }
    out["size"] = result.members.size();
    out["members"] = member_labels(graph, result.members);
    out["rounds"] = result.rounds;
    if (result.edges) out["num_edges"] = result.edges->size();
    return out;
}

inline void write_grid_csv(std::ostream& out, const DecompositionGrid& grid) {
    out << "k,g,size,millis\n";
    for (const auto& row : grid.rows) {
        out << row.k << ',' << row.g << ',' << row.core_size << ',' << std::fixed << std::setprecision(3)
            << row.millis << std::defaultfloat << '\n';
    }
}

inline void write_scalability_csv(std::ostream& out, std::span<const ScalabilityRow> rows) {
    out << "m,median_millis,core_size\n";
    for (const auto& row : rows) {
        out << row.num_edges << ',' << std::fixed << std::setprecision(3) << row.median_millis << std::defaultfloat
            << ',' << row.core_size << '\n';
    }
}

}  // namespace hypercore
