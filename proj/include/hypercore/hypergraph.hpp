// hypergraph.hpp - immutable hypergraph with CSR pin and incidence storage
#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <numeric>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hypercore {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

enum class InducedMode {
    weak,   // e -> e ∩ S, empty intersections dropped
    strong  // keep e only if e ⊆ S
};

struct HypergraphStats {
    std::size_t num_nodes = 0;
    std::size_t num_edges = 0;
    double avg_neighbour_size = 0.0;
    double avg_edge_cardinality = 0.0;
};

/**
 * Hypergraph over dense node ids 0..n-1.
 *
 * Hyperedges are stored canonically (sorted, duplicate-free) in a pin array;
 * identical hyperedges may appear several times and are distinct entries.
 * The incidence index lists, for each node, the ids of the edges containing
 * it in ascending order. Every node carries an external label; parsed graphs
 * use the original tokens, programmatic graphs default to the decimal id.
 */
class Hypergraph {
public:
    Hypergraph() = default;

    // Throws std::invalid_argument on an empty edge or a node id >= num_nodes.
    Hypergraph(std::size_t num_nodes, const std::vector<std::vector<NodeId>>& edges,
               std::vector<std::string> labels = {})
        : num_nodes_(num_nodes), labels_(std::move(labels)) {
        if (labels_.empty()) {
            labels_.reserve(num_nodes_);
            for (std::size_t v = 0; v < num_nodes_; ++v) labels_.push_back(std::to_string(v));
        } else if (labels_.size() != num_nodes_) {
            throw std::invalid_argument("label table size does not match node count");
        }

        edge_offsets_.reserve(edges.size() + 1);
        std::vector<NodeId> scratch;
        for (const auto& e : edges) {
            scratch.assign(e.begin(), e.end());
            std::sort(scratch.begin(), scratch.end());
            scratch.erase(std::unique(scratch.begin(), scratch.end()), scratch.end());
            if (scratch.empty()) throw std::invalid_argument("hyperedge has no members");
            if (scratch.back() >= num_nodes_) throw std::invalid_argument("hyperedge member out of range");
            pins_.insert(pins_.end(), scratch.begin(), scratch.end());
            edge_offsets_.push_back(pins_.size());
        }
        build_incidence();
    }

    std::size_t num_nodes() const { return num_nodes_; }
    std::size_t num_edges() const { return edge_offsets_.empty() ? 0 : edge_offsets_.size() - 1; }
    std::size_t num_pins() const { return pins_.size(); }

    std::span<const NodeId> edge(EdgeId e) const {
        if (e >= num_edges()) throw std::out_of_range("edge id out of range");
        return {pins_.data() + edge_offsets_[e], edge_offsets_[e + 1] - edge_offsets_[e]};
    }

    std::size_t cardinality(EdgeId e) const { return edge(e).size(); }

    std::span<const EdgeId> incident_edges(NodeId v) const {
        check_node(v);
        return {incidence_.data() + incidence_offsets_[v],
                incidence_offsets_[v + 1] - incidence_offsets_[v]};
    }

    // Number of hyperedges containing v; duplicate edges count separately.
    std::size_t degree(NodeId v) const { return incident_edges(v).size(); }

    // Distinct u != v sharing at least one hyperedge with v, ascending.
    std::vector<NodeId> neighbours(NodeId v) const {
        std::vector<NodeId> out;
        for (EdgeId e : incident_edges(v)) {
            for (NodeId u : edge(e)) {
                if (u != v) out.push_back(u);
            }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    const std::string& label(NodeId v) const {
        check_node(v);
        return labels_[v];
    }
    const std::vector<std::string>& labels() const { return labels_; }

    std::vector<std::vector<NodeId>> edge_list() const {
        std::vector<std::vector<NodeId>> out;
        out.reserve(num_edges());
        for (EdgeId e = 0; e < num_edges(); ++e) {
            auto members = edge(e);
            out.emplace_back(members.begin(), members.end());
        }
        return out;
    }

    void check_node(NodeId v) const {
        if (v >= num_nodes_) throw std::out_of_range("node id out of range");
    }

private:
    void build_incidence() {
        incidence_offsets_.assign(num_nodes_ + 1, 0);
        for (NodeId v : pins_) ++incidence_offsets_[v + 1];
        std::partial_sum(incidence_offsets_.begin(), incidence_offsets_.end(), incidence_offsets_.begin());
        incidence_.resize(pins_.size());
        std::vector<std::size_t> cursor(incidence_offsets_.begin(), incidence_offsets_.end() - 1);
        for (EdgeId e = 0; e + 1 < edge_offsets_.size(); ++e) {
            for (std::size_t i = edge_offsets_[e]; i < edge_offsets_[e + 1]; ++i) {
                incidence_[cursor[pins_[i]]++] = e;
            }
        }
    }

    std::size_t num_nodes_ = 0;
    std::vector<std::size_t> edge_offsets_{0};
    std::vector<NodeId> pins_;
    std::vector<std::size_t> incidence_offsets_{0};
    std::vector<EdgeId> incidence_;
    std::vector<std::string> labels_;
};

struct ParseOptions {
    // Drop repeated hyperedges (same member set), keeping the first occurrence.
    bool dedup_edges = false;
};

/**
 * Reads a hyperedge list: one hyperedge per line, node tokens separated by
 * commas and/or whitespace. Blank lines and lines starting with '#' are
 * skipped; repeated tokens within a line collapse. Labels receive dense ids
 * in order of first appearance.
 */
inline Hypergraph parse_hyperedge_list(std::istream& in, ParseOptions options = {}) {
    std::unordered_map<std::string, NodeId> ids;
    std::vector<std::string> labels;
    std::vector<std::vector<NodeId>> edges;
    std::string line;
    std::vector<NodeId> members;

    auto is_sep = [](char ch) {
        return ch == ',' || ch == ' ' || ch == '\t' || ch == '\r' || ch == '\f' || ch == '\v';
    };

    while (std::getline(in, line)) {
        std::string_view rest(line);
        auto first = rest.find_first_not_of(" \t\r\f\v");
        if (first == std::string_view::npos || rest[first] == '#') continue;

        members.clear();
        std::size_t i = 0;
        while (i < rest.size()) {
            while (i < rest.size() && is_sep(rest[i])) ++i;
            std::size_t start = i;
            while (i < rest.size() && !is_sep(rest[i])) ++i;
            if (i == start) continue;
            std::string token(rest.substr(start, i - start));
            auto [it, inserted] = ids.try_emplace(token, static_cast<NodeId>(labels.size()));
            if (inserted) labels.push_back(std::move(token));
            members.push_back(it->second);
        }
        if (members.empty()) continue;
        edges.push_back(members);
    }
    if (in.bad()) throw std::runtime_error("failed reading hyperedge list");

    if (options.dedup_edges) {
        std::vector<std::vector<NodeId>> unique_edges;
        for (auto& e : edges) {
            std::sort(e.begin(), e.end());
            e.erase(std::unique(e.begin(), e.end()), e.end());
        }
        std::vector<std::size_t> order(edges.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
        std::vector<bool> keep(edges.size(), false);
        for (std::size_t i = 0; i < order.size(); ++i) {
            keep[order[i]] = i == 0 || edges[order[i]] != edges[order[i - 1]];
        }
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (keep[i]) unique_edges.push_back(std::move(edges[i]));
        }
        edges = std::move(unique_edges);
    }

    std::size_t n = labels.size();
    return Hypergraph(n, edges, std::move(labels));
}

// Writes one hyperedge per line using node labels, space separated.
inline void write_hyperedge_list(std::ostream& out, const Hypergraph& graph) {
    for (EdgeId e = 0; e < graph.num_edges(); ++e) {
        bool first = true;
        for (NodeId v : graph.edge(e)) {
            if (!first) out << ' ';
            out << graph.label(v);
            first = false;
        }
        out << '\n';
    }
}

/**
 * Subhypergraph induced by `nodes`. The node universe and labels are kept so
 * ids stay comparable with the parent graph; only the edge list changes.
 */
inline Hypergraph induced_subhypergraph(const Hypergraph& graph, std::span<const NodeId> nodes,
                                        InducedMode mode) {
    std::vector<bool> in_set(graph.num_nodes(), false);
    for (NodeId v : nodes) {
        graph.check_node(v);
        in_set[v] = true;
    }
    std::vector<std::vector<NodeId>> edges;
    std::vector<NodeId> kept;
    for (EdgeId e = 0; e < graph.num_edges(); ++e) {
        kept.clear();
        auto members = graph.edge(e);
        for (NodeId v : members) {
            if (in_set[v]) kept.push_back(v);
        }
        if (kept.empty()) continue;
        if (mode == InducedMode::strong && kept.size() != members.size()) continue;
        edges.push_back(kept);
    }
    return Hypergraph(graph.num_nodes(), edges, graph.labels());
}

inline HypergraphStats stats(const Hypergraph& graph) {
    HypergraphStats s;
    s.num_nodes = graph.num_nodes();
    s.num_edges = graph.num_edges();
    if (s.num_edges > 0) {
        s.avg_edge_cardinality = static_cast<double>(graph.num_pins()) / static_cast<double>(s.num_edges);
    }
    if (s.num_nodes > 0) {
        // stamp[u] == v + 1 marks u as already counted for v
        std::vector<std::size_t> stamp(graph.num_nodes(), 0);
        std::size_t total = 0;
        for (NodeId v = 0; v < graph.num_nodes(); ++v) {
            for (EdgeId e : graph.incident_edges(v)) {
                for (NodeId u : graph.edge(e)) {
                    if (u != v && stamp[u] != v + 1) {
                        stamp[u] = v + 1;
                        ++total;
                    }
                }
            }
        }
        s.avg_neighbour_size = static_cast<double>(total) / static_cast<double>(s.num_nodes);
    }
    return s;
}

// Edge ids whose cardinality exceeds `cap`; these dominate co-occurrence cost.
inline std::vector<EdgeId> oversized_edges(const Hypergraph& graph, std::size_t cap) {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < graph.num_edges(); ++e) {
        if (graph.cardinality(e) > cap) out.push_back(e);
    }
    return out;
}

/**
 * Connected components of `nodes` where two members are linked when they
 * share a hyperedge of the weak- or strong-induced subhypergraph. Components
 * are sorted internally and ordered by their smallest member.
 */
inline std::vector<std::vector<NodeId>> connected_components(const Hypergraph& graph,
                                                             std::span<const NodeId> nodes,
                                                             InducedMode mode) {
    Hypergraph sub = induced_subhypergraph(graph, nodes, mode);
    std::vector<NodeId> parent(graph.num_nodes());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](NodeId x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (EdgeId e = 0; e < sub.num_edges(); ++e) {
        auto members = sub.edge(e);
        NodeId root = find(members.front());
        for (NodeId v : members.subspan(1)) {
            NodeId r = find(v);
            if (r == root) continue;
            if (r < root) std::swap(r, root);
            parent[r] = root;
        }
    }
    std::vector<NodeId> sorted(nodes.begin(), nodes.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::unordered_map<NodeId, std::size_t> slot;
    std::vector<std::vector<NodeId>> components;
    for (NodeId v : sorted) {
        auto [it, inserted] = slot.try_emplace(find(v), components.size());
        if (inserted) components.emplace_back();
        components[it->second].push_back(v);
    }
    return components;
}

}  // namespace hypercore
