// cooccur.hpp - neighbour occurrence counts and g-thresholded co-occurrence graphs
#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <span>
#include <stdexcept>
#include <thread>
#include <vector>

#include "hypercore/hypergraph.hpp"

namespace hypercore {

using Count = std::uint32_t;

namespace detail {

// Per-worker scratch for counting one node's co-members at a time.
struct RowAccumulator {
    explicit RowAccumulator(std::size_t n) : counts(n, 0) {}

    // Counts co-occurrences of v with every other node, then emits
    // (neighbour, count) for count >= min_count in ascending neighbour order.
    // Leaves `counts` zeroed on return.
    template <class Emit>
    void row(const Hypergraph& graph, NodeId v, Count min_count, Emit&& emit) {
        touched.clear();
        for (EdgeId e : graph.incident_edges(v)) {
            for (NodeId u : graph.edge(e)) {
                if (u == v) continue;
                if (counts[u]++ == 0) touched.push_back(u);
            }
        }
        const std::size_t n = counts.size();
        if (touched.size() * 16 >= n) {
            // dense row: an ordered scan beats sorting the touched list
            for (NodeId u = 0; u < n; ++u) {
                if (counts[u] == 0) continue;
                if (counts[u] >= min_count) emit(u, counts[u]);
                counts[u] = 0;
            }
        } else {
            std::sort(touched.begin(), touched.end());
            for (NodeId u : touched) {
                if (counts[u] >= min_count) emit(u, counts[u]);
                counts[u] = 0;
            }
        }
    }

    std::vector<Count> counts;
    std::vector<NodeId> touched;
};

// Splits [0, n) into `workers` contiguous blocks, runs `block(begin, end, out)`
// for each and returns the per-block outputs in block order.
template <class Out, class Block>
std::vector<Out> run_blocks(std::size_t n, std::size_t workers, Block&& block) {
    workers = std::max<std::size_t>(1, std::min(workers, n == 0 ? 1 : n));
    std::vector<Out> outs(workers);
    auto range = [&](std::size_t w) {
        return std::pair{n * w / workers, n * (w + 1) / workers};
    };
    if (workers == 1) {
        block(std::size_t{0}, n, outs[0]);
        return outs;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        auto [b, e] = range(w);
        pool.emplace_back([&, w, b, e] { block(b, e, outs[w]); });
    }
    pool.clear();
    return outs;
}

}  // namespace detail

/**
 * Exact pairwise co-occurrence counts: for every node v, the nodes u != v
 * that share a hyperedge with v together with the number of hyperedges
 * containing both. Rows are sorted by neighbour id. Counts come from the
 * original edge list and are never recomputed.
 */
class NeighbourOccurrenceMap {
public:
    NeighbourOccurrenceMap() = default;
    NeighbourOccurrenceMap(std::vector<std::size_t> offsets, std::vector<NodeId> neighbours,
                           std::vector<Count> counts)
        : offsets_(std::move(offsets)), neighbours_(std::move(neighbours)), counts_(std::move(counts)) {}

    std::size_t num_nodes() const { return offsets_.size() - 1; }
    // Number of ordered (v, u) entries, i.e. twice the number of neighbouring pairs.
    std::size_t num_entries() const { return neighbours_.size(); }

    std::span<const NodeId> neighbours(NodeId v) const {
        check(v);
        return {neighbours_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }
    std::span<const Count> counts(NodeId v) const {
        check(v);
        return {counts_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }

    // Co-occurrence count of the pair, 0 when they never share an edge.
    Count count(NodeId v, NodeId u) const {
        auto row = neighbours(v);
        auto it = std::lower_bound(row.begin(), row.end(), u);
        if (it == row.end() || *it != u) return 0;
        return counts_[offsets_[v] + static_cast<std::size_t>(it - row.begin())];
    }

    Count max_count() const {
        return counts_.empty() ? 0 : *std::max_element(counts_.begin(), counts_.end());
    }

private:
    void check(NodeId v) const {
        if (v >= num_nodes()) throw std::out_of_range("node id out of range");
    }

    std::vector<std::size_t> offsets_{0};
    std::vector<NodeId> neighbours_;
    std::vector<Count> counts_;
};

/**
 * Simple undirected graph on the hypergraph's node ids with an edge u-v iff
 * the pair co-occurs in at least g hyperedges. Adjacency rows are sorted.
 */
class CoocGraph {
public:
    CoocGraph() = default;
    CoocGraph(std::size_t g, std::vector<std::size_t> offsets, std::vector<NodeId> adjacency)
        : g_(g), offsets_(std::move(offsets)), adjacency_(std::move(adjacency)) {}

    std::size_t g() const { return g_; }
    std::size_t num_nodes() const { return offsets_.size() - 1; }
    std::size_t num_edges() const { return adjacency_.size() / 2; }

    std::span<const NodeId> neighbours(NodeId v) const {
        if (v >= num_nodes()) throw std::out_of_range("node id out of range");
        return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }
    std::size_t degree(NodeId v) const { return neighbours(v).size(); }

    bool has_edge(NodeId u, NodeId v) const {
        auto row = neighbours(u);
        return std::binary_search(row.begin(), row.end(), v);
    }

private:
    std::size_t g_ = 1;
    std::vector<std::size_t> offsets_{0};
    std::vector<NodeId> adjacency_;
};

inline void require_min_cooccurrence(std::size_t g) {
    if (g < 1) throw std::invalid_argument("co-occurrence threshold g must be >= 1");
}

inline NeighbourOccurrenceMap build_nom(const Hypergraph& graph, std::size_t threads = 1) {
    struct Block {
        std::vector<std::size_t> sizes;
        std::vector<NodeId> neighbours;
        std::vector<Count> counts;
    };
    const std::size_t n = graph.num_nodes();
    auto blocks = detail::run_blocks<Block>(n, threads, [&](std::size_t begin, std::size_t end, Block& out) {
        detail::RowAccumulator acc(n);
        for (std::size_t v = begin; v < end; ++v) {
            std::size_t before = out.neighbours.size();
            acc.row(graph, static_cast<NodeId>(v), 1, [&](NodeId u, Count c) {
                out.neighbours.push_back(u);
                out.counts.push_back(c);
            });
            out.sizes.push_back(out.neighbours.size() - before);
        }
    });

    std::vector<std::size_t> offsets{0};
    offsets.reserve(n + 1);
    std::vector<NodeId> neighbours;
    std::vector<Count> counts;
    for (auto& b : blocks) {
        for (std::size_t s : b.sizes) offsets.push_back(offsets.back() + s);
        neighbours.insert(neighbours.end(), b.neighbours.begin(), b.neighbours.end());
        counts.insert(counts.end(), b.counts.begin(), b.counts.end());
    }
    return {std::move(offsets), std::move(neighbours), std::move(counts)};
}

inline CoocGraph threshold_graph(const NeighbourOccurrenceMap& nom, std::size_t g) {
    require_min_cooccurrence(g);
    std::vector<std::size_t> offsets{0};
    offsets.reserve(nom.num_nodes() + 1);
    std::vector<NodeId> adjacency;
    for (NodeId v = 0; v < nom.num_nodes(); ++v) {
        auto nbrs = nom.neighbours(v);
        auto cnts = nom.counts(v);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            if (cnts[i] >= g) adjacency.push_back(nbrs[i]);
        }
        offsets.push_back(adjacency.size());
    }
    return {g, std::move(offsets), std::move(adjacency)};
}

/**
 * Same result as threshold_graph(build_nom(graph), g) without materialising
 * the full count map; pairs below g are discarded per row.
 */
inline CoocGraph build_cooc_graph(const Hypergraph& graph, std::size_t g, std::size_t threads = 1) {
    require_min_cooccurrence(g);
    struct Block {
        std::vector<std::size_t> sizes;
        std::vector<NodeId> adjacency;
    };
    const std::size_t n = graph.num_nodes();
    const Count min_count = static_cast<Count>(std::min<std::size_t>(g, UINT32_MAX));
    auto blocks = detail::run_blocks<Block>(n, threads, [&](std::size_t begin, std::size_t end, Block& out) {
        detail::RowAccumulator acc(n);
        for (std::size_t v = begin; v < end; ++v) {
            std::size_t before = out.adjacency.size();
            acc.row(graph, static_cast<NodeId>(v), min_count,
                    [&](NodeId u, Count) { out.adjacency.push_back(u); });
            out.sizes.push_back(out.adjacency.size() - before);
        }
    });
    if (blocks.size() == 1) {
        auto& b = blocks.front();
        std::vector<std::size_t> offsets{0};
        offsets.reserve(n + 1);
        for (std::size_t s : b.sizes) offsets.push_back(offsets.back() + s);
        return {g, std::move(offsets), std::move(b.adjacency)};
    }
    std::vector<std::size_t> offsets{0};
    offsets.reserve(n + 1);
    std::vector<NodeId> adjacency;
    for (auto& b : blocks) {
        for (std::size_t s : b.sizes) offsets.push_back(offsets.back() + s);
        adjacency.insert(adjacency.end(), b.adjacency.begin(), b.adjacency.end());
    }
    return {g, std::move(offsets), std::move(adjacency)};
}

// Debug dump: one `u,v,count` line per unordered pair (u < v), labels as written.
inline void write_nom_csv(std::ostream& out, const NeighbourOccurrenceMap& nom, const Hypergraph& graph) {
    out << "u,v,count\n";
    for (NodeId v = 0; v < nom.num_nodes(); ++v) {
        auto nbrs = nom.neighbours(v);
        auto cnts = nom.counts(v);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            if (nbrs[i] > v) out << graph.label(v) << ',' << graph.label(nbrs[i]) << ',' << cnts[i] << '\n';
        }
    }
}

}  // namespace hypercore
