#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace dcell {

using VertexId = std::uint32_t;

struct Edge {
    VertexId u = 0;
    VertexId v = 0;
    int level = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph in CSR form; every edge carries a level tag.
class Graph {
public:
    Graph() = default;
    Graph(std::vector<std::uint64_t> offsets, std::vector<VertexId> targets, std::vector<std::uint8_t> levels);

    /// Rejects loops, parallel edges and out-of-range endpoints.
    static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges);

    std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const { return targets_.size() / 2; }

    std::span<const VertexId> neighbors(VertexId v) const {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }
    std::span<const std::uint8_t> levels(VertexId v) const {
        return {levels_.data() + offsets_[v], levels_.data() + offsets_[v + 1]};
    }
    std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
    bool adjacent(VertexId u, VertexId v) const;

    /// Each edge once with u < v, ordered by (u, position in u's adjacency).
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::uint64_t> offsets_;
    std::vector<VertexId> targets_;
    std::vector<std::uint8_t> levels_;
};

/// Same vertex count and the same set of (unordered edge, level) triples.
bool same_edge_set(const Graph& a, const Graph& b);

bool is_connected(const Graph& g);

// Small reference graphs used by tests and claim checks.
Graph cycle_graph(std::size_t length);
Graph complete_graph(std::size_t order);
Graph complete_bipartite_graph(std::size_t left, std::size_t right);

} // namespace dcell
