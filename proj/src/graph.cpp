#include "dcell/graph.hpp"

#include <algorithm>
#include <string>

#include "dcell/errors.hpp"

namespace dcell {

Graph::Graph(std::vector<std::uint64_t> offsets, std::vector<VertexId> targets, std::vector<std::uint8_t> levels)
    : offsets_(std::move(offsets)), targets_(std::move(targets)), levels_(std::move(levels)) {
    if (offsets_.empty() || offsets_.back() != targets_.size() || targets_.size() != levels_.size())
        throw ParamError("inconsistent CSR arrays");
    if (offsets_.front() != 0 || !std::is_sorted(offsets_.begin(), offsets_.end()))
        throw ParamError("CSR offsets must start at 0 and never decrease");
    const std::size_t count = offsets_.size() - 1;
    for (VertexId w : targets_)
        if (w >= count)
            throw ParamError("CSR target " + std::to_string(w) + " out of range");
}

Graph Graph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
    std::vector<std::uint64_t> degree(vertex_count + 1, 0);
    for (const auto& e : edges) {
        if (e.u >= vertex_count || e.v >= vertex_count)
            throw ParamError("edge endpoint out of range");
        if (e.u == e.v)
            throw ParamError("self-loop at vertex " + std::to_string(e.u));
        if (e.level < 0 || e.level > 255)
            throw ParamError("edge level out of range");
        ++degree[e.u + 1];
        ++degree[e.v + 1];
    }
    std::vector<std::uint64_t> offsets(vertex_count + 1, 0);
    for (std::size_t v = 0; v < vertex_count; ++v)
        offsets[v + 1] = offsets[v] + degree[v + 1];
    std::vector<VertexId> targets(offsets.back());
    std::vector<std::uint8_t> levels(offsets.back());
    std::vector<std::uint64_t> fill(offsets.begin(), offsets.end() - 1);
    for (const auto& e : edges) {
        targets[fill[e.u]] = e.v;
        levels[fill[e.u]++] = static_cast<std::uint8_t>(e.level);
        targets[fill[e.v]] = e.u;
        levels[fill[e.v]++] = static_cast<std::uint8_t>(e.level);
    }
    // sort each row by (level, target) and reject duplicates
    for (std::size_t v = 0; v < vertex_count; ++v) {
        std::vector<std::pair<std::uint8_t, VertexId>> row;
        for (auto i = offsets[v]; i < offsets[v + 1]; ++i)
            row.emplace_back(levels[i], targets[i]);
        std::sort(row.begin(), row.end());
        std::vector<VertexId> ids(targets.begin() + static_cast<std::ptrdiff_t>(offsets[v]),
                                  targets.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]));
        std::sort(ids.begin(), ids.end());
        if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
            throw ParamError("parallel edge at vertex " + std::to_string(v));
        for (std::size_t i = 0; i < row.size(); ++i) {
            levels[offsets[v] + i] = row[i].first;
            targets[offsets[v] + i] = row[i].second;
        }
    }
    return Graph(std::move(offsets), std::move(targets), std::move(levels));
}

bool Graph::adjacent(VertexId u, VertexId v) const {
    auto row = neighbors(u);
    return std::find(row.begin(), row.end(), v) != row.end();
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (VertexId u = 0; u < vertex_count(); ++u) {
        auto row = neighbors(u);
        auto lv = levels(u);
        for (std::size_t i = 0; i < row.size(); ++i)
            if (u < row[i])
                out.push_back({u, row[i], lv[i]});
    }
    return out;
}

bool same_edge_set(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    auto ea = a.edges();
    auto eb = b.edges();
    std::sort(ea.begin(), ea.end());
    std::sort(eb.begin(), eb.end());
    return ea == eb;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0)
        return true;
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == g.vertex_count();
}

Graph cycle_graph(std::size_t length) {
    if (length < 3)
        throw ParamError("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < length; ++i)
        edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % length), 0});
    return Graph::from_edges(length, edges);
}

Graph complete_graph(std::size_t order) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < order; ++i)
        for (std::size_t j = i + 1; j < order; ++j)
            edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j), 0});
    return Graph::from_edges(order, edges);
}

Graph complete_bipartite_graph(std::size_t left, std::size_t right) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < left; ++i)
        for (std::size_t j = 0; j < right; ++j)
            edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(left + j), 0});
    return Graph::from_edges(left + right, edges);
}

} // namespace dcell
