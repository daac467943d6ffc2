#pragma once

#include <cstdint>

#include "dcell/core.hpp"
#include "dcell/graph.hpp"

namespace dcell {

inline constexpr std::uint64_t kDefaultBudget = 5'000'000;

/// Materialized D_{k,n}: vertex v is the label with uid_k = v. Each adjacency
/// row lists level-0 neighbors by ascending a_0, then levels 1..k, which is the
/// order of DCell::neighbors.
class Topology {
public:
    Topology(Params params, Graph graph);

    const Params& params() const { return dcell_.params(); }
    const DCell& dcell() const { return dcell_; }
    const Graph& graph() const { return graph_; }
    std::size_t vertex_count() const { return graph_.vertex_count(); }

    VertexLabel label(VertexId v) const;
    /// Validates the label; throws ValidationError.
    VertexId index(const VertexLabel& label) const;

    friend bool operator==(const Topology& a, const Topology& b) {
        return a.params() == b.params() && a.graph_ == b.graph_;
    }

private:
    DCell dcell_;
    Graph graph_;
};

/// Throws BudgetError naming t_{k,n} when t_{k,n} > budget; never returns a partial graph.
/// Rows are filled in parallel from the integer form of the level rule.
Topology build_graph(const Params& params, std::uint64_t budget = kDefaultBudget);

} // namespace dcell
