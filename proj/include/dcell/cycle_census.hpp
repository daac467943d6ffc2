#pragma once

// Simple cycles of a fixed length through a root vertex.
//
// The search walks simple paths root = p_0, p_1, ..., p_{L-1} and closes when
// p_{L-1} is adjacent to the root. Every cycle is met twice, once per direction,
// so the count is halved. The canonical witness of a cycle is the traversal with
// p_1 < p_{L-1}; chords are permitted unless `induced_only` is set.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dcell/core.hpp"
#include "dcell/errors.hpp"
#include "dcell/graph.hpp"
#include "dcell/topology.hpp"

namespace dcell {

inline constexpr int kMinCycleLength = 3;
inline constexpr int kMaxCycleLength = 10;

struct CycleQuery {
    int length = 6;
    bool collect = false;
    bool induced_only = false;
    /// Upper bound on search-tree nodes; BudgetError when exceeded.
    std::optional<std::uint64_t> step_limit{};
};

template <class Vertex>
struct CycleResult {
    std::uint64_t count = 0;
    std::vector<std::vector<Vertex>> witnesses; // canonical, sorted
    std::uint64_t steps = 0;
};

struct CycleCount {
    VertexLabel root;
    int length = 0;
    std::uint64_t count = 0;
};

template <class A>
concept AdjacencySource = requires(const A& a, const typename A::vertex_type& v) {
    { a.neighbors(v) };
    { a.adjacent(v, v) } -> std::convertible_to<bool>;
};

/// Materialized backend.
class GraphAdjacency {
public:
    using vertex_type = VertexId;
    explicit GraphAdjacency(const Graph& g) : graph_(&g) {}
    std::span<const VertexId> neighbors(VertexId v) const { return graph_->neighbors(v); }
    bool adjacent(VertexId a, VertexId b) const { return graph_->adjacent(a, b); }

private:
    const Graph* graph_;
};

/// Implicit backend: neighbors come from the label rule, nothing is materialized.
class LabelAdjacency {
public:
    using vertex_type = VertexLabel;
    explicit LabelAdjacency(const DCell& d) : dcell_(&d) {}
    std::vector<VertexLabel> neighbors(const VertexLabel& v) const {
        std::vector<VertexLabel> out;
        for (auto& nb : dcell_->neighbors(v))
            out.push_back(std::move(nb.label));
        return out;
    }
    bool adjacent(const VertexLabel& a, const VertexLabel& b) const { return dcell_->adjacent(a, b); }

private:
    const DCell* dcell_;
};

void check_cycle_length(int length);

namespace detail {

template <AdjacencySource A>
class RootedCycleSearch {
public:
    using V = typename A::vertex_type;

    RootedCycleSearch(const A& adj, const CycleQuery& query) : adj_(adj), query_(query) {}

    CycleResult<V> run(const V& root) {
        path_.assign(1, root);
        path_.reserve(static_cast<std::size_t>(query_.length));
        extend();
        result_.count = closed_ / 2;
        std::sort(result_.witnesses.begin(), result_.witnesses.end());
        return std::move(result_);
    }

private:
    void extend() {
        if (query_.step_limit && result_.steps >= *query_.step_limit)
            throw BudgetError("cycle search exceeded " + std::to_string(*query_.step_limit) + " steps");
        ++result_.steps;
        const auto next = adj_.neighbors(path_.back());
        const bool full = path_.size() == static_cast<std::size_t>(query_.length);
        for (const V& w : next) {
            if (full) {
                if (w == path_.front())
                    close();
                continue;
            }
            if (std::find(path_.begin(), path_.end(), w) != path_.end())
                continue;
            path_.push_back(w);
            extend();
            path_.pop_back();
        }
    }

    void close() {
        if (query_.induced_only && has_chord())
            return;
        ++closed_;
        if (query_.collect && path_[1] < path_.back())
            result_.witnesses.push_back(path_);
    }

    bool has_chord() const {
        const std::size_t len = path_.size();
        for (std::size_t i = 0; i < len; ++i)
            for (std::size_t j = i + 2; j < len; ++j)
                if (!(i == 0 && j == len - 1) && adj_.adjacent(path_[i], path_[j]))
                    return true;
        return false;
    }

    const A& adj_;
    const CycleQuery& query_;
    std::vector<V> path_;
    std::uint64_t closed_ = 0;
    CycleResult<V> result_;
};

} // namespace detail

template <AdjacencySource A>
CycleResult<typename A::vertex_type> count_cycles_through(const A& adj, const typename A::vertex_type& root,
                                                         const CycleQuery& query) {
    check_cycle_length(query.length);
    return detail::RootedCycleSearch<A>(adj, query).run(root);
}

CycleResult<VertexLabel> cycles_through(const DCell& dcell, const VertexLabel& root, const CycleQuery& query);
CycleResult<VertexId> cycles_through(const Graph& graph, VertexId root, const CycleQuery& query);
/// Materialized search reported in labels.
CycleResult<VertexLabel> cycles_through(const Topology& topology, const VertexLabel& root, const CycleQuery& query);

/// Per-vertex counts of simple cycles of the given length; roots run in parallel.
std::vector<std::uint64_t> cycle_census(const Graph& graph, int length, bool induced_only = false);
std::vector<CycleCount> six_cycle_census(const Topology& topology);
/// sum(counts) / length; throws if the sum is not divisible (handshake violated).
std::uint64_t total_cycles(std::span<const std::uint64_t> counts, int length);

struct CycleCheck {
    bool pass = true;
    std::string reason;

    explicit operator bool() const { return pass; }
};

/// A repeated closing label (last == first) is accepted and ignored.
CycleCheck verify_cycle(std::span<const VertexLabel> candidate, const Params& params);

struct ExtensionCandidate {
    VertexLabel neighbor; // root neighbor below the top level
    int neighbor_level = 0;
    VertexLabel partner;  // its top-level neighbor
    BigInt copy;          // top-level copy of `partner`
    VertexLabel bridge_near; // endpoint of the copy--partner-copy edge in the root's partner copy
    VertexLabel bridge_far;  // endpoint in `copy`
    int closing_length = 0;  // shortest cycle root, neighbor, partner, .., bridge, .., root partner
};

struct BlockedExtensionReport {
    VertexLabel root;
    VertexLabel root_partner;
    BigInt partner_copy;
    int target_length = 0;
    std::vector<ExtensionCandidate> candidates;
    /// Shortest cycle through the root using exactly three top-level edges, over every third copy.
    int min_closing_any_copy = 0;
    bool blocked = false; // no top-level cycle of target_length through the root
};

/// Witness roots only: (0,..,0,2,1) for n = 2 and (0,..,0,1,2) for n >= 3, with k >= 2.
BlockedExtensionReport blocked_extension_check(const VertexLabel& root, const Params& params, int length = 6,
                                               std::uint64_t budget = kDefaultBudget);

} // namespace dcell
