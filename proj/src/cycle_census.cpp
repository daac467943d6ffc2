#include "dcell/cycle_census.hpp"

#include <deque>
#include <limits>

#include "dcell/serial.hpp"

namespace dcell {

void check_cycle_length(int length) {
    if (length < kMinCycleLength || length > kMaxCycleLength)
        throw ParamError("cycle length " + std::to_string(length) + " outside " + std::to_string(kMinCycleLength) +
                         ".." + std::to_string(kMaxCycleLength));
}

CycleResult<VertexLabel> cycles_through(const DCell& dcell, const VertexLabel& root, const CycleQuery& query) {
    dcell.require_valid(root);
    return count_cycles_through(LabelAdjacency(dcell), root, query);
}

CycleResult<VertexId> cycles_through(const Graph& graph, VertexId root, const CycleQuery& query) {
    if (root >= graph.vertex_count())
        throw ParamError("root " + std::to_string(root) + " out of range");
    return count_cycles_through(GraphAdjacency(graph), root, query);
}

CycleResult<VertexLabel> cycles_through(const Topology& topology, const VertexLabel& root, const CycleQuery& query) {
    const auto found = cycles_through(topology.graph(), topology.index(root), query);
    CycleResult<VertexLabel> out{found.count, {}, found.steps};
    // uid order is label order, so canonical form and sorting carry over
    for (const auto& cycle : found.witnesses) {
        std::vector<VertexLabel> labels;
        for (VertexId v : cycle)
            labels.push_back(topology.label(v));
        out.witnesses.push_back(std::move(labels));
    }
    return out;
}

std::vector<std::uint64_t> cycle_census(const Graph& graph, int length, bool induced_only) {
    check_cycle_length(length);
    const CycleQuery query{length, false, induced_only, std::nullopt};
    const GraphAdjacency adj(graph);
    std::vector<std::uint64_t> counts(graph.vertex_count());
    const auto total = static_cast<std::int64_t>(graph.vertex_count());
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t v = 0; v < total; ++v)
        counts[static_cast<std::size_t>(v)] = count_cycles_through(adj, static_cast<VertexId>(v), query).count;
    return counts;
}

std::vector<CycleCount> six_cycle_census(const Topology& topology) {
    const auto counts = cycle_census(topology.graph(), 6);
    std::vector<CycleCount> out;
    out.reserve(counts.size());
    for (VertexId v = 0; v < counts.size(); ++v)
        out.push_back({topology.label(v), 6, counts[v]});
    return out;
}

std::uint64_t total_cycles(std::span<const std::uint64_t> counts, int length) {
    check_cycle_length(length);
    std::uint64_t sum = 0;
    for (auto c : counts)
        sum += c;
    if (sum % static_cast<std::uint64_t>(length) != 0)
        throw std::logic_error("per-vertex cycle counts sum to " + std::to_string(sum) + ", not a multiple of " +
                               std::to_string(length));
    return sum / static_cast<std::uint64_t>(length);
}

CycleCheck verify_cycle(std::span<const VertexLabel> candidate, const Params& params) {
    const DCell dcell(params);
    std::vector<VertexLabel> cycle(candidate.begin(), candidate.end());
    if (cycle.size() > 1 && cycle.front() == cycle.back())
        cycle.pop_back();
    if (cycle.size() < 3)
        return {false, "too short: a cycle needs at least 3 vertices"};
    for (const auto& label : cycle)
        if (auto report = dcell.validate(label); !report)
            return {false, "invalid label " + label.to_string() + ": " + report.reason};
    for (std::size_t i = 0; i < cycle.size(); ++i)
        for (std::size_t j = i + 1; j < cycle.size(); ++j)
            if (cycle[i] == cycle[j])
                return {false, "not simple: " + cycle[i].to_string() + " repeats"};
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const auto& a = cycle[i];
        const auto& b = cycle[(i + 1) % cycle.size()];
        if (!dcell.adjacent(a, b))
            return {false, "not adjacent: " + a.to_string() + " and " + b.to_string()};
    }
    return {};
}

namespace {

std::vector<int> bfs_distances(const Graph& graph, VertexId source) {
    std::vector<int> dist(graph.vertex_count(), -1);
    std::deque<VertexId> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop_front();
        for (VertexId w : graph.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

VertexLabel witness_root(const Params& params) {
    VertexLabel root = VertexLabel::zeros(params.k);
    if (params.n == 2) {
        root.digit(1) = 2;
        root.digit(0) = 1;
    } else {
        root.digit(1) = 1;
        root.digit(0) = 2;
    }
    return root;
}

} // namespace

BlockedExtensionReport blocked_extension_check(const VertexLabel& root, const Params& params, int length,
                                               std::uint64_t budget) {
    check_cycle_length(length);
    const DCell dcell(params);
    if (params.k < 2)
        throw ParamError("top-level extension check needs k >= 2");
    dcell.require_valid(root);
    if (root != witness_root(params))
        throw ParamError("root " + root.to_string() + " is not a witness vertex; expected " +
                         witness_root(params).to_string());

    const int k = params.k;
    // every top-level copy is a D_{k-1,n}; distances inside a copy depend only on uid_{k-1}
    const Topology inner = build_graph({params.n, k - 1}, budget);
    auto inner_id = [&](const VertexLabel& label) {
        return dcell.uid(label, k - 1).convert_to<VertexId>();
    };

    BlockedExtensionReport report;
    report.root = root;
    report.target_length = length;
    report.root_partner = dcell.level_neighbor(root, k);
    report.partner_copy = report.root_partner.digit(k);
    const BigInt& far_copy = report.partner_copy;
    const auto from_partner = bfs_distances(inner.graph(), inner_id(report.root_partner));

    auto bridge = [&](const BigInt& copy) {
        // (endpoint in the root's partner copy, endpoint in `copy`)
        if (copy < far_copy) {
            auto [in_copy, in_far] = dcell.edge_between_copies(k, copy, far_copy);
            return std::pair{in_far, in_copy};
        }
        return dcell.edge_between_copies(k, far_copy, copy);
    };

    for (const auto& nb : dcell.neighbors(root)) {
        if (nb.level == k)
            continue;
        ExtensionCandidate c;
        c.neighbor = nb.label;
        c.neighbor_level = nb.level;
        c.partner = dcell.level_neighbor(nb.label, k);
        c.copy = c.partner.digit(k);
        std::tie(c.bridge_near, c.bridge_far) = bridge(c.copy);
        const auto from_entry = bfs_distances(inner.graph(), inner_id(c.partner));
        c.closing_length = 4 + from_entry[inner_id(c.bridge_far)] + from_partner[inner_id(c.bridge_near)];
        report.candidates.push_back(std::move(c));
    }

    // A cycle leaving copy 0 crosses exactly three top-level copies; each copy it
    // enters contributes at least one internal edge because every vertex has a
    // single top-level edge. Scan every third copy l.
    const auto from_root = bfs_distances(inner.graph(), inner_id(root));
    const auto from_zero = bfs_distances(inner.graph(), 0);
    int best = std::numeric_limits<int>::max();
    const BigInt copies = dcell.t(k - 1) + 1;
    for (BigInt l = 1; l < copies; ++l) {
        if (l == far_copy)
            continue;
        const auto [home, entry] = dcell.edge_between_copies(k, 0, l);
        const auto [near, far] = bridge(l);
        if (inner_id(entry) != 0)
            throw std::logic_error("copy-0 edge does not enter copy " + l.str() + " at uid 0");
        const int len = from_root[inner_id(home)] + 1 + from_zero[inner_id(far)] + 1 +
                        from_partner[inner_id(near)] + 1;
        best = std::min(best, len);
    }
    report.min_closing_any_copy = best;
    report.blocked = best > length;
    for (const auto& c : report.candidates)
        report.blocked = report.blocked && c.closing_length > length;
    return report;
}

namespace serial {

std::vector<std::uint64_t> cycle_census(const Graph& graph, int length, bool induced_only) {
    check_cycle_length(length);
    const CycleQuery query{length, false, induced_only, std::nullopt};
    std::vector<std::uint64_t> counts(graph.vertex_count());
    for (VertexId v = 0; v < graph.vertex_count(); ++v)
        counts[v] = cycles_through(graph, v, query).count;
    return counts;
}

} // namespace serial

} // namespace dcell
