#include "dcell/topology.hpp"

#include <limits>

#include "dcell/serial.hpp"
#include "level_rule.hpp"

namespace dcell {

namespace {

std::uint64_t checked_size(const DCell& dcell, std::uint64_t budget) {
    const BigInt& t = dcell.vertex_count();
    const std::uint64_t hard_cap = std::numeric_limits<VertexId>::max();
    if (t > budget || t > hard_cap)
        throw BudgetError("D_{" + std::to_string(dcell.k()) + "," + std::to_string(dcell.n()) + "} has t = " +
                          t.str() + " vertices, exceeding the materialization budget of " +
                          std::to_string(std::min(budget, hard_cap)));
    return t.convert_to<std::uint64_t>();
}

} // namespace

Topology::Topology(Params params, Graph graph) : dcell_(params), graph_(std::move(graph)) {
    if (dcell_.vertex_count() != graph_.vertex_count())
        throw ParamError("graph has " + std::to_string(graph_.vertex_count()) + " vertices, D_{" +
                         std::to_string(params.k) + "," + std::to_string(params.n) + "} has " +
                         dcell_.vertex_count().str());
}

VertexLabel Topology::label(VertexId v) const { return dcell_.label_of_uid(BigInt(v)); }

VertexId Topology::index(const VertexLabel& label) const {
    return dcell_.uid(label, dcell_.k()).convert_to<VertexId>();
}

Topology build_graph(const Params& params, std::uint64_t budget) {
    const DCell dcell(params);
    const std::uint64_t t_k = checked_size(dcell, budget);
    const int n = params.n;
    const int k = params.k;
    const auto degree = static_cast<std::uint64_t>(dcell.degree());

    std::vector<std::uint64_t> t(static_cast<std::size_t>(k) + 1);
    for (int j = 0; j <= k; ++j)
        t[static_cast<std::size_t>(j)] = dcell.t(j).convert_to<std::uint64_t>();

    std::vector<std::uint64_t> offsets(t_k + 1);
    for (std::uint64_t v = 0; v <= t_k; ++v)
        offsets[v] = v * degree;
    std::vector<VertexId> targets(t_k * degree);
    std::vector<std::uint8_t> levels(t_k * degree);

    const auto count = static_cast<std::int64_t>(t_k);
#pragma omp parallel for schedule(static)
    for (std::int64_t sv = 0; sv < count; ++sv) {
        const auto v = static_cast<std::uint64_t>(sv);
        std::uint64_t slot = v * degree;
        const std::uint64_t a0 = v % static_cast<std::uint64_t>(n);
        for (std::uint64_t a = 0; a < static_cast<std::uint64_t>(n); ++a) {
            if (a == a0)
                continue;
            targets[slot] = static_cast<VertexId>(v - a0 + a);
            levels[slot++] = 0;
        }
        for (int j = 1; j <= k; ++j) {
            const std::uint64_t inner = t[static_cast<std::size_t>(j - 1)];
            const std::uint64_t m = v % inner;
            const std::uint64_t copy = (v / inner) % (inner + 1);
            const std::uint64_t base = v - copy * inner - m;
            const auto partner = detail::level_partner<std::uint64_t>(copy, m);
            targets[slot] = static_cast<VertexId>(base + partner.copy * inner + partner.uid);
            levels[slot++] = static_cast<std::uint8_t>(j);
        }
    }
    return Topology(params, Graph(std::move(offsets), std::move(targets), std::move(levels)));
}

namespace serial {

Topology build_graph(const Params& params, std::uint64_t budget) {
    const DCell dcell(params);
    const std::uint64_t t_k = checked_size(dcell, budget);
    std::vector<std::uint64_t> offsets{0};
    std::vector<VertexId> targets;
    std::vector<std::uint8_t> levels;
    for (std::uint64_t v = 0; v < t_k; ++v) {
        for (const auto& nb : dcell.neighbors(dcell.label_of_uid(BigInt(v)))) {
            targets.push_back(dcell.uid(nb.label, dcell.k()).convert_to<VertexId>());
            levels.push_back(static_cast<std::uint8_t>(nb.level));
        }
        offsets.push_back(targets.size());
    }
    return Topology(params, Graph(std::move(offsets), std::move(targets), std::move(levels)));
}

} // namespace serial

} // namespace dcell
