#include "dcell/certifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "dcell/cycle_census.hpp"

namespace dcell {

std::string_view to_string(Decision d) { return d == Decision::Transitive ? "Transitive" : "NotTransitive"; }

std::string_view to_string(OrbitPartition::Method m) {
    return m == OrbitPartition::Method::InvariantRefinement ? "invariant-refinement" : "exhaustive-search";
}

std::size_t OrbitPartition::block_of(VertexId v) const {
    for (std::size_t i = 0; i < blocks.size(); ++i)
        if (std::binary_search(blocks[i].begin(), blocks[i].end(), v))
            return i;
    throw ParamError("vertex " + std::to_string(v) + " not in partition");
}

namespace {

std::vector<std::vector<VertexId>> blocks_from_keys(const std::vector<std::size_t>& key) {
    std::map<std::size_t, std::vector<VertexId>> groups;
    for (VertexId v = 0; v < key.size(); ++v)
        groups[key[v]].push_back(v);
    std::vector<std::vector<VertexId>> blocks;
    for (auto& [_, members] : groups)
        blocks.push_back(std::move(members));
    std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return blocks;
}

} // namespace

OrbitPartition invariant_partition(const Graph& graph, std::span<const int> lengths) {
    std::vector<std::vector<std::uint64_t>> signature(graph.vertex_count());
    for (int length : lengths) {
        const auto counts = cycle_census(graph, length);
        for (VertexId v = 0; v < counts.size(); ++v)
            signature[v].push_back(counts[v]);
    }
    std::map<std::vector<std::uint64_t>, std::size_t> ids;
    std::vector<std::size_t> key(graph.vertex_count());
    for (VertexId v = 0; v < key.size(); ++v)
        key[v] = ids.emplace(signature[v], ids.size()).first->second;
    return {OrbitPartition::Method::InvariantRefinement, blocks_from_keys(key), {}};
}

namespace {

// Colorings of two copies of the same graph refined together. A vertex's new
// color is the rank of (old color, sorted neighbor colors) among the signatures
// of both sides, so equal colors mean equal refinement histories.
class PairRefiner {
public:
    explicit PairRefiner(const Graph& g) : graph_(g) {}

    bool refine(std::vector<int>& left, std::vector<int>& right) const {
        std::size_t classes = count_classes(left, right);
        while (true) {
            auto sig_left = signatures(left);
            auto sig_right = signatures(right);
            std::map<std::vector<int>, int> rank;
            for (const auto& s : sig_left)
                rank.emplace(s, 0);
            for (const auto& s : sig_right)
                rank.emplace(s, 0);
            int next = 0;
            for (auto& [_, id] : rank)
                id = next++;
            std::vector<int> counts(static_cast<std::size_t>(next), 0);
            for (std::size_t v = 0; v < left.size(); ++v) {
                left[v] = rank[sig_left[v]];
                ++counts[static_cast<std::size_t>(left[v])];
            }
            for (std::size_t v = 0; v < right.size(); ++v) {
                right[v] = rank[sig_right[v]];
                --counts[static_cast<std::size_t>(right[v])];
            }
            if (std::any_of(counts.begin(), counts.end(), [](int c) { return c != 0; }))
                return false;
            const std::size_t refined = static_cast<std::size_t>(next);
            if (refined == classes)
                return true;
            classes = refined;
        }
    }

private:
    std::vector<std::vector<int>> signatures(const std::vector<int>& color) const {
        std::vector<std::vector<int>> out(color.size());
        for (VertexId v = 0; v < color.size(); ++v) {
            auto& s = out[v];
            s.push_back(color[v]);
            for (VertexId w : graph_.neighbors(v))
                s.push_back(color[w]);
            std::sort(s.begin() + 1, s.end());
        }
        return out;
    }

    static std::size_t count_classes(const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> all(a);
        all.insert(all.end(), b.begin(), b.end());
        std::sort(all.begin(), all.end());
        return static_cast<std::size_t>(std::unique(all.begin(), all.end()) - all.begin());
    }

    const Graph& graph_;
};

class AutomorphismSearch {
public:
    explicit AutomorphismSearch(const Graph& g) : graph_(g), refiner_(g) {}

    std::optional<std::vector<VertexId>> run(VertexId from, VertexId to) {
        std::vector<int> left(graph_.vertex_count(), 0);
        std::vector<int> right(graph_.vertex_count(), 0);
        left[from] = 1;
        right[to] = 1;
        return search(std::move(left), std::move(right));
    }

private:
    std::optional<std::vector<VertexId>> search(std::vector<int> left, std::vector<int> right) {
        if (!refiner_.refine(left, right))
            return std::nullopt;
        const std::size_t count = left.size();
        std::vector<int> size(count + 1, 0);
        for (int c : left)
            ++size[static_cast<std::size_t>(c)];
        int target = -1;
        for (std::size_t c = 0; c < size.size(); ++c)
            if (size[c] > 1 && (target < 0 || size[c] < size[static_cast<std::size_t>(target)]))
                target = static_cast<int>(c);
        if (target < 0) {
            std::vector<VertexId> by_color(count);
            for (VertexId v = 0; v < count; ++v)
                by_color[static_cast<std::size_t>(right[v])] = v;
            std::vector<VertexId> perm(count);
            for (VertexId v = 0; v < count; ++v)
                perm[v] = by_color[static_cast<std::size_t>(left[v])];
            if (is_automorphism(graph_, perm))
                return perm;
            return std::nullopt;
        }
        const int fresh = static_cast<int>(count);
        const auto pivot = static_cast<VertexId>(std::find(left.begin(), left.end(), target) - left.begin());
        for (VertexId candidate = 0; candidate < count; ++candidate) {
            if (right[candidate] != target)
                continue;
            auto l = left;
            auto r = right;
            l[pivot] = fresh;
            r[candidate] = fresh;
            if (auto found = search(std::move(l), std::move(r)))
                return found;
        }
        return std::nullopt;
    }

    const Graph& graph_;
    PairRefiner refiner_;
};

VertexId find_root(std::vector<VertexId>& parent, VertexId v) {
    while (parent[v] != v)
        v = parent[v] = parent[parent[v]];
    return v;
}

} // namespace

std::optional<Automorphism> find_automorphism(const Graph& graph, VertexId from, VertexId to) {
    if (from >= graph.vertex_count() || to >= graph.vertex_count())
        throw ParamError("vertex out of range");
    auto perm = AutomorphismSearch(graph).run(from, to);
    if (!perm)
        return std::nullopt;
    return Automorphism{std::move(*perm), Provenance::ExhaustiveSearch, Verification::Pass};
}

OrbitPartition exhaustive_orbits(const Graph& graph, std::size_t cap) {
    const std::size_t count = graph.vertex_count();
    if (count > cap)
        throw BudgetError("exhaustive orbit search refused: " + std::to_string(count) + " vertices exceed the cap of " +
                          std::to_string(cap));
    std::vector<VertexId> parent(count);
    std::iota(parent.begin(), parent.end(), VertexId{0});
    OrbitPartition out;
    out.method = OrbitPartition::Method::ExhaustiveSearch;
    AutomorphismSearch search(graph);
    for (VertexId v = 0; v < count; ++v) {
        if (find_root(parent, v) != v)
            continue;
        // classes already shown unreachable from v (classes are subsets of orbits)
        std::vector<VertexId> unreachable;
        for (VertexId w = v + 1; w < count; ++w) {
            const VertexId rw = find_root(parent, w);
            if (rw == find_root(parent, v) ||
                std::find(unreachable.begin(), unreachable.end(), rw) != unreachable.end())
                continue;
            auto perm = search.run(v, w);
            if (!perm) {
                unreachable.push_back(rw);
                continue;
            }
            for (VertexId x = 0; x < count; ++x) {
                const VertexId a = find_root(parent, x);
                const VertexId b = find_root(parent, (*perm)[x]);
                if (a != b)
                    parent[std::max(a, b)] = std::min(a, b);
            }
            out.automorphisms.push_back({std::move(*perm), Provenance::ExhaustiveSearch, Verification::Pass});
        }
    }
    std::vector<std::size_t> key(count);
    for (VertexId v = 0; v < count; ++v)
        key[v] = find_root(parent, v);
    out.blocks = blocks_from_keys(key);
    return out;
}

std::pair<VertexLabel, VertexLabel> witness_pair(const Params& params) {
    check_params(params);
    if (params.k < 2)
        throw ParamError("witness vertices exist for k >= 2 only");
    VertexLabel u = VertexLabel::zeros(params.k);
    VertexLabel v = VertexLabel::zeros(params.k);
    if (params.n == 2) {
        u.digit(1) = 2;
        u.digit(0) = 1;
        v.digit(2) = 3;
        v.digit(1) = 1;
        v.digit(0) = 1;
    } else {
        v.digit(1) = 1;
        v.digit(0) = 2;
    }
    return {u, v};
}

namespace {

std::uint64_t default_step_limit(const Params& params) {
    const double degree = params.n - 1 + params.k;
    const double limit = std::pow(degree, 6.0);
    return limit > 4e9 ? std::uint64_t{4'000'000'000} : static_cast<std::uint64_t>(limit) + 64;
}

std::vector<VertexId> transposition(std::size_t count, VertexId a, VertexId b) {
    std::vector<VertexId> perm(count);
    std::iota(perm.begin(), perm.end(), VertexId{0});
    std::swap(perm[a], perm[b]);
    return perm;
}

Verdict decide_complete(const Params& params, const DecideOptions& options) {
    const Topology topology = build_graph(params, options.budget);
    const auto count = static_cast<VertexId>(topology.vertex_count());
    Certificate cert;
    cert.kind = "complete-graph";
    cert.pairs_total = cert.pairs_checked = static_cast<std::size_t>(count) * count;
    for (VertexId a = 0; a < count; ++a)
        for (VertexId b = 0; b < count; ++b) {
            Automorphism map{transposition(count, a, b), Provenance::CopyPermutation, Verification::Unchecked};
            map.verified = is_automorphism(topology.graph(), map.perm) && map.perm[a] == b ? Verification::Pass
                                                                                           : Verification::Fail;
            if (map.verified == Verification::Pass)
                ++cert.pairs_verified;
            cert.pairs.push_back({topology.label(a), topology.label(b), std::move(map)});
        }
    for (VertexId a = 0; a + 1 < count; ++a) {
        Automorphism gen{transposition(count, a, a + 1), Provenance::CopyPermutation, Verification::Unchecked};
        gen.verified = is_automorphism(topology.graph(), gen.perm) ? Verification::Pass : Verification::Fail;
        cert.generators.push_back(std::move(gen));
    }
    return {params, Decision::Transitive, std::move(cert), std::nullopt, "K_n: every transposition is an automorphism"};
}

Verdict decide_level_one(const Params& params, const DecideOptions& options) {
    const Topology topology = build_graph(params, options.budget);
    const HSpec spec = HSpec::d1_wiring(params.n);
    if (!same_edge_set(spec.graph(), topology.graph()))
        throw std::logic_error("D_{1,n} differs from the H wiring it should instantiate");
    std::optional<std::size_t> sample;
    if (params.n > options.all_pairs_max_n)
        sample = options.pair_sample;
    auto checked = certify_pairs(spec, sample, options.seed, true);

    Certificate cert;
    cert.kind = "copy-permutation";
    cert.pairs_total = checked.pairs_total;
    cert.pairs_checked = checked.pairs_checked;
    cert.pairs_verified = checked.pairs_verified;
    cert.sampled = checked.sampled;
    for (auto& c : checked.certificates)
        cert.pairs.push_back({topology.label(spec.id(c.source)), topology.label(spec.id(c.target)), std::move(c.map)});
    for (int a = 0; a < params.n; ++a) {
        std::vector<int> sigma(static_cast<std::size_t>(params.n + 1));
        std::iota(sigma.begin(), sigma.end(), 0);
        std::swap(sigma[static_cast<std::size_t>(a)], sigma[static_cast<std::size_t>(a + 1)]);
        cert.generators.push_back(induced_automorphism(spec, sigma));
    }
    std::string note = "every ordered pair certified by a copy-permutation automorphism";
    if (cert.sampled)
        note = "all-pairs check truncated to " + std::to_string(cert.pairs_checked) + " random pairs of " +
               std::to_string(cert.pairs_total) + "; adjacent copy transpositions generate a flag-transitive group";
    return {params, Decision::Transitive, std::move(cert), std::nullopt, std::move(note)};
}

Verdict decide_refutation(const Params& params, const DecideOptions& options) {
    const DCell dcell(params);
    const DCell level1({params.n, 1});
    const auto [u, v] = witness_pair(params);
    CycleQuery query{6, false, false, options.step_limit ? options.step_limit : default_step_limit(params)};

    Witness w;
    w.u = u;
    w.v = v;
    w.count_u = cycles_through(dcell, u, query).count;
    w.count_v = cycles_through(dcell, v, query).count;
    auto tail = [](const VertexLabel& x) { return VertexLabel{std::vector<BigInt>(x.coords().end() - 2, x.coords().end())}; };
    w.level1_count_u = cycles_through(level1, tail(u), query).count;
    w.level1_count_v = cycles_through(level1, tail(v), query).count;
    if (w.count_u == w.count_v)
        throw InconclusiveError("witness vertices " + u.to_string() + " and " + v.to_string() +
                                " have equal 6-cycle counts (" + std::to_string(w.count_u) + ")");
    return {params, Decision::NotTransitive, std::nullopt, std::move(w),
            "6-cycle counts differ; level-1 counts are cycles inside the vertex's own D_{1,n}"};
}

} // namespace

Verdict decide(const Params& params, const DecideOptions& options) {
    check_params(params);
    Verdict verdict;
    try {
        if (params.k == 0)
            verdict = decide_complete(params, options);
        else if (params.k == 1)
            verdict = decide_level_one(params, options);
        else
            return decide_refutation(params, options);
    } catch (const BudgetError& e) {
        throw InconclusiveError(std::string("no verdict within budget: ") + e.what());
    }
    const auto& cert = *verdict.certificate;
    const bool ok = cert.pairs_checked == cert.pairs_verified &&
                    std::all_of(cert.generators.begin(), cert.generators.end(),
                                [](const auto& g) { return g.verified == Verification::Pass; });
    if (!ok)
        throw InconclusiveError("certificate verification failed for " + std::to_string(cert.pairs_checked -
                                                                                          cert.pairs_verified) +
                                " pairs");
    return verdict;
}

} // namespace dcell
