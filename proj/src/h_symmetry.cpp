#include "dcell/h_symmetry.hpp"

#include <algorithm>
#include <numeric>

#include "dcell/errors.hpp"
#include "dcell/serial.hpp"

namespace dcell {

HSpec::HSpec(int n, std::vector<std::vector<int>> position) : n_(n) {
    if (n < 2)
        throw ParamError("H needs n >= 2, got " + std::to_string(n));
    const int c = n + 1;
    if (position.size() != static_cast<std::size_t>(c))
        throw ParamError("wiring must have one row per copy");
    position_.assign(static_cast<std::size_t>(c * c), -1);
    partner_.assign(static_cast<std::size_t>(c * n), -1);
    for (int a = 0; a < c; ++a) {
        const auto& row = position[static_cast<std::size_t>(a)];
        if (row.size() != static_cast<std::size_t>(c))
            throw ParamError("wiring row " + std::to_string(a) + " must have n+1 entries");
        for (int b = 0; b < c; ++b) {
            if (b == a)
                continue;
            const int p = row[static_cast<std::size_t>(b)];
            if (p < 0 || p >= n)
                throw ParamError("wiring position out of range for copies " + std::to_string(a) + "," +
                                 std::to_string(b));
            int& slot = partner_[static_cast<std::size_t>(a * n + p)];
            if (slot != -1)
                throw ParamError("copy " + std::to_string(a) + " position " + std::to_string(p) +
                                 " carries two external edges");
            slot = b;
            position_[static_cast<std::size_t>(a * c + b)] = p;
        }
    }
}

HSpec HSpec::d1_wiring(int n) {
    if (n < 2)
        throw ParamError("H needs n >= 2, got " + std::to_string(n));
    std::vector<std::vector<int>> position(static_cast<std::size_t>(n + 1), std::vector<int>(n + 1, -1));
    for (int a = 0; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            position[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = b - 1;
            position[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = a;
        }
    return HSpec(n, std::move(position));
}

HSpec HSpec::random(int n, std::mt19937_64& rng) {
    if (n < 2)
        throw ParamError("H needs n >= 2, got " + std::to_string(n));
    std::vector<std::vector<int>> position(static_cast<std::size_t>(n + 1), std::vector<int>(n + 1, -1));
    for (int a = 0; a <= n; ++a) {
        std::vector<int> slots(static_cast<std::size_t>(n));
        std::iota(slots.begin(), slots.end(), 0);
        std::shuffle(slots.begin(), slots.end(), rng);
        std::size_t next = 0;
        for (int b = 0; b <= n; ++b)
            if (b != a)
                position[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = slots[next++];
    }
    return HSpec(n, std::move(position));
}

void HSpec::check_copy(int c) const {
    if (c < 0 || c > n_)
        throw ParamError("copy " + std::to_string(c) + " outside 0.." + std::to_string(n_));
}

void HSpec::check_vertex(HVertex v) const {
    check_copy(v.copy);
    if (v.position < 0 || v.position >= n_)
        throw ParamError("position " + std::to_string(v.position) + " outside 0.." + std::to_string(n_ - 1));
}

VertexId HSpec::id(HVertex v) const {
    check_vertex(v);
    return static_cast<VertexId>(v.copy * n_ + v.position);
}

HVertex HSpec::vertex(VertexId id) const {
    if (id >= vertex_count())
        throw ParamError("vertex id " + std::to_string(id) + " out of range");
    return {static_cast<int>(id) / n_, static_cast<int>(id) % n_};
}

std::pair<int, int> HSpec::wiring(int a, int b) const {
    check_copy(a);
    check_copy(b);
    if (a == b)
        throw ParamError("wiring needs two distinct copies");
    const int c = n_ + 1;
    return {position_[static_cast<std::size_t>(a * c + b)], position_[static_cast<std::size_t>(b * c + a)]};
}

Flag HSpec::flag_of(HVertex v) const {
    check_vertex(v);
    return {v.copy, partner_[static_cast<std::size_t>(v.copy * n_ + v.position)]};
}

HVertex HSpec::vertex_of(Flag f) const {
    check_copy(f.copy);
    check_copy(f.partner);
    if (f.copy == f.partner)
        throw ParamError("flag copy and partner must differ");
    return {f.copy, position_[static_cast<std::size_t>(f.copy * (n_ + 1) + f.partner)]};
}

HVertex HSpec::external_neighbor(HVertex v) const {
    const Flag f = flag_of(v);
    return vertex_of({f.partner, f.copy});
}

Graph HSpec::graph() const {
    std::vector<Edge> edges;
    for (int a = 0; a <= n_; ++a) {
        for (int p = 0; p < n_; ++p)
            for (int q = p + 1; q < n_; ++q)
                edges.push_back({id({a, p}), id({a, q}), 0});
        for (int b = a + 1; b <= n_; ++b) {
            auto [ja, jb] = wiring(a, b);
            edges.push_back({id({a, ja}), id({b, jb}), 1});
        }
    }
    return Graph::from_edges(vertex_count(), edges);
}

std::string_view to_string(Provenance p) {
    switch (p) {
    case Provenance::CopyPermutation:
        return "induced-by-copy-permutation";
    case Provenance::ExhaustiveSearch:
        return "exhaustive-search";
    case Provenance::External:
        return "external";
    case Provenance::LiteralCase:
        return "literal-case-map";
    }
    return "unknown";
}

std::string_view to_string(Verification v) {
    switch (v) {
    case Verification::Unchecked:
        return "unchecked";
    case Verification::Pass:
        return "pass";
    case Verification::Fail:
        return "fail";
    }
    return "unknown";
}

AutomorphismCheck is_automorphism(const Graph& graph, std::span<const VertexId> perm) {
    const std::size_t count = graph.vertex_count();
    if (perm.size() != count)
        throw ParamError("permutation has " + std::to_string(perm.size()) + " entries for a graph of " +
                         std::to_string(count) + " vertices");
    std::vector<char> hit(count, 0);
    for (VertexId image : perm) {
        if (image >= count || hit[image])
            return {false, std::nullopt, "not a bijection (image " + std::to_string(image) + ")"};
        hit[image] = 1;
    }
    for (VertexId x = 0; x < count; ++x)
        for (VertexId y : graph.neighbors(x))
            if (x < y && !graph.adjacent(perm[x], perm[y]))
                return {false, Edge{x, y, 0},
                        "edge " + std::to_string(x) + "-" + std::to_string(y) + " maps to non-edge " +
                            std::to_string(perm[x]) + "-" + std::to_string(perm[y])};
    // A bijection mapping E into E maps E onto E, hence non-edges onto non-edges.
    return {};
}

Automorphism induced_automorphism(const HSpec& spec, std::span<const int> sigma) {
    const int c = spec.copies();
    if (sigma.size() != static_cast<std::size_t>(c))
        throw ParamError("sigma must permute 0.." + std::to_string(c - 1));
    std::vector<char> hit(static_cast<std::size_t>(c), 0);
    for (int s : sigma) {
        if (s < 0 || s >= c || hit[static_cast<std::size_t>(s)])
            throw ParamError("sigma is not a bijection on the copies");
        hit[static_cast<std::size_t>(s)] = 1;
    }
    Automorphism out;
    out.provenance = Provenance::CopyPermutation;
    out.perm.resize(spec.vertex_count());
    for (VertexId v = 0; v < spec.vertex_count(); ++v) {
        const Flag f = spec.flag_of(spec.vertex(v));
        out.perm[v] = spec.id(spec.vertex_of({sigma[static_cast<std::size_t>(f.copy)],
                                              sigma[static_cast<std::size_t>(f.partner)]}));
    }
    out.verified = is_automorphism(spec.graph(), out.perm) ? Verification::Pass : Verification::Fail;
    return out;
}

std::vector<int> transitivity_sigma(const HSpec& spec, HVertex u, HVertex v) {
    const Flag fu = spec.flag_of(u);
    const Flag fv = spec.flag_of(v);
    const int c = spec.copies();
    std::vector<int> sigma(static_cast<std::size_t>(c), -1);
    std::vector<char> used(static_cast<std::size_t>(c), 0);
    sigma[static_cast<std::size_t>(fu.copy)] = fv.copy;
    sigma[static_cast<std::size_t>(fu.partner)] = fv.partner;
    used[static_cast<std::size_t>(fv.copy)] = used[static_cast<std::size_t>(fv.partner)] = 1;
    int target = 0;
    for (int s = 0; s < c; ++s) {
        if (sigma[static_cast<std::size_t>(s)] != -1)
            continue;
        while (used[static_cast<std::size_t>(target)])
            ++target;
        sigma[static_cast<std::size_t>(s)] = target;
        used[static_cast<std::size_t>(target)] = 1;
    }
    return sigma;
}

Automorphism transitivity_map(const HSpec& spec, HVertex u, HVertex v) {
    return induced_automorphism(spec, transitivity_sigma(spec, u, v));
}

std::string_view case_tag(PairCase c) {
    switch (c) {
    case PairCase::Adjacent:
        return "1.1";
    case PairCase::PartnerInTargetCopy:
        return "1.2.1";
    case PairCase::PartnersShareCopy:
        return "1.2.2";
    case PairCase::PartnersInDistinctCopies:
        return "1.2.3";
    case PairCase::SameCopy:
        return "2";
    }
    return "?";
}

PairCase classify_pair(const HSpec& spec, HVertex u, HVertex v) {
    if (u == v)
        throw ParamError("pair classification needs two distinct vertices");
    if (u.copy == v.copy)
        return PairCase::SameCopy;
    const Flag fu = spec.flag_of(u);
    const Flag fv = spec.flag_of(v);
    if (spec.external_neighbor(u) == v)
        return PairCase::Adjacent;
    // either external neighbor lying in the other vertex's copy (the two
    // orientations are symmetric)
    if (fu.partner == v.copy || fv.partner == u.copy)
        return PairCase::PartnerInTargetCopy;
    if (fu.partner == fv.partner)
        return PairCase::PartnersShareCopy;
    return PairCase::PartnersInDistinctCopies;
}

namespace {

// Swap copy `from` with copy `to` flag by flag: (from, j) <-> (to, j) for every
// third copy j, and (from, to) <-> (to, from). Everything else is fixed.
void swap_copies(const HSpec& spec, std::vector<VertexId>& perm, int from, int to, int skip_a, int skip_b) {
    for (int j = 0; j < spec.copies(); ++j) {
        if (j == from || j == to || j == skip_a || j == skip_b)
            continue;
        const VertexId x = spec.id(spec.vertex_of({from, j}));
        const VertexId y = spec.id(spec.vertex_of({to, j}));
        perm[x] = y;
        perm[y] = x;
    }
}

} // namespace

std::optional<Automorphism> literal_case_map(const HSpec& spec, HVertex u, HVertex v) {
    const PairCase c = classify_pair(spec, u, v);
    std::vector<VertexId> perm(spec.vertex_count());
    std::iota(perm.begin(), perm.end(), VertexId{0});
    if (c == PairCase::Adjacent) {
        // f(u) = v, and x -> y when both have their external neighbor in the same third copy
        perm[spec.id(u)] = spec.id(v);
        perm[spec.id(v)] = spec.id(u);
        swap_copies(spec, perm, u.copy, v.copy, -1, -1);
    } else if (c == PairCase::SameCopy) {
        // swap u and v, then swap the copies holding their external neighbors
        perm[spec.id(u)] = spec.id(v);
        perm[spec.id(v)] = spec.id(u);
        const HVertex u1 = spec.external_neighbor(u);
        const HVertex v1 = spec.external_neighbor(v);
        perm[spec.id(u1)] = spec.id(v1);
        perm[spec.id(v1)] = spec.id(u1);
        const HVertex x = spec.vertex_of({u1.copy, v1.copy});
        const HVertex y = spec.vertex_of({v1.copy, u1.copy});
        perm[spec.id(x)] = spec.id(y);
        perm[spec.id(y)] = spec.id(x);
        swap_copies(spec, perm, u1.copy, v1.copy, u.copy, -1);
    } else {
        return std::nullopt;
    }
    Automorphism out{std::move(perm), Provenance::LiteralCase, Verification::Unchecked};
    out.verified = is_automorphism(spec.graph(), out.perm) ? Verification::Pass : Verification::Fail;
    return out;
}

std::vector<CaseTally> audit_cases(const HSpec& spec) {
    std::vector<CaseTally> tally;
    for (PairCase c : kAllPairCases)
        tally.push_back({c});
    const Graph graph = spec.graph();
    for (VertexId a = 0; a < spec.vertex_count(); ++a)
        for (VertexId b = 0; b < spec.vertex_count(); ++b) {
            if (a == b)
                continue;
            const HVertex u = spec.vertex(a);
            const HVertex v = spec.vertex(b);
            auto& row = tally[static_cast<std::size_t>(classify_pair(spec, u, v))];
            ++row.pairs;
            if (auto literal = literal_case_map(spec, u, v)) {
                ++row.literal_defined;
                if (literal->verified == Verification::Pass && literal->perm[a] == b)
                    ++row.literal_verified;
            }
            const auto induced = transitivity_map(spec, u, v);
            if (induced.verified == Verification::Pass && induced.perm[a] == b)
                ++row.induced_verified;
        }
    return tally;
}

namespace {

std::vector<std::pair<VertexId, VertexId>> pairs_to_check(const HSpec& spec, std::optional<std::size_t> sample,
                                                          std::uint64_t seed, std::size_t& total) {
    const std::size_t count = spec.vertex_count();
    total = count * count;
    std::vector<std::pair<VertexId, VertexId>> pairs;
    if (sample && *sample < total) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(count - 1));
        pairs.reserve(*sample);
        for (std::size_t i = 0; i < *sample; ++i)
            pairs.emplace_back(pick(rng), pick(rng));
    } else {
        pairs.reserve(total);
        for (VertexId a = 0; a < count; ++a)
            for (VertexId b = 0; b < count; ++b)
                pairs.emplace_back(a, b);
    }
    return pairs;
}

// Verification here goes against a graph built once, not per map.
Automorphism checked_map(const HSpec& spec, const Graph& graph, HVertex u, HVertex v) {
    const auto sigma = transitivity_sigma(spec, u, v);
    Automorphism map;
    map.provenance = Provenance::CopyPermutation;
    map.perm.resize(spec.vertex_count());
    for (VertexId x = 0; x < spec.vertex_count(); ++x) {
        const Flag f = spec.flag_of(spec.vertex(x));
        map.perm[x] = spec.id(spec.vertex_of({sigma[static_cast<std::size_t>(f.copy)],
                                              sigma[static_cast<std::size_t>(f.partner)]}));
    }
    const bool ok = is_automorphism(graph, map.perm) && map.perm[spec.id(u)] == spec.id(v);
    map.verified = ok ? Verification::Pass : Verification::Fail;
    return map;
}

} // namespace

PairCertification certify_pairs(const HSpec& spec, std::optional<std::size_t> sample, std::uint64_t seed,
                                bool keep_certificates) {
    PairCertification out;
    const auto pairs = pairs_to_check(spec, sample, seed, out.pairs_total);
    out.sampled = pairs.size() < out.pairs_total;
    out.pairs_checked = pairs.size();
    const Graph graph = spec.graph();

    std::vector<Automorphism> maps(keep_certificates ? pairs.size() : 0);
    std::size_t verified = 0;
    const auto count = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : verified)
    for (std::int64_t i = 0; i < count; ++i) {
        const auto [a, b] = pairs[static_cast<std::size_t>(i)];
        auto map = checked_map(spec, graph, spec.vertex(a), spec.vertex(b));
        if (map.verified == Verification::Pass)
            ++verified;
        if (keep_certificates)
            maps[static_cast<std::size_t>(i)] = std::move(map);
    }
    out.pairs_verified = verified;
    if (keep_certificates)
        for (std::size_t i = 0; i < pairs.size(); ++i)
            out.certificates.push_back({spec.vertex(pairs[i].first), spec.vertex(pairs[i].second), std::move(maps[i])});
    return out;
}

namespace serial {

PairCertification certify_pairs(const HSpec& spec, std::optional<std::size_t> sample, std::uint64_t seed) {
    PairCertification out;
    const auto pairs = pairs_to_check(spec, sample, seed, out.pairs_total);
    out.sampled = pairs.size() < out.pairs_total;
    out.pairs_checked = pairs.size();
    for (const auto& [a, b] : pairs) {
        const HVertex u = spec.vertex(a);
        const HVertex v = spec.vertex(b);
        const auto map = transitivity_map(spec, u, v);
        if (map.verified == Verification::Pass && map.perm[a] == b)
            ++out.pairs_verified;
    }
    return out;
}

} // namespace serial

} // namespace dcell
