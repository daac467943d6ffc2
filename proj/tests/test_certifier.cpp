#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "dcell/certifier.hpp"
#include "dcell/cycle_census.hpp"
#include "oracles.hpp"

using namespace dcell;

namespace {

// every invariant block is a union of exhaustive orbits
bool refines(const OrbitPartition& coarse, const OrbitPartition& fine) {
    for (const auto& block : fine.blocks)
        for (VertexId v : block)
            if (coarse.block_of(v) != coarse.block_of(block.front()))
                return false;
    return true;
}

std::size_t orbit_count_by_brute_force(const Graph& g) {
    const auto all = oracle::all_automorphisms(g);
    std::set<std::set<VertexId>> orbits;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        std::set<VertexId> orbit;
        for (const auto& p : all)
            orbit.insert(p[v]);
        orbits.insert(orbit);
    }
    return orbits.size();
}

} // namespace

TEST_CASE("decide for k <= 1") {
    SUBCASE("K_5") {
        const auto verdict = decide({5, 0});
        CHECK(verdict.decision == Decision::Transitive);
        REQUIRE(verdict.certificate);
        CHECK(verdict.certificate->pairs_total == 25);
        CHECK(verdict.certificate->pairs_verified == 25);
        const auto g = complete_graph(5);
        for (const auto& m : verdict.certificate->generators) {
            CHECK(m.verified == Verification::Pass);
            CHECK(is_automorphism(g, m.perm).pass);
        }
    }
    SUBCASE("D_{1,4}: 144 verified pair certificates") {
        const auto verdict = decide({4, 1});
        CHECK(verdict.decision == Decision::Transitive);
        REQUIRE(verdict.certificate);
        const auto& cert = *verdict.certificate;
        CHECK(cert.pairs_total == 400);
        CHECK(cert.pairs_verified == 400);
        CHECK_FALSE(cert.sampled);
        // 144 = 12^2: ordered pairs among the first 12 ids are listed
        CHECK(cert.pairs.size() >= 144);
        const auto g = build_graph({4, 1}).graph();
        const auto topo = build_graph({4, 1});
        for (const auto& pair : cert.pairs) {
            CHECK(pair.map.verified == Verification::Pass);
            CHECK(is_automorphism(g, pair.map.perm).pass);
            CHECK(pair.map(topo.index(pair.source)) == topo.index(pair.target));
        }
    }
    SUBCASE("sampling above the all-pairs limit is recorded") {
        const auto verdict = decide({9, 1});
        REQUIRE(verdict.certificate);
        CHECK(verdict.certificate->sampled);
        CHECK(verdict.certificate->pairs_checked == 2000);
        CHECK(verdict.certificate->pairs_verified == 2000);
    }
}

TEST_CASE("decide for k >= 2") {
    SUBCASE("D_{2,2}") {
        const auto verdict = decide({2, 2});
        CHECK(verdict.decision == Decision::NotTransitive);
        REQUIRE(verdict.witness);
        CHECK(verdict.witness->u == VertexLabel{0, 2, 1});
        CHECK(verdict.witness->v == VertexLabel{3, 1, 1});
        CHECK(verdict.witness->count_u == 1);
        CHECK(verdict.witness->count_v >= 2);
        CHECK(verdict.witness->invariant == "6-cycle count");
    }
    SUBCASE("D_{2,3}") {
        const auto verdict = decide({3, 2});
        REQUIRE(verdict.witness);
        CHECK(verdict.witness->u == VertexLabel{0, 0, 0});
        CHECK(verdict.witness->v == VertexLabel{0, 1, 2});
        CHECK(verdict.witness->count_u > verdict.witness->count_v);
        CHECK(verdict.witness->level1_count_v == verdict.witness->count_v);
        CHECK(verdict.witness->count_u > verdict.witness->level1_count_u);
    }
    SUBCASE("refutations are recomputed and sound") {
        for (int k = 2; k <= 3; ++k)
            for (int n = 2; n <= 4; ++n) {
                const auto verdict = decide({n, k});
                REQUIRE(verdict.witness);
                const DCell d({n, k});
                const auto cu = cycles_through(d, verdict.witness->u, {.length = 6}).count;
                const auto cv = cycles_through(d, verdict.witness->v, {.length = 6}).count;
                CHECK(cu == verdict.witness->count_u);
                CHECK(cv == verdict.witness->count_v);
                CHECK(cu != cv);
            }
    }
    SUBCASE("a tiny step limit is inconclusive, never a guess") {
        CHECK_THROWS_AS(decide({3, 2}, {.step_limit = 5}), InconclusiveError);
    }
}

TEST_CASE("decision is Transitive exactly for k <= 1") {
    for (int k = 0; k <= 3; ++k)
        for (int n = 2; n <= 4; ++n) {
            CAPTURE(k);
            CAPTURE(n);
            CHECK((decide({n, k}).decision == Decision::Transitive) == (k <= 1));
        }
}

TEST_CASE("orbits") {
    SUBCASE("K_4 and C_6") {
        CHECK(exhaustive_orbits(complete_graph(4)).blocks.size() == 1);
        const std::vector<int> six{6};
        CHECK(invariant_partition(cycle_graph(6), six).blocks.size() == 1);
    }
    SUBCASE("brute force agreement on small graphs") {
        const std::vector<Edge> tailed{{0, 1, 0}, {1, 2, 0}, {2, 3, 0}, {3, 0, 0}, {0, 4, 0}, {4, 5, 0}, {2, 6, 0}};
        for (const auto& g : std::vector<Graph>{cycle_graph(6), complete_bipartite_graph(2, 3),
                                                build_graph({2, 1}).graph(), Graph::from_edges(7, tailed)}) {
            const auto orbits = exhaustive_orbits(g);
            CHECK(orbits.blocks.size() == orbit_count_by_brute_force(g));
            for (const auto& m : orbits.automorphisms)
                CHECK(is_automorphism(g, m.perm).pass);
        }
    }
    SUBCASE("D_{1,n} is one orbit, and invariants agree") {
        const std::vector<int> lengths{3, 4, 5, 6};
        for (int n = 2; n <= 4; ++n) {
            const auto g = build_graph({n, 1}).graph();
            const auto exact = exhaustive_orbits(g);
            const auto coarse = invariant_partition(g, lengths);
            CHECK(exact.blocks.size() == 1);
            CHECK(coarse.blocks.size() == 1);
            CHECK(refines(coarse, exact));
        }
    }
    SUBCASE("D_{2,2}") {
        const auto topo = build_graph({2, 2});
        const auto exact = exhaustive_orbits(topo.graph());
        const std::vector<int> six{6};
        const auto coarse = invariant_partition(topo.graph(), six);
        MESSAGE("D_{2,2}: " << exact.blocks.size() << " orbits, " << coarse.blocks.size() << " invariant blocks");
        CHECK(exact.blocks.size() >= 2);
        // an outside VF2 matcher finds exactly two automorphisms, hence 21 orbits
        CHECK(exact.blocks.size() == 21);
        CHECK(coarse.blocks.size() == 3);
        CHECK(refines(coarse, exact));
        CHECK(exact.block_of(topo.index({0, 2, 0})) != exact.block_of(topo.index({3, 1, 1})));
        CHECK(coarse.block_of(topo.index({0, 2, 0})) != coarse.block_of(topo.index({3, 1, 1})));
        for (const auto& m : exact.automorphisms)
            CHECK(is_automorphism(topo.graph(), m.perm).pass);
        // vertices in one exact orbit really are mapped onto each other
        for (const auto& block : exact.blocks)
            for (VertexId v : block) {
                const auto m = find_automorphism(topo.graph(), block.front(), v);
                REQUIRE(m);
                CHECK((*m)(block.front()) == v);
            }
        CHECK_FALSE(find_automorphism(topo.graph(), topo.index({0, 2, 0}), topo.index({3, 1, 1})));
    }
    SUBCASE("size cap") {
        CHECK_THROWS_AS(exhaustive_orbits(build_graph({2, 3}).graph()), BudgetError);
        CHECK_THROWS_AS(exhaustive_orbits(cycle_graph(10), 8), BudgetError);
    }
}

TEST_CASE("paper_check") {
    const auto report = paper_check();
    CHECK(report.claims.size() >= 12);
    for (const auto& c : report.claims) {
        CAPTURE(c.id);
        CAPTURE(c.expected);
        CAPTURE(c.computed);
        CHECK(c.pass);
    }
    CHECK(report.all_pass());
    CHECK(std::is_sorted(report.claims.begin(), report.claims.end(),
                         [](const Claim& a, const Claim& b) { return a.id < b.id; }));
    auto find = [&](const std::string& id) {
        return std::find_if(report.claims.begin(), report.claims.end(), [&](const Claim& c) { return c.id == id; });
    };
    REQUIRE(find("D12_IS_C6") != report.claims.end());
    CHECK(find("D12_IS_C6")->expected == "cycle of length 6");
    CHECK(find("D22_NOT_VT") != report.claims.end());
}
