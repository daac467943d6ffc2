#pragma once

// Vertex-transitivity verdicts for D_{k,n}.
//
// k = 0 is K_n. k = 1 is an instance of H and every ordered pair gets an
// explicit, re-verified automorphism. For k >= 2 two fixed vertices are shown
// to lie on different numbers of 6-cycles; any automorphism preserves that
// count, so no automorphism maps one onto the other.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dcell/core.hpp"
#include "dcell/graph.hpp"
#include "dcell/h_symmetry.hpp"
#include "dcell/topology.hpp"

namespace dcell {

enum class Decision { Transitive, NotTransitive };
std::string_view to_string(Decision d);

struct CertifiedPair {
    VertexLabel source;
    VertexLabel target;
    Automorphism map; // indexed by uid_k
};

struct Certificate {
    std::string kind; // "complete-graph" or "copy-permutation"
    std::size_t pairs_total = 0;
    std::size_t pairs_checked = 0;
    std::size_t pairs_verified = 0;
    bool sampled = false;
    std::vector<CertifiedPair> pairs;
    /// Verified automorphisms generating a group that is transitive on vertices.
    std::vector<Automorphism> generators;
};

struct Witness {
    std::string invariant = "6-cycle count";
    VertexLabel u;
    VertexLabel v;
    std::uint64_t count_u = 0;
    std::uint64_t count_v = 0;
    /// Counts of the same two vertices restricted to their level-1 subnetwork D_{1,n}.
    std::uint64_t level1_count_u = 0;
    std::uint64_t level1_count_v = 0;
};

struct Verdict {
    Params params;
    Decision decision = Decision::Transitive;
    std::optional<Certificate> certificate;
    std::optional<Witness> witness;
    std::string note;
};

struct DecideOptions {
    std::uint64_t budget = kDefaultBudget;
    /// Above this n, k = 1 verification uses a random sample of `pair_sample` pairs.
    int all_pairs_max_n = 8;
    std::size_t pair_sample = 2000;
    std::uint64_t seed = 0x5eed;
    /// Search-node limit for each witness count; nullopt means (n-1+k)^6.
    std::optional<std::uint64_t> step_limit;
};

/// Throws InconclusiveError when no sound verdict fits the budget.
Verdict decide(const Params& params, const DecideOptions& options = {});

/// The two witness labels used for k >= 2.
std::pair<VertexLabel, VertexLabel> witness_pair(const Params& params);

struct OrbitPartition {
    enum class Method { InvariantRefinement, ExhaustiveSearch };
    Method method = Method::InvariantRefinement;
    /// Members ascending; blocks ordered by smallest member.
    std::vector<std::vector<VertexId>> blocks;
    /// Exhaustive search only: verified automorphisms that merged orbits.
    std::vector<Automorphism> automorphisms;

    std::size_t block_of(VertexId v) const;
};

std::string_view to_string(OrbitPartition::Method m);

/// Groups vertices by their vector of cycle counts over `lengths`. Blocks are
/// unions of orbits; two or more blocks refute vertex-transitivity.
OrbitPartition invariant_partition(const Graph& graph, std::span<const int> lengths);

inline constexpr std::size_t kExhaustiveCap = 128;

/// Exact orbits of Aut(graph) by individualization-refinement backtracking.
/// Throws BudgetError above `cap` vertices.
OrbitPartition exhaustive_orbits(const Graph& graph, std::size_t cap = kExhaustiveCap);

/// Searches for an automorphism with perm[from] == to.
std::optional<Automorphism> find_automorphism(const Graph& graph, VertexId from, VertexId to);

struct Claim {
    std::string id;
    std::string location;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct ClaimReport {
    std::vector<Claim> claims; // ordered by id
    bool all_pass() const;
    std::vector<std::string> failing_ids() const;
};

ClaimReport paper_check();

} // namespace dcell
