#pragma once

// The graph H: n+1 disjoint copies K_n^0..K_n^n of the complete graph with exactly
// one edge between every pair of copies. D_{1,n} is the instance whose copy pair
// a < b is wired (a, b-1) -- (b, a).
//
// Each vertex has exactly one neighbor outside its own copy, so the pair
// (copy, copy of that neighbor) -- its flag -- names it uniquely. A permutation
// sigma of the copies acts on flags by (i, c) -> (sigma(i), sigma(c)); this maps
// copies onto copies and the unique edge between copies a, b onto the unique
// edge between sigma(a), sigma(b), so it is an automorphism for every wiring.

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dcell/graph.hpp"

namespace dcell {

struct HVertex {
    int copy = 0;
    int position = 0;

    friend bool operator==(const HVertex&, const HVertex&) = default;
    friend auto operator<=>(const HVertex&, const HVertex&) = default;
};

struct Flag {
    int copy = 0;
    int partner = 0;

    friend bool operator==(const Flag&, const Flag&) = default;
};

class HSpec {
public:
    /// position[a][b] (a != b) is the vertex of copy a carrying the a--b edge.
    /// Throws ParamError unless every row is a bijection onto {0..n-1}.
    HSpec(int n, std::vector<std::vector<int>> position);

    static HSpec d1_wiring(int n);
    /// Uniformly random valid wiring.
    static HSpec random(int n, std::mt19937_64& rng);

    int n() const { return n_; }
    int copies() const { return n_ + 1; }
    std::size_t vertex_count() const { return static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ + 1); }

    /// Dense id copy*n + position; for d1_wiring this equals uid_1 of the D_{1,n} label.
    VertexId id(HVertex v) const;
    HVertex vertex(VertexId id) const;

    /// (j_a, j_b) for the a--b edge.
    std::pair<int, int> wiring(int a, int b) const;

    Flag flag_of(HVertex v) const;
    HVertex vertex_of(Flag f) const;
    HVertex external_neighbor(HVertex v) const;

    /// Intra-copy edges carry level 0 and inter-copy edges level 1.
    Graph graph() const;

private:
    void check_vertex(HVertex v) const;
    void check_copy(int c) const;

    int n_;
    std::vector<int> position_; // (n+1) x (n+1), diagonal unused
    std::vector<int> partner_;  // (n+1) x n
};

enum class Provenance { CopyPermutation, ExhaustiveSearch, External, LiteralCase };
enum class Verification { Unchecked, Pass, Fail };

std::string_view to_string(Provenance p);
std::string_view to_string(Verification v);

struct Automorphism {
    std::vector<VertexId> perm;
    Provenance provenance = Provenance::External;
    Verification verified = Verification::Unchecked;

    VertexId operator()(VertexId v) const { return perm[v]; }
};

struct AutomorphismCheck {
    bool pass = true;
    /// First edge (in Graph::edges order) whose image is not an edge.
    std::optional<Edge> violation;
    std::string reason;

    explicit operator bool() const { return pass; }
};

/// Throws ParamError on a size mismatch.
AutomorphismCheck is_automorphism(const Graph& graph, std::span<const VertexId> perm);

/// Throws ParamError unless sigma is a permutation of {0..n}.
Automorphism induced_automorphism(const HSpec& spec, std::span<const int> sigma);

/// sigma with sigma(i_u) = i_v, sigma(c_u) = c_v; remaining copies are matched
/// in ascending order.
std::vector<int> transitivity_sigma(const HSpec& spec, HVertex u, HVertex v);
Automorphism transitivity_map(const HSpec& spec, HVertex u, HVertex v);

/// Case split used in the classical vertex-transitivity argument for H.
enum class PairCase { Adjacent, PartnerInTargetCopy, PartnersShareCopy, PartnersInDistinctCopies, SameCopy };

inline constexpr std::array<PairCase, 5> kAllPairCases{PairCase::Adjacent, PairCase::PartnerInTargetCopy,
                                                       PairCase::PartnersShareCopy,
                                                       PairCase::PartnersInDistinctCopies, PairCase::SameCopy};

/// "1.1", "1.2.1", "1.2.2", "1.2.3" or "2".
std::string_view case_tag(PairCase c);

/// Throws ParamError for u == v.
PairCase classify_pair(const HSpec& spec, HVertex u, HVertex v);

/// The copy-swap map written out for cases 1.1 and 2 (swap the two copies
/// position by position, fix everything else). Empty for the other cases.
std::optional<Automorphism> literal_case_map(const HSpec& spec, HVertex u, HVertex v);

struct CaseTally {
    PairCase pair_case = PairCase::Adjacent;
    std::size_t pairs = 0;
    std::size_t literal_defined = 0;
    std::size_t literal_verified = 0;
    std::size_t induced_verified = 0;
};

/// Over all ordered pairs u != v: how many fall in each case, and how many
/// are certified by the literal map and by transitivity_map.
std::vector<CaseTally> audit_cases(const HSpec& spec);

struct PairCertificate {
    HVertex source;
    HVertex target;
    Automorphism map;
};

struct PairCertification {
    std::size_t pairs_total = 0;
    std::size_t pairs_checked = 0;
    std::size_t pairs_verified = 0;
    bool sampled = false;
    std::vector<PairCertificate> certificates;

    bool all_verified() const { return pairs_checked == pairs_verified; }
};

/// Runs transitivity_map + is_automorphism on every ordered pair, or on
/// `sample` random pairs when given. Pairs are checked in parallel.
PairCertification certify_pairs(const HSpec& spec, std::optional<std::size_t> sample = std::nullopt,
                                std::uint64_t seed = 0x5eed, bool keep_certificates = false);

} // namespace dcell
