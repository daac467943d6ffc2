#pragma once

// DCell D_{k,n}: label arithmetic and the implicit adjacency oracle.
//
// A vertex of D_{k,n} is a coordinate sequence (a_k, ..., a_1, a_0), stored and
// printed most-significant first. a_0 ranges over {0..n-1}; for j >= 1, a_j is
// a copy index in {0..t_{j-1,n}} because level j glues t_{j-1,n}+1 copies of
// D_{j-1,n}. The suffix (a_j, ..., a_0) has the mixed-radix value
//   uid_j = a_0 + sum_{l=1..j} a_l * t_{l-1,n}
// and copies a < b of level j are joined by one edge between uid_{j-1} = b-1 in
// copy a and uid_{j-1} = a in copy b.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dcell/errors.hpp"

namespace dcell {

using BigInt = boost::multiprecision::cpp_int;

struct Params {
    int n = 2;
    int k = 0;

    friend bool operator==(const Params&, const Params&) = default;
};

/// Throws ParamError unless n >= 2 and k >= 0.
void check_params(const Params& params);

/// t_{k,n}: t_0 = n, t_k = t_{k-1} (t_{k-1} + 1). Exact at any k.
BigInt vertex_count(int k, int n);

class VertexLabel {
public:
    VertexLabel() = default;
    /// Coordinates most-significant first: (a_k, ..., a_0).
    explicit VertexLabel(std::vector<BigInt> coords);
    VertexLabel(std::initializer_list<long long> coords);

    static VertexLabel zeros(int k);
    /// Parses the text form `a_k,...,a_0` (decimal, no spaces).
    static VertexLabel parse(std::string_view text);

    /// k for a label of D_{k,n}, i.e. size() - 1.
    int level() const { return static_cast<int>(coords_.size()) - 1; }
    std::size_t size() const { return coords_.size(); }
    bool empty() const { return coords_.empty(); }

    /// a_j.
    const BigInt& digit(int j) const { return coords_[coords_.size() - 1 - static_cast<std::size_t>(j)]; }
    BigInt& digit(int j) { return coords_[coords_.size() - 1 - static_cast<std::size_t>(j)]; }

    std::span<const BigInt> coords() const { return coords_; }

    std::string to_string() const;

    friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
    /// Lexicographic on coordinates, most-significant first.
    friend bool operator<(const VertexLabel& lhs, const VertexLabel& rhs);

private:
    std::vector<BigInt> coords_;
};

std::string to_string(std::span<const VertexLabel> labels, char separator);

struct LabelReport {
    bool valid = true;
    /// Coordinate index j of the first violation (k+1 for a wrong length).
    std::size_t position = 0;
    std::string reason;

    explicit operator bool() const { return valid; }
};

struct Neighbor {
    VertexLabel label;
    int level = 0;

    friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

/// The implicit topology D_{k,n}: every query is answered from labels alone.
class DCell {
public:
    explicit DCell(Params params);

    const Params& params() const { return params_; }
    int n() const { return params_.n; }
    int k() const { return params_.k; }

    /// t_{j,n} for 0 <= j <= k.
    const BigInt& t(int j) const;
    const BigInt& vertex_count() const { return t_.back(); }
    int degree() const { return params_.n - 1 + params_.k; }

    LabelReport validate(const VertexLabel& label) const;
    /// Throws ValidationError naming the first offending coordinate.
    void require_valid(const VertexLabel& label) const;

    BigInt uid(const VertexLabel& label, int j) const;
    /// Mixed-radix decomposition of m < t_{j,n}; result has j+1 coordinates.
    std::vector<BigInt> suffix_of_uid(const BigInt& m, int j) const;
    VertexLabel label_of_uid(const BigInt& m) const;

    /// The unique level-j neighbor, 1 <= j <= k.
    VertexLabel level_neighbor(const VertexLabel& label, int j) const;
    /// The n-1 labels differing only in a_0, ascending.
    std::vector<VertexLabel> level0_neighbors(const VertexLabel& label) const;
    /// Level-0 neighbors (ascending a_0) followed by levels 1..k.
    std::vector<Neighbor> neighbors(const VertexLabel& label) const;
    bool adjacent(const VertexLabel& x, const VertexLabel& y) const;

    /// Endpoints of the level-j edge between copies a < b inside the level-j
    /// subnetwork selected by `prefix` = (a_k, ..., a_{j+1}); empty prefix means zeros.
    std::pair<VertexLabel, VertexLabel> edge_between_copies(int j, const BigInt& a, const BigInt& b,
                                                            std::span<const BigInt> prefix = {}) const;

private:
    void check_level(int j, int lo) const;

    Params params_;
    std::vector<BigInt> t_;
};

// Free-function forms that take n (and derive k from the label where needed).
BigInt uid(const VertexLabel& label, int j, int n);
std::vector<BigInt> suffix_of_uid(const BigInt& m, int j, int n);
VertexLabel level_neighbor(const VertexLabel& label, int j, const Params& params);
std::vector<VertexLabel> level0_neighbors(const VertexLabel& label, int n);
std::vector<Neighbor> neighbors(const VertexLabel& label, const Params& params);
std::pair<VertexLabel, VertexLabel> edge_between_copies(int j, const BigInt& a, const BigInt& b,
                                                        const Params& params);
LabelReport validate_label(const VertexLabel& label, const Params& params);

} // namespace dcell
