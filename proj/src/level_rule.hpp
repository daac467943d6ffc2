#pragma once

// Closed form of the level-j pairing. Inside one level-j subnetwork a vertex is
// (copy, m) with m = uid_{j-1}. Copies a < b are joined by (a, b-1) -- (b, a),
// so for (i, m): m >= i means the partner is (m+1, i), otherwise it is (m, i-1).
// Shared by the label oracle and the integer fast path used for materialization.

namespace dcell::detail {

template <class Int>
struct Partner {
    Int copy;
    Int uid;
};

template <class Int>
Partner<Int> level_partner(const Int& copy, const Int& uid) {
#ifdef DCELL_MUTATE_LEVEL_RULE
    if (uid > copy)
        return {Int(uid + 1), copy};
#else
    if (uid >= copy)
        return {Int(uid + 1), copy};
#endif
    return {uid, Int(copy - 1)};
}

} // namespace dcell::detail
