#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dcell {

/// Invalid parameters (n, k, level index, copy index, cycle length, ...).
class ParamError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A vertex label that violates the coordinate ranges of its DCell.
class ValidationError : public std::invalid_argument {
public:
    ValidationError(const std::string& what, std::size_t position)
        : std::invalid_argument(what), position_(position) {}

    /// Coordinate index j (a_j) of the first violation; k+1 for a length mismatch.
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Materialization or search refused because a size limit would be exceeded.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// No sound verdict could be reached within the given budget.
class InconclusiveError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace dcell
