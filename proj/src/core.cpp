#include "dcell/core.hpp"

#include <algorithm>
#include <charconv>

#include "level_rule.hpp"

namespace dcell {

void check_params(const Params& params) {
    if (params.n < 2)
        throw ParamError("n must be at least 2, got " + std::to_string(params.n));
    if (params.k < 0)
        throw ParamError("k must be non-negative, got " + std::to_string(params.k));
}

BigInt vertex_count(int k, int n) {
    check_params({n, k});
    BigInt t = n;
    for (int j = 1; j <= k; ++j)
        t = t * (t + 1);
    return t;
}

VertexLabel::VertexLabel(std::vector<BigInt> coords) : coords_(std::move(coords)) {}

VertexLabel::VertexLabel(std::initializer_list<long long> coords) {
    coords_.reserve(coords.size());
    for (long long c : coords)
        coords_.emplace_back(c);
}

VertexLabel VertexLabel::zeros(int k) {
    return VertexLabel(std::vector<BigInt>(static_cast<std::size_t>(k + 1), BigInt(0)));
}

VertexLabel VertexLabel::parse(std::string_view text) {
    if (text.empty())
        throw ParamError("empty vertex label");
    std::vector<BigInt> coords;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string_view field = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                                     : comma - start);
        if (field.empty() || !std::all_of(field.begin(), field.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw ParamError("malformed vertex label '" + std::string(text) +
                             "': expected comma-separated decimal coordinates");
        coords.emplace_back(std::string(field));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return VertexLabel(std::move(coords));
}

std::string VertexLabel::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i)
            out += ',';
        out += coords_[i].str();
    }
    return out;
}

bool operator<(const VertexLabel& lhs, const VertexLabel& rhs) {
    return std::lexicographical_compare(lhs.coords_.begin(), lhs.coords_.end(), rhs.coords_.begin(),
                                        rhs.coords_.end());
}

std::string to_string(std::span<const VertexLabel> labels, char separator) {
    std::string out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i)
            out += separator;
        out += labels[i].to_string();
    }
    return out;
}

DCell::DCell(Params params) : params_(params) {
    check_params(params_);
    t_.reserve(static_cast<std::size_t>(params_.k) + 1);
    t_.emplace_back(params_.n);
    for (int j = 1; j <= params_.k; ++j)
        t_.push_back(t_.back() * (t_.back() + 1));
}

const BigInt& DCell::t(int j) const {
    if (j < 0 || j > params_.k)
        throw ParamError("level " + std::to_string(j) + " outside 0.." + std::to_string(params_.k));
    return t_[static_cast<std::size_t>(j)];
}

void DCell::check_level(int j, int lo) const {
    if (j < lo || j > params_.k)
        throw ParamError("level " + std::to_string(j) + " outside " + std::to_string(lo) + ".." +
                         std::to_string(params_.k));
}

LabelReport DCell::validate(const VertexLabel& label) const {
    const auto expected = static_cast<std::size_t>(params_.k) + 1;
    if (label.size() != expected)
        return {false, expected,
                "label has " + std::to_string(label.size()) + " coordinates, expected " + std::to_string(expected)};
    for (int j = 0; j <= params_.k; ++j) {
        const BigInt& a = label.digit(j);
        const BigInt upper = j == 0 ? BigInt(params_.n - 1) : t_[static_cast<std::size_t>(j - 1)];
        if (a < 0 || a > upper)
            return {false, static_cast<std::size_t>(j),
                    "coordinate a_" + std::to_string(j) + " = " + a.str() + " outside 0.." + upper.str()};
    }
    return {};
}

void DCell::require_valid(const VertexLabel& label) const {
    if (auto report = validate(label); !report)
        throw ValidationError("invalid label " + label.to_string() + ": " + report.reason, report.position);
}

BigInt DCell::uid(const VertexLabel& label, int j) const {
    check_level(j, 0);
    require_valid(label);
    BigInt m = label.digit(0);
    for (int l = 1; l <= j; ++l)
        m += label.digit(l) * t_[static_cast<std::size_t>(l - 1)];
    return m;
}

std::vector<BigInt> DCell::suffix_of_uid(const BigInt& m, int j) const {
    check_level(j, 0);
    if (m < 0 || m >= t_[static_cast<std::size_t>(j)])
        throw ParamError("uid " + m.str() + " outside 0.." + BigInt(t_[static_cast<std::size_t>(j)] - 1).str());
    std::vector<BigInt> suffix(static_cast<std::size_t>(j) + 1);
    BigInt rest = m;
    for (int l = j; l >= 1; --l) {
        const BigInt& radix = t_[static_cast<std::size_t>(l - 1)];
        suffix[static_cast<std::size_t>(j - l)] = rest / radix;
        rest %= radix;
    }
    suffix.back() = rest;
    return suffix;
}

VertexLabel DCell::label_of_uid(const BigInt& m) const { return VertexLabel(suffix_of_uid(m, params_.k)); }

VertexLabel DCell::level_neighbor(const VertexLabel& label, int j) const {
    check_level(j, 1);
    const BigInt m = uid(label, j - 1);
    const auto partner = detail::level_partner<BigInt>(label.digit(j), m);
    std::vector<BigInt> coords(label.coords().begin(), label.coords().end());
    const auto suffix = suffix_of_uid(partner.uid, j - 1);
    const auto offset = static_cast<std::size_t>(params_.k - j);
    coords[offset] = partner.copy;
    std::copy(suffix.begin(), suffix.end(), coords.begin() + static_cast<std::ptrdiff_t>(offset + 1));
    return VertexLabel(std::move(coords));
}

std::vector<VertexLabel> DCell::level0_neighbors(const VertexLabel& label) const {
    require_valid(label);
    std::vector<VertexLabel> out;
    out.reserve(static_cast<std::size_t>(params_.n - 1));
    for (int a = 0; a < params_.n; ++a) {
        if (label.digit(0) == a)
            continue;
        VertexLabel next = label;
        next.digit(0) = a;
        out.push_back(std::move(next));
    }
    return out;
}

std::vector<Neighbor> DCell::neighbors(const VertexLabel& label) const {
    std::vector<Neighbor> out;
    out.reserve(static_cast<std::size_t>(degree()));
    for (auto& x : level0_neighbors(label))
        out.push_back({std::move(x), 0});
    for (int j = 1; j <= params_.k; ++j)
        out.push_back({level_neighbor(label, j), j});
    return out;
}

bool DCell::adjacent(const VertexLabel& x, const VertexLabel& y) const {
    require_valid(y);
    for (const auto& nb : neighbors(x))
        if (nb.label == y)
            return true;
    return false;
}

std::pair<VertexLabel, VertexLabel> DCell::edge_between_copies(int j, const BigInt& a, const BigInt& b,
                                                               std::span<const BigInt> prefix) const {
    check_level(j, 1);
    const BigInt& copies = t_[static_cast<std::size_t>(j - 1)];
    if (a < 0 || b > copies || a >= b)
        throw ParamError("copy pair (" + a.str() + ", " + b.str() + ") must satisfy 0 <= a < b <= " + copies.str());
    const auto prefix_len = static_cast<std::size_t>(params_.k - j);
    if (!prefix.empty() && prefix.size() != prefix_len)
        throw ParamError("prefix must have " + std::to_string(prefix_len) + " coordinates");

    auto make = [&](const BigInt& copy, const BigInt& m) {
        std::vector<BigInt> coords;
        coords.reserve(static_cast<std::size_t>(params_.k) + 1);
        if (prefix.empty())
            coords.resize(prefix_len);
        else
            coords.assign(prefix.begin(), prefix.end());
        coords.push_back(copy);
        auto suffix = suffix_of_uid(m, j - 1);
        coords.insert(coords.end(), suffix.begin(), suffix.end());
        VertexLabel label(std::move(coords));
        require_valid(label);
        return label;
    };
    return {make(a, b - 1), make(b, a)};
}

namespace {

int level_of(const VertexLabel& label) {
    if (label.empty())
        throw ValidationError("empty label", 0);
    return label.level();
}

} // namespace

BigInt uid(const VertexLabel& label, int j, int n) { return DCell({n, level_of(label)}).uid(label, j); }

std::vector<BigInt> suffix_of_uid(const BigInt& m, int j, int n) {
    if (j < 0)
        throw ParamError("level must be non-negative");
    return DCell({n, j}).suffix_of_uid(m, j);
}

VertexLabel level_neighbor(const VertexLabel& label, int j, const Params& params) {
    return DCell(params).level_neighbor(label, j);
}

std::vector<VertexLabel> level0_neighbors(const VertexLabel& label, int n) {
    return DCell({n, level_of(label)}).level0_neighbors(label);
}

std::vector<Neighbor> neighbors(const VertexLabel& label, const Params& params) {
    return DCell(params).neighbors(label);
}

std::pair<VertexLabel, VertexLabel> edge_between_copies(int j, const BigInt& a, const BigInt& b,
                                                        const Params& params) {
    return DCell(params).edge_between_copies(j, a, b);
}

LabelReport validate_label(const VertexLabel& label, const Params& params) { return DCell(params).validate(label); }

} // namespace dcell
