#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dcell/certifier.hpp"
#include "dcell/cycle_census.hpp"
#include "dcell/topology.hpp"

namespace dcell {

enum class ExportFormat { EdgeList, Dot, Json };

/// "edgelist", "dot" or "json"; ParamError otherwise.
ExportFormat parse_format(std::string_view name);

/// edgelist: `label<TAB>label<TAB>level` per edge, lower uid first, sorted by
/// (uid of first endpoint, level, uid of second endpoint).
std::string export_topology(const Topology& topology, ExportFormat format);

struct LabeledEdge {
    VertexLabel u;
    VertexLabel v;
    int level = 0;
};

/// Parses any of the three export formats back into edges.
std::vector<LabeledEdge> parse_edges(std::string_view text, ExportFormat format);
/// Rebuilds a Topology; ValidationError for labels outside D_{k,n}.
Topology import_topology(std::string_view text, ExportFormat format, const Params& params);

/// One witness line: labels joined by ';'.
std::string format_cycle(std::span<const VertexLabel> cycle);

using Labeler = std::function<std::string(VertexId)>;

/// Array of [source, image] label pairs.
nlohmann::ordered_json to_json(const Automorphism& map, const Labeler& label);
nlohmann::ordered_json to_json(const Verdict& verdict);
nlohmann::ordered_json to_json(const OrbitPartition& partition, const Labeler& label);
nlohmann::ordered_json to_json(const ClaimReport& report);
nlohmann::ordered_json to_json(const BlockedExtensionReport& report);

} // namespace dcell
