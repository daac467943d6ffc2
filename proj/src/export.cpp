#include "dcell/export.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

namespace dcell {

ExportFormat parse_format(std::string_view name) {
    if (name == "edgelist")
        return ExportFormat::EdgeList;
    if (name == "dot")
        return ExportFormat::Dot;
    if (name == "json")
        return ExportFormat::Json;
    throw ParamError("unknown format '" + std::string(name) + "' (expected edgelist, dot or json)");
}

std::string export_topology(const Topology& topology, ExportFormat format) {
    const auto& g = topology.graph();
    std::vector<std::string> labels(g.vertex_count());
    for (VertexId v = 0; v < labels.size(); ++v)
        labels[v] = topology.label(v).to_string();
    // rows are (level, target)-ordered, so edges() is already (u, level, v)-ordered
    const auto edges = g.edges();
    const Params& p = topology.params();

    std::string out;
    switch (format) {
    case ExportFormat::EdgeList:
        for (const auto& e : edges)
            out += labels[e.u] + '\t' + labels[e.v] + '\t' + std::to_string(e.level) + '\n';
        return out;
    case ExportFormat::Dot:
        out += "graph \"D_{" + std::to_string(p.k) + "," + std::to_string(p.n) + "}\" {\n";
        for (const auto& l : labels)
            out += "  \"" + l + "\";\n";
        for (const auto& e : edges)
            out += "  \"" + labels[e.u] + "\" -- \"" + labels[e.v] + "\" [level=" + std::to_string(e.level) + "];\n";
        out += "}\n";
        return out;
    case ExportFormat::Json: {
        nlohmann::ordered_json doc;
        doc["params"] = {{"k", p.k}, {"n", p.n}};
        doc["t"] = topology.vertex_count();
        doc["vertices"] = labels;
        auto& list = doc["edges"] = nlohmann::ordered_json::array();
        for (const auto& e : edges)
            list.push_back({{"u", labels[e.u]}, {"v", labels[e.v]}, {"level", e.level}});
        return doc.dump(1) + "\n";
    }
    }
    throw ParamError("unknown export format");
}

std::vector<LabeledEdge> parse_edges(std::string_view text, ExportFormat format) {
    std::vector<LabeledEdge> out;
    const std::string body(text);
    switch (format) {
    case ExportFormat::EdgeList: {
        std::istringstream in(body);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty())
                continue;
            std::istringstream fields(line);
            std::string a, b, level;
            if (!std::getline(fields, a, '\t') || !std::getline(fields, b, '\t') || !std::getline(fields, level))
                throw ParamError("malformed edgelist line: " + line);
            out.push_back({VertexLabel::parse(a), VertexLabel::parse(b), std::stoi(level)});
        }
        return out;
    }
    case ExportFormat::Dot: {
        static const std::regex edge_re(R"re("([0-9,]+)"\s*--\s*"([0-9,]+)"\s*\[level=([0-9]+)\])re");
        for (auto it = std::sregex_iterator(body.begin(), body.end(), edge_re); it != std::sregex_iterator(); ++it)
            out.push_back({VertexLabel::parse((*it)[1].str()), VertexLabel::parse((*it)[2].str()), std::stoi((*it)[3].str())});
        return out;
    }
    case ExportFormat::Json: {
        const auto doc = nlohmann::json::parse(body);
        for (const auto& e : doc.at("edges"))
            out.push_back({VertexLabel::parse(e.at("u").get<std::string>()), VertexLabel::parse(e.at("v").get<std::string>()),
                           e.at("level").get<int>()});
        return out;
    }
    }
    throw ParamError("unknown export format");
}

Topology import_topology(std::string_view text, ExportFormat format, const Params& params) {
    const DCell dcell(params);
    if (dcell.vertex_count() > kDefaultBudget)
        throw BudgetError("D_{" + std::to_string(params.k) + "," + std::to_string(params.n) + "} too large to import");
    std::vector<Edge> edges;
    for (const auto& e : parse_edges(text, format))
        edges.push_back({dcell.uid(e.u, params.k).convert_to<VertexId>(), dcell.uid(e.v, params.k).convert_to<VertexId>(),
                         e.level});
    return Topology(params, Graph::from_edges(dcell.vertex_count().convert_to<std::size_t>(), edges));
}

std::string format_cycle(std::span<const VertexLabel> cycle) { return to_string(cycle, ';'); }

nlohmann::ordered_json to_json(const Automorphism& map, const Labeler& label) {
    auto pairs = nlohmann::ordered_json::array();
    for (VertexId v = 0; v < map.perm.size(); ++v)
        pairs.push_back({label(v), label(map.perm[v])});
    return pairs;
}

nlohmann::ordered_json to_json(const Verdict& verdict) {
    nlohmann::ordered_json doc;
    doc["params"] = {{"k", verdict.params.k}, {"n", verdict.params.n}};
    doc["decision"] = std::string(to_string(verdict.decision));
    if (verdict.certificate) {
        const DCell dcell(verdict.params);
        const Labeler label = [&](VertexId v) { return dcell.label_of_uid(BigInt(v)).to_string(); };
        const auto& c = *verdict.certificate;
        nlohmann::ordered_json cert;
        cert["kind"] = c.kind;
        cert["pairs_total"] = c.pairs_total;
        cert["pairs_checked"] = c.pairs_checked;
        cert["pairs_verified"] = c.pairs_verified;
        cert["sampled"] = c.sampled;
        auto& gens = cert["generators"] = nlohmann::ordered_json::array();
        for (const auto& g : c.generators)
            gens.push_back({{"provenance", to_string(g.provenance)},
                            {"verified", to_string(g.verified)},
                            {"map", to_json(g, label)}});
        auto& pairs = cert["pairs"] = nlohmann::ordered_json::array();
        for (const auto& p : c.pairs)
            pairs.push_back({{"source", p.source.to_string()},
                             {"target", p.target.to_string()},
                             {"verified", to_string(p.map.verified)}});
        doc["certificate"] = std::move(cert);
    }
    if (verdict.witness) {
        const auto& w = *verdict.witness;
        doc["witness"] = {{"invariant", w.invariant},
                          {"u", w.u.to_string()},
                          {"v", w.v.to_string()},
                          {"counts", {{"u", w.count_u}, {"v", w.count_v}}},
                          {"level1_counts", {{"u", w.level1_count_u}, {"v", w.level1_count_v}}}};
    }
    doc["note"] = verdict.note;
    return doc;
}

nlohmann::ordered_json to_json(const OrbitPartition& partition, const Labeler& label) {
    nlohmann::ordered_json doc;
    doc["method"] = std::string(to_string(partition.method));
    doc["count"] = partition.blocks.size();
    auto& blocks = doc["blocks"] = nlohmann::ordered_json::array();
    for (const auto& b : partition.blocks) {
        auto members = nlohmann::ordered_json::array();
        for (VertexId v : b)
            members.push_back(label(v));
        blocks.push_back(std::move(members));
    }
    return doc;
}

nlohmann::ordered_json to_json(const ClaimReport& report) {
    nlohmann::ordered_json doc;
    doc["status"] = report.all_pass() ? "pass" : "fail";
    auto& claims = doc["claims"] = nlohmann::ordered_json::array();
    for (const auto& c : report.claims)
        claims.push_back({{"id", c.id},
                          {"location", c.location},
                          {"expected", c.expected},
                          {"computed", c.computed},
                          {"status", c.pass ? "pass" : "fail"}});
    return doc;
}

nlohmann::ordered_json to_json(const BlockedExtensionReport& report) {
    nlohmann::ordered_json doc;
    doc["root"] = report.root.to_string();
    doc["root_partner"] = report.root_partner.to_string();
    doc["partner_copy"] = report.partner_copy.str();
    doc["target_length"] = report.target_length;
    auto& list = doc["candidates"] = nlohmann::ordered_json::array();
    for (const auto& c : report.candidates)
        list.push_back(nlohmann::ordered_json{{"neighbor", c.neighbor.to_string()},
                        {"level", c.neighbor_level},
                        {"partner", c.partner.to_string()},
                        {"copy", c.copy.str()},
                        {"bridge", {c.bridge_near.to_string(), c.bridge_far.to_string()}},
                        {"closing_length", c.closing_length}});
    doc["min_closing_any_copy"] = report.min_closing_any_copy;
    doc["blocked"] = report.blocked;
    return doc;
}

} // namespace dcell
