#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "dcell/export.hpp"

using namespace dcell;

namespace {

std::size_t line_count(const std::string& text) { return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')); }

std::vector<std::tuple<std::string, std::string, int>> normalized(const std::vector<LabeledEdge>& edges) {
    std::vector<std::tuple<std::string, std::string, int>> out;
    for (const auto& e : edges) {
        auto a = e.u, b = e.v;
        if (b < a)
            std::swap(a, b);
        out.emplace_back(a.to_string(), b.to_string(), e.level);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("edgelist line counts") {
    CHECK(line_count(export_topology(build_graph({2, 1}), ExportFormat::EdgeList)) == 6);
    CHECK(line_count(export_topology(build_graph({3, 0}), ExportFormat::EdgeList)) == 3);
    // degree n-1+k = 3 on 42 vertices
    CHECK(line_count(export_topology(build_graph({2, 2}), ExportFormat::EdgeList)) == 63);
}

TEST_CASE("edgelist layout") {
    const auto text = export_topology(build_graph({2, 1}), ExportFormat::EdgeList);
    CHECK(text == "0,0\t0,1\t0\n"
                  "0,0\t1,0\t1\n"
                  "0,1\t2,0\t1\n"
                  "1,0\t1,1\t0\n"
                  "1,1\t2,1\t1\n"
                  "2,0\t2,1\t0\n");
    const auto topo = build_graph({3, 2});
    std::istringstream in(export_topology(topo, ExportFormat::EdgeList));
    std::string line;
    std::pair<VertexId, int> prev{0, -1};
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::string a, b;
        int level = -1;
        fields >> a >> b >> level;
        const VertexId ua = topo.index(VertexLabel::parse(a));
        CHECK(ua < topo.index(VertexLabel::parse(b)));
        CHECK(prev <= std::pair{ua, level});
        prev = {ua, level};
    }
}

TEST_CASE("determinism") {
    for (auto format : {ExportFormat::EdgeList, ExportFormat::Dot, ExportFormat::Json})
        CHECK(export_topology(build_graph({3, 2}), format) == export_topology(build_graph({3, 2}), format));
}

TEST_CASE("formats agree and round-trip") {
    for (Params p : {Params{3, 0}, Params{2, 1}, Params{4, 1}, Params{2, 2}, Params{3, 2}}) {
        const auto topo = build_graph(p);
        const auto reference = normalized(parse_edges(export_topology(topo, ExportFormat::EdgeList), ExportFormat::EdgeList));
        CHECK(reference.size() == topo.graph().edge_count());
        for (auto format : {ExportFormat::Dot, ExportFormat::Json})
            CHECK(normalized(parse_edges(export_topology(topo, format), format)) == reference);
        for (auto format : {ExportFormat::EdgeList, ExportFormat::Dot, ExportFormat::Json}) {
            const auto back = import_topology(export_topology(topo, format), format, p);
            CHECK(back == topo);
        }
    }
}

TEST_CASE("dot and json shapes") {
    const auto topo = build_graph({2, 1});
    const auto dot = export_topology(topo, ExportFormat::Dot);
    CHECK(dot.starts_with("graph"));
    CHECK(dot.find("\"0,0\" -- \"1,0\" [level=1];") != std::string::npos);
    const auto doc = nlohmann::json::parse(export_topology(topo, ExportFormat::Json));
    CHECK(doc["params"]["k"] == 1);
    CHECK(doc["params"]["n"] == 2);
    CHECK(doc["t"] == 6);
    CHECK(doc["edges"].size() == 6);
}

TEST_CASE("format names and bad input") {
    CHECK(parse_format("dot") == ExportFormat::Dot);
    CHECK_THROWS_AS(parse_format("csv"), ParamError);
    CHECK_THROWS_AS(import_topology("0,0\t9,0\t1\n", ExportFormat::EdgeList, {2, 1}), ValidationError);
    CHECK_THROWS(parse_edges("0,0 only\n", ExportFormat::EdgeList));
}

TEST_CASE("serialized results") {
    const std::vector<VertexLabel> cycle{{3, 1, 1}, {3, 1, 0}, {2, 1, 0}};
    CHECK(format_cycle(cycle) == "3,1,1;3,1,0;2,1,0");

    const auto verdict = to_json(decide({2, 2}));
    CHECK(verdict["decision"] == "NotTransitive");
    CHECK(verdict["witness"]["u"] == "0,2,1");
    CHECK(verdict["witness"]["counts"]["u"] == 1);

    const auto report = to_json(paper_check());
    for (const auto& c : report["claims"]) {
        CHECK(c.contains("id"));
        CHECK(c.contains("location"));
        CHECK(c.contains("expected"));
        CHECK(c.contains("computed"));
        CHECK(c["status"] == "pass");
    }
}
