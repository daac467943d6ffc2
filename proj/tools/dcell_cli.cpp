// dcell: generate DCell topologies, query neighbors and cycles, certify
// vertex-transitivity, and run the claim reproduction gate.
//
// Exit codes: 0 success, 1 claim/verification failure, 2 usage or validation
// error, 3 inconclusive.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dcell/certifier.hpp"
#include "dcell/cycle_census.hpp"
#include "dcell/export.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

struct Options {
    int k = 0;
    int n = 2;
    std::string vertex;
    int length = 6;
    std::string format = "edgelist";
    std::string out;
    bool list = false;
    bool induced = false;
    bool exhaustive = false;
    std::uint64_t budget = dcell::kDefaultBudget;
};

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot open " + path + " for writing");
    file << text;
}

dcell::VertexLabel checked_vertex(const dcell::DCell& d, const std::string& text) {
    auto label = dcell::VertexLabel::parse(text);
    d.require_valid(label);
    return label;
}

int cmd_gen(const Options& o) {
    const auto format = dcell::parse_format(o.format);
    const auto topology = dcell::build_graph({o.n, o.k}, o.budget);
    write_output(o.out, dcell::export_topology(topology, format));
    return 0;
}

int cmd_neighbors(const Options& o) {
    const dcell::DCell d({o.n, o.k});
    const auto label = checked_vertex(d, o.vertex);
    std::string text;
    for (const auto& nb : d.neighbors(label))
        text += std::to_string(nb.level) + '\t' + nb.label.to_string() + '\n';
    write_output(o.out, text);
    return 0;
}

int cmd_cycles(const Options& o) {
    const dcell::DCell d({o.n, o.k});
    const auto root = checked_vertex(d, o.vertex);
    const auto found = dcell::cycles_through(d, root, {o.length, o.list, o.induced, std::nullopt});
    std::string text = std::to_string(found.count) + '\n';
    for (const auto& cycle : found.witnesses)
        text += dcell::format_cycle(cycle) + '\n';
    write_output(o.out, text);
    return 0;
}

int cmd_certify(const Options& o) {
    dcell::DecideOptions options;
    options.budget = o.budget;
    const auto verdict = dcell::decide({o.n, o.k}, options);
    auto doc = dcell::to_json(verdict);
    if (o.exhaustive) {
        try {
            const auto topology = dcell::build_graph({o.n, o.k}, o.budget);
            const auto orbits = dcell::exhaustive_orbits(topology.graph());
            doc["orbits"] = dcell::to_json(orbits, [&](dcell::VertexId v) { return topology.label(v).to_string(); });
        } catch (const dcell::BudgetError& e) {
            doc["orbits"] = {{"error", e.what()}};
        }
    }
    write_output(o.out, doc.dump(2) + '\n');
    return 0;
}

int cmd_extension(const Options& o) {
    const dcell::DCell d({o.n, o.k});
    const auto root = checked_vertex(d, o.vertex);
    const auto report = dcell::blocked_extension_check(root, {o.n, o.k}, o.length, o.budget);
    write_output(o.out, dcell::to_json(report).dump(2) + '\n');
    return report.blocked ? 0 : kExitFailure;
}

int cmd_paper_check(const Options& o) {
    const auto report = dcell::paper_check();
    write_output(o.out, dcell::to_json(report).dump(2) + '\n');
    if (report.all_pass())
        return 0;
    for (const auto& id : report.failing_ids())
        std::cerr << "FAILED " << id << '\n';
    return kExitFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"DCell topology generator and vertex-transitivity certifier"};
    app.require_subcommand(1);
    Options o;

    auto params = [&](CLI::App* sub) {
        sub->add_option("--k", o.k, "level k >= 0")->required();
        sub->add_option("--n", o.n, "level-0 complete graph size n >= 2")->required();
        sub->add_option("--out", o.out, "output file (default: standard output)");
        sub->add_option("--budget", o.budget, "materialization limit in vertices");
    };

    auto* gen = app.add_subcommand("gen", "export D_{k,n}");
    params(gen);
    gen->add_option("--format", o.format, "edgelist | dot | json");

    auto* neighbors = app.add_subcommand("neighbors", "list the neighbors of a vertex");
    params(neighbors);
    neighbors->add_option("--vertex", o.vertex, "label a_k,...,a_0")->required();

    auto* cycles = app.add_subcommand("cycles", "count simple cycles through a vertex");
    params(cycles);
    cycles->add_option("--vertex", o.vertex, "label a_k,...,a_0")->required();
    cycles->add_option("--length", o.length, "cycle length (3..10)");
    cycles->add_flag("--list", o.list, "print each cycle, labels joined by ';'");
    cycles->add_flag("--induced", o.induced, "count chordless cycles only");

    auto* certify = app.add_subcommand("certify", "decide vertex-transitivity, verdict as JSON");
    params(certify);
    certify->add_flag("--exhaustive", o.exhaustive, "also compute exact orbits (up to 128 vertices)");

    auto* extension = app.add_subcommand("extension-check", "top-level cycle elimination report for a witness vertex");
    params(extension);
    extension->add_option("--vertex", o.vertex, "witness label")->required();
    extension->add_option("--length", o.length, "target cycle length");

    auto* check = app.add_subcommand("paper-check", "run the claim suite; JSON report");
    check->add_option("--out", o.out, "report file (default: standard output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*gen)
            return cmd_gen(o);
        if (*neighbors)
            return cmd_neighbors(o);
        if (*cycles)
            return cmd_cycles(o);
        if (*certify)
            return cmd_certify(o);
        if (*extension)
            return cmd_extension(o);
        return cmd_paper_check(o);
    } catch (const dcell::InconclusiveError& e) {
        std::cerr << "inconclusive: " << e.what() << '\n';
        return kExitInconclusive;
    } catch (const dcell::ValidationError& e) {
        std::cerr << "error: " << e.what() << " (position " << e.position() << ")\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const dcell::BudgetError& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}
