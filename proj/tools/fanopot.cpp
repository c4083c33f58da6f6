// Command-line front end: analyze fans, reproduce the classification tables,
// emit the transition graph, query line-bundle cohomology, list (-1)-curves.
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "fanopot/cohomology.hpp"
#include "fanopot/serialize.hpp"

#ifndef FANOPOT_DATA_DIR
#define FANOPOT_DATA_DIR "data"
#endif

namespace {

using namespace fanopot;

int cmd_analyze(const std::string& path, bool tsv) {
    Fan fan = load_fan(path);
    BaseReport rep = analyze_base(fan);
    std::cout << (tsv ? base_report_tsv(rep) : base_report_json(rep));
    return 0;
}

// per-record diffs computed by a fixed-size worker pool; merge order is
// independent of the worker count
TableCheck checked_parallel(const std::vector<FanoRecord>& records, int workers) {
    if (workers <= 1) return check_tables(records);
    toric_fano_table(); // build the shared catalog before fanning out
    std::vector<TableCheck> parts(records.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < records.size(); i = next.fetch_add(1))
            parts[i] = check_tables({records[i]});
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    TableCheck merged;
    for (const auto& p : parts)
        merged.diffs.insert(merged.diffs.end(), p.diffs.begin(), p.diffs.end());
    std::sort(merged.diffs.begin(), merged.diffs.end(),
              [](const RowDiff& a, const RowDiff& b) {
                  return std::tie(a.row, a.field) < std::tie(b.row, b.field);
              });
    return merged;
}

int cmd_tables(const std::string& catalog, bool check, bool strict, bool json, int parallel) {
    auto records = load_records(catalog);
    if (!check) {
        std::cout << (json ? tables_json(records) : tables_tsv(records));
        return 0;
    }
    TableCheck result = checked_parallel(records, parallel);
    std::cout << check_report_text(result);
    if (strict && !result.strict_ok()) return 2;
    return 0;
}

int cmd_graph(const std::string& catalog, const std::string& dot_path) {
    auto records = load_records(catalog);
    TransitionGraph g = transition_graph(records);
    std::string dot = graph_dot(g);
    if (dot_path.empty() || dot_path == "-") {
        std::cout << dot;
    } else {
        std::ofstream out(dot_path);
        if (!out) throw ValidationError("cannot write " + dot_path);
        out << dot;
        std::cout << "wrote " << dot_path << " (" << g.nodes.size() << " nodes, "
                  << g.edges.size() << " edges)\n";
    }
    return 0;
}

int cmd_cohomology(const std::string& path, const std::string& divisor) {
    Fan fan = load_fan(path);
    FanOps ops(fan);
    DivisorClass l;
    std::stringstream ss(divisor);
    std::string tok;
    while (std::getline(ss, tok, ',')) l.push_back(std::stoll(tok));
    if (l.size() != fan.rays.size())
        throw ValidationError("divisor has " + std::to_string(l.size()) +
                              " coefficients, fan has " + std::to_string(fan.rays.size()) +
                              " rays");
    auto h = line_bundle_cohomology(ops, l);
    std::cout << "h = (";
    for (size_t i = 0; i < h.size(); ++i) std::cout << (i ? "," : "") << h[i];
    for (size_t i = h.size(); i < 4; ++i) std::cout << ",0";
    std::cout << ")\n";
    std::cout << "chi = " << euler_characteristic(h)
              << "  (riemann-roch: " << riemann_roch_chi(ops, l).str() << ")\n";
    return 0;
}

int cmd_delpezzo(int points, bool json) {
    std::cout << (json ? delpezzo_json(points) : delpezzo_tsv(points));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toric engine for superpotential contributions on elliptic "
                 "Calabi-Yau fourfolds over toric/Fano bases"};
    app.require_subcommand(1);
    std::string default_catalog = std::string(FANOPOT_DATA_DIR) + "/catalog.json";

    auto* analyze = app.add_subcommand("analyze", "analyze a fan file");
    std::string fan_path;
    bool a_json = false, a_tsv = false;
    analyze->add_option("fan", fan_path, "fan JSON file")->required();
    analyze->add_flag("--json", a_json, "JSON output (default)");
    analyze->add_flag("--tsv", a_tsv, "TSV output");

    auto* tables = app.add_subcommand("tables", "reproduce the classification tables");
    std::string catalog = default_catalog;
    bool check = false, strict = false, t_json = false;
    int parallel = 1;
    tables->add_option("--catalog", catalog, "catalog record file");
    tables->add_flag("--check", check, "diff engine results against the records");
    tables->add_flag("--strict", strict, "exit 2 on undocumented discrepancies");
    tables->add_flag("--json", t_json, "JSON output");
    tables->add_option("--parallel", parallel, "worker threads for --check");

    auto* graph = app.add_subcommand("graph", "emit the transition graph");
    std::string g_catalog = default_catalog, dot_out;
    graph->add_option("--catalog", g_catalog, "catalog record file");
    graph->add_option("--dot", dot_out, "output DOT file ('-' for stdout)");

    auto* coh = app.add_subcommand("cohomology", "line-bundle cohomology on a fan");
    std::string c_fan, c_div;
    coh->add_option("fan", c_fan, "fan JSON file")->required();
    coh->add_option("--divisor", c_div, "comma-separated coefficients, one per ray")
        ->required();

    auto* dp = app.add_subcommand("delpezzo", "(-1)-curve classes on blown-up P2");
    int points = 0;
    bool d_json = false;
    dp->add_option("--points", points, "number of blown-up points (0..9)")->required();
    dp->add_flag("--json", d_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1; // help exits 0, any parse problem is an input error
    }

    try {
        if (*analyze) return cmd_analyze(fan_path, a_tsv);
        if (*tables) return cmd_tables(catalog, check, strict, t_json, parallel);
        if (*graph) return cmd_graph(g_catalog, dot_out);
        if (*coh) return cmd_cohomology(c_fan, c_div);
        if (*dp) return cmd_delpezzo(points, d_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
