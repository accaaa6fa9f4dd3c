#include "burnoff/bijection.hpp"
#include "burnoff/chart.hpp"
#include "burnoff/configuration.hpp"
#include "burnoff/enumeration.hpp"
#include "burnoff/errors.hpp"
#include "burnoff/graph.hpp"
#include "burnoff/markov.hpp"
#include "burnoff/spanning_trees.hpp"
#include "burnoff/tree_count.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace burnoff;

/// One graph per invocation, either a built-in family or an edge-list file.
struct GraphChoice {
    std::vector<std::string> family; // name, optionally followed by a size
    std::string file;
};

void add_graph_options(CLI::App& cmd, GraphChoice& choice) {
    auto* source = cmd.add_option_group("graph", "graph to operate on (exactly one source)");
    source->add_option("--family", choice.family,
                       "built-in family: path N, cycle N, complete N, star N, k3_pendant")
        ->expected(1, 2);
    source->add_option("--file", choice.file,
                       "edge-list file: header \"n m\", then m lines \"u v\"");
    source->require_option(1);
}

Graph resolve_graph(const GraphChoice& choice) {
    if (!choice.file.empty()) return parse_graph_file(choice.file);
    const std::string& name = choice.family.front();
    if (choice.family.size() == 1) {
        if (name != "k3_pendant")
            throw input_error("family '" + name + "' needs a size, e.g. --family " + name + " 6");
        return families::k3_pendant();
    }
    if (name == "k3_pendant") throw input_error("family k3_pendant takes no size parameter");
    const std::string& raw = choice.family[1];
    int size = 0;
    try {
        std::size_t used = 0;
        size = std::stoi(raw, &used);
        if (used != raw.size()) throw std::invalid_argument(raw);
    } catch (const std::exception&) {
        throw input_error("family size must be an integer, got '" + raw + "'");
    }
    return families::by_name(name, size);
}

void require_connected(const Graph& g) {
    if (!is_connected(g))
        throw input_error("the graph is disconnected (" +
                          std::to_string(components(g).size()) +
                          " components); this command needs a connected graph");
}

/// Artifacts go to stdout unless a path is given.
void deliver(const std::string& path, const std::string& bytes) {
    if (path.empty()) {
        std::cout << bytes;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot open output file: " + path);
    out << bytes;
    if (!out) throw input_error("cannot write output file: " + path);
}

std::string analyze_table(const Graph& g, const LengthDistribution& d) {
    const BigInt trees = tree_count(cone(g).full());
    const BigInt states = d.total / BigInt(g.vertex_count());

    std::vector<std::string> fraction(d.counts.size());
    std::size_t count_width = 5, fraction_width = 8;
    for (std::size_t l = 0; l < d.counts.size(); ++l) {
        fraction[l] = d.counts[l].get_str() + "/" + d.total.get_str();
        count_width = std::max(count_width, d.counts[l].get_str().size());
        fraction_width = std::max(fraction_width, fraction[l].size());
    }

    std::ostringstream out;
    out << "graph: " << g.vertex_count() << (g.vertex_count() == 1 ? " vertex, " : " vertices, ")
        << g.edge_count() << (g.edge_count() == 1 ? " edge\n" : " edges\n")
        << "spanning trees of the cone: " << trees.get_str() << '\n'
        << "relaxed legal configurations |R|: " << states.get_str() << '\n'
        << "(configuration, seed) pairs: " << d.total.get_str() << "\n\n";
    out << "length  " << std::setw(static_cast<int>(count_width)) << "count" << "  "
        << std::setw(static_cast<int>(fraction_width)) << "fraction" << "  percent\n";
    for (std::size_t l = 0; l < d.counts.size(); ++l)
        out << std::setw(6) << l << "  "
            << std::setw(static_cast<int>(count_width)) << d.counts[l].get_str() << "  "
            << std::setw(static_cast<int>(fraction_width)) << fraction[l] << "  "
            << decimal_string(d.probability(static_cast<int>(l)) * 100) << '\n';
    return out.str();
}

int run_analyze(const GraphChoice& choice, const std::string& format,
                const std::string& output, int threads) {
    const Graph g = resolve_graph(choice);
    require_connected(g);
    const LengthDistribution d = distribution_analytic(g, threads);
    std::string artifact;
    if (format == "csv")
        artifact = distribution_csv(d);
    else if (format == "json")
        artifact = distribution_json(d);
    else if (format == "svg")
        artifact = chart_svg(d);
    else
        artifact = analyze_table(g, d);
    deliver(output, artifact);
    return 0;
}

struct SimulateOptions {
    GraphChoice graph;
    std::uint64_t games = 0;
    std::uint64_t seed = 0;
    double alpha = 0.1;
    int analytic_limit = 12;
    std::string format = "json";
    std::string output;
    std::string chart;
};

int run_simulate(const SimulateOptions& opt, int threads) {
    const Graph g = resolve_graph(opt.graph);
    require_connected(g);
    const auto gp = std::make_shared<const Graph>(g);
    const SimulationReport report =
        run_simulation(gp, opt.games, opt.seed, opt.alpha, threads, opt.analytic_limit);
    deliver(opt.output, opt.format == "csv" ? report_csv(report) : report_json(report));
    if (!opt.chart.empty()) deliver(opt.chart, chart_svg(report));
    return 0;
}

int run_verify(const Graph& g, int max_n, int threads) {
    require_connected(g);
    if (g.vertex_count() > max_n)
        throw scale_error("verify enumerates everything; " + std::to_string(g.vertex_count()) +
                          " vertices is above --max-n = " + std::to_string(max_n));
    const auto gp = std::make_shared<const Graph>(g);
    bool ok = true;
    const auto check = [&ok](bool pass, const std::string& line) {
        std::cout << (pass ? "   ok  " : " FAIL  ") << line << '\n';
        ok = ok && pass;
    };

    const auto legal = enumerate_legal_configurations(gp);
    const BigInt trees = count_legal_configurations(g);
    check(BigInt(legal.size()) == trees,
          "|R| by exhaustive search = " + std::to_string(legal.size()) +
          ", spanning trees of the cone = " + trees.get_str());

    const LengthDistribution exact = distribution_analytic(g, threads);
    const LengthDistribution replay = distribution_oracle(gp, threads);
    check(exact == replay, "closed-form length distribution matches game-by-game replay (" +
                               exact.total.get_str() + " pairs)");

    std::set<SpanningTree> images;
    bool forward = true;
    for (const auto& c : legal) {
        const SpanningTree t = config_to_tree(c);
        images.insert(t);
        if (!(tree_to_config(gp, t) == c)) forward = false;
    }
    check(forward && images.size() == legal.size(),
          "configuration -> tree -> configuration is the identity on all " +
              std::to_string(legal.size()) + " configurations");

    bool backward = true;
    std::size_t tree_total = 0;
    for_each_spanning_tree(cone(g).full(), [&](const SpanningTree& t) {
        ++tree_total;
        if (!(config_to_tree(tree_to_config(gp, t)) == t)) backward = false;
    });
    check(backward && BigInt(tree_total) == trees,
          "tree -> configuration -> tree is the identity on all " +
              std::to_string(tree_total) + " spanning trees");

    if (!ok) {
        std::cout << "FAIL\n";
        return 1;
    }
    std::cout << "PASS: " << legal.size() << " configurations / " << tree_total << " trees / "
              << exact.total.get_str() << " pairs\n";
    return 0;
}

struct BijectionOptions {
    GraphChoice graph;
    std::string direction;
    std::string input;
    std::string output;
    bool trace = false;
};

int run_bijection(const BijectionOptions& opt) {
    const Graph g = resolve_graph(opt.graph);
    require_connected(g);
    const auto gp = std::make_shared<const Graph>(g);
    BijectionTrace trace;
    BijectionTrace* tp = opt.trace ? &trace : nullptr;
    std::string artifact;
    if (opt.direction == "to-tree") {
        const Configuration c = parse_configuration_file(opt.input, gp);
        artifact = format_tree(config_to_tree(c, tp), g);
    } else {
        const SpanningTree t = parse_tree_file(opt.input, g);
        artifact = format_configuration(tree_to_config(gp, t, tp)) + "\n";
    }
    if (opt.trace) std::cerr << format_trace(trace, g);
    deliver(opt.output, artifact);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"burn-off chip-firing games: exact length distributions, random-game "
                 "simulation and the configuration/spanning-tree correspondence"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads,
                   "worker threads for heavy computations (0 = all hardware threads)")
        ->envname("BURNOFF_THREADS");

    GraphChoice analyze_graph;
    std::string analyze_format = "table";
    std::string analyze_output;
    auto* analyze = app.add_subcommand(
        "analyze", "exact length distribution over all (configuration, seed) pairs");
    analyze->fallthrough();
    add_graph_options(*analyze, analyze_graph);
    analyze->add_option("--format", analyze_format, "table, csv, json or svg")
        ->check(CLI::IsMember({"table", "csv", "json", "svg"}));
    analyze->add_option("-o,--output", analyze_output, "write the artifact to this file");

    SimulateOptions sim;
    auto* simulate = app.add_subcommand(
        "simulate", "play random games and compare the histogram with the exact distribution");
    simulate->fallthrough();
    add_graph_options(*simulate, sim.graph);
    simulate->add_option("-m,--games", sim.games, "number of games to play (at least 1)")
        ->required();
    simulate->add_option("--seed", sim.seed, "random number generator seed");
    simulate->add_option("--alpha", sim.alpha, "significance level for the goodness-of-fit test");
    simulate->add_option("--analytic-limit", sim.analytic_limit,
                         "largest vertex count for which the exact reference is attached");
    simulate->add_option("--format", sim.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    simulate->add_option("--chart", sim.chart, "also write an SVG bar chart to this file");
    simulate->add_option("-o,--output", sim.output, "write the report to this file");

    GraphChoice verify_graph;
    int verify_max_n = 8;
    auto* verify = app.add_subcommand(
        "verify", "cross-check the closed-form computations against exhaustive enumeration");
    verify->fallthrough();
    add_graph_options(*verify, verify_graph);
    verify->add_option("--max-n", verify_max_n, "refuse graphs with more vertices than this");

    BijectionOptions bij;
    auto* bijection = app.add_subcommand(
        "bijection", "map a configuration to its spanning tree of the cone, or back");
    bijection->fallthrough();
    add_graph_options(*bijection, bij.graph);
    bijection->add_option("--direction", bij.direction, "to-tree or to-config")
        ->required()
        ->check(CLI::IsMember({"to-tree", "to-config"}));
    bijection->add_option("--input", bij.input, "configuration or tree file to transform")
        ->required();
    bijection->add_option("-o,--output", bij.output, "write the counterpart to this file");
    bijection->add_flag("--trace", bij.trace, "dump the layer-by-layer construction to stderr");

    try {
        app.parse(argc, argv);
        if (*analyze) return run_analyze(analyze_graph, analyze_format, analyze_output, threads);
        if (*simulate) return run_simulate(sim, threads);
        if (*verify) return run_verify(resolve_graph(verify_graph), verify_max_n, threads);
        return run_bijection(bij);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const scale_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
