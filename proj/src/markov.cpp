#include "burnoff/markov.hpp"

#include "burnoff/errors.hpp"
#include "burnoff/tree_count.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace burnoff {

ChainState chain_init(std::shared_ptr<const Graph> g, std::uint64_t seed,
                      std::optional<Configuration> start) {
    if (g->vertex_count() < 1) throw input_error("the chain needs at least one vertex");
    if (!is_connected(*g)) throw input_error("the chain needs a connected graph");
    Configuration initial =
        start ? std::move(*start) : Configuration::all_critical(g);
    if (start) {
        if (!(initial.graph_ptr() == g || initial.graph() == *g))
            throw precondition_error("start configuration lives on a different graph");
        if (!initial.relaxed() || !is_legal(initial))
            throw precondition_error("start configuration must be relaxed and legal");
    }
    return ChainState{std::move(initial), 0, SplitMix64(seed)};
}

GameResult chain_step(ChainState& state) {
    const int n = state.current.graph().vertex_count();
    const int seed = static_cast<int>(state.rng.bounded(static_cast<std::uint64_t>(n)));
    GameResult result = seed_and_relax(state.current, seed);
    state.current = result.final_config;
    ++state.steps_taken;
    /* the state space is closed: every step lands back in R */
    assert(state.current.relaxed() && is_legal(state.current));
    return result;
}

SimulationReport run_simulation(std::shared_ptr<const Graph> g, std::uint64_t m,
                                std::uint64_t seed, double alpha, int threads,
                                int analytic_limit) {
    if (m < 1) throw precondition_error("simulation needs at least one game");
    ChainState state = chain_init(g, seed);

    SimulationReport report;
    report.vertex_count = g->vertex_count();
    report.edge_count = g->edge_count();
    report.games_played = m;
    report.seed = seed;
    report.length_histogram.assign(g->vertex_count() + 1, 0);
    for (std::uint64_t i = 0; i < m; ++i) {
        const GameResult game = chain_step(state);
        ++report.length_histogram[game.length];
    }

    if (g->vertex_count() <= analytic_limit) {
        report.analytic = distribution_analytic(*g, threads);
        std::vector<double> expected(report.length_histogram.size());
        for (std::size_t l = 0; l < expected.size(); ++l)
            expected[l] =
                report.analytic->probability(static_cast<int>(l)).get_d() *
                static_cast<double>(m);
        report.chi_square = chi_square_test(report.length_histogram, expected, alpha);
    }
    return report;
}

SimulationReport visitation_uniformity(std::shared_ptr<const Graph> g,
                                       std::uint64_t m, std::uint64_t seed,
                                       double alpha) {
    const BigInt states = count_legal_configurations(*g);
    if (states > 100'000)
        throw scale_error("visitation tracking is limited to 10^5 states, graph has " +
                          states.get_str());
    ChainState state = chain_init(g, seed);

    SimulationReport report;
    report.vertex_count = g->vertex_count();
    report.edge_count = g->edge_count();
    report.games_played = m;
    report.seed = seed;
    report.length_histogram.assign(g->vertex_count() + 1, 0);
    report.state_count = states;
    report.visitation.emplace();

    for (std::uint64_t i = 0; i < m; ++i) {
        const GameResult game = chain_step(state);
        ++report.length_histogram[game.length];
        const auto& chips = state.current.chips();
        ++(*report.visitation)[std::vector<int>(chips.begin(), chips.end())];
    }
    if (m == 0) return report; // empty report, nothing to compare

    /* every legal state participates, visited or not */
    const double uniform = 1.0 / states.get_d();
    const std::uint64_t state_total = states.get_ui();
    double worst = 0.0;
    std::uint64_t seen_states = 0, seen_visits = 0;
    double statistic = 0.0;
    const double expected = static_cast<double>(m) * uniform;
    for (const auto& [chips, visits] : *report.visitation) {
        const double deviation =
            std::abs(static_cast<double>(visits) / static_cast<double>(m) - uniform);
        worst = std::max(worst, deviation);
        const double diff = static_cast<double>(visits) - expected;
        statistic += diff * diff / expected;
        ++seen_states;
        seen_visits += visits;
    }
    assert(seen_visits == m);
    if (seen_states < state_total) {
        /* unvisited states deviate by the full uniform mass */
        worst = std::max(worst, uniform);
        const double unvisited = static_cast<double>(state_total - seen_states);
        statistic += unvisited * expected;
    }
    report.max_visit_deviation = worst;

    ChiSquareResult chi;
    chi.alpha = alpha;
    chi.bins = static_cast<int>(state_total);
    chi.degrees_of_freedom = static_cast<int>(state_total) - 1;
    chi.statistic = statistic;
    if (chi.degrees_of_freedom > 0) {
        const boost::math::chi_squared_distribution<double> dist(chi.degrees_of_freedom);
        chi.critical_value = boost::math::quantile(dist, 1.0 - alpha);
        chi.reject = chi.statistic > chi.critical_value;
    }
    report.chi_square = chi;
    return report;
}

namespace {

/* Fixed double rendering: 17 significant digits via %.17g round-trip the
 * exact bit pattern, so equal doubles give equal bytes on every platform. */
std::string double_string(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

std::string quoted(const std::string& s) { return '"' + s + '"'; }

void append_chi_square(std::ostringstream& out, const ChiSquareResult& chi,
                       const std::string& indent) {
    out << "{\n"
        << indent << "  \"statistic\": " << double_string(chi.statistic) << ",\n"
        << indent << "  \"bins\": " << chi.bins << ",\n"
        << indent << "  \"degrees_of_freedom\": " << chi.degrees_of_freedom << ",\n"
        << indent << "  \"alpha\": " << double_string(chi.alpha) << ",\n"
        << indent << "  \"critical_value\": " << double_string(chi.critical_value) << ",\n"
        << indent << "  \"reject\": " << (chi.reject ? "true" : "false") << '\n'
        << indent << '}';
}

} // namespace

std::string report_json(const SimulationReport& r) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"vertices\": " << r.vertex_count << ",\n";
    out << "  \"edges\": " << r.edge_count << ",\n";
    out << "  \"games_played\": " << r.games_played << ",\n";
    out << "  \"seed\": " << r.seed << ",\n";
    out << "  \"length_histogram\": [";
    for (std::size_t l = 0; l < r.length_histogram.size(); ++l)
        out << (l ? ", " : "") << r.length_histogram[l];
    out << "],\n";

    out << "  \"analytic\": ";
    if (r.analytic) {
        out << "{\n    \"total\": " << quoted(r.analytic->total.get_str())
            << ",\n    \"counts\": [";
        for (std::size_t l = 0; l < r.analytic->counts.size(); ++l)
            out << (l ? ", " : "") << quoted(r.analytic->counts[l].get_str());
        out << "],\n    \"probabilities\": [";
        for (std::size_t l = 0; l < r.analytic->counts.size(); ++l)
            out << (l ? ", " : "")
                << quoted(decimal_string(r.analytic->probability(static_cast<int>(l))));
        out << "]\n  }";
    } else {
        out << "null";
    }
    out << ",\n";

    out << "  \"chi_square\": ";
    if (r.chi_square)
        append_chi_square(out, *r.chi_square, "  ");
    else
        out << "null";

    if (r.visitation) {
        out << ",\n  \"state_count\": " << quoted(r.state_count->get_str());
        out << ",\n  \"max_visit_deviation\": ";
        if (r.max_visit_deviation)
            out << double_string(*r.max_visit_deviation);
        else
            out << "null";
        out << ",\n  \"visitation\": {";
        bool first = true;
        for (const auto& [chips, visits] : *r.visitation) {
            out << (first ? "\n" : ",\n") << "    \"";
            for (std::size_t v = 0; v < chips.size(); ++v)
                out << (v ? " " : "") << chips[v];
            out << "\": " << visits;
            first = false;
        }
        out << (first ? "" : "\n  ") << "}";
    }
    out << "\n}\n";
    return out.str();
}

std::string report_csv(const SimulationReport& r) {
    std::ostringstream out;
    out << "length,observed,expected\n";
    for (std::size_t l = 0; l < r.length_histogram.size(); ++l) {
        out << l << ',' << r.length_histogram[l] << ',';
        if (r.analytic)
            out << double_string(
                r.analytic->probability(static_cast<int>(l)).get_d() *
                static_cast<double>(r.games_played));
        out << '\n';
    }
    return out.str();
}

} // namespace burnoff
