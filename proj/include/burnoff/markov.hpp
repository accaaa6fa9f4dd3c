#ifndef BURNOFF_MARKOV_HPP
#define BURNOFF_MARKOV_HPP

#include "burnoff/configuration.hpp"
#include "burnoff/enumeration.hpp"
#include "burnoff/rng.hpp"
#include "burnoff/stats.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace burnoff {

/// The burn-off Markov chain on relaxed legal configurations: each step
/// seeds a uniformly random vertex and relaxes. The chain is irreducible and
/// aperiodic with the uniform distribution as its stationary law, so
/// long-run visit frequencies approach 1/|R| regardless of the start state.
struct ChainState {
    Configuration current;
    std::uint64_t steps_taken;
    SplitMix64 rng;
};

/// Starts the chain. The default start is the all-critical configuration
/// (always legal); a custom start must be relaxed and legal on g.
ChainState chain_init(std::shared_ptr<const Graph> g, std::uint64_t seed,
                      std::optional<Configuration> start = std::nullopt);

/// Advances one step in place and returns the played game.
GameResult chain_step(ChainState& state);

/// Everything one simulation run produces. Exact analytic reference data is
/// attached when the graph is small enough to compute it; otherwise
/// analytic/chi_square stay empty and only the histogram is reported.
struct SimulationReport {
    int vertex_count = 0;
    int edge_count = 0;
    std::uint64_t games_played = 0;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> length_histogram; // size n+1

    std::optional<LengthDistribution> analytic;
    std::optional<ChiSquareResult> chi_square;

    /// Visitation-mode fields: visits per state over the first m steps,
    /// keyed by chip vector, plus the largest |visits/m - 1/|R||.
    std::optional<std::map<std::vector<int>, std::uint64_t>> visitation;
    std::optional<double> max_visit_deviation;
    std::optional<BigInt> state_count;
};

/// Plays m >= 1 games from the all-critical start and tallies lengths.
/// When the analytic distribution is within reach (vertex count at most
/// `analytic_limit`), attaches it and a chi-square test of the histogram
/// against it at level alpha.
SimulationReport run_simulation(std::shared_ptr<const Graph> g, std::uint64_t m,
                                std::uint64_t seed, double alpha,
                                int threads = 1, int analytic_limit = 12);

/// Tracks how often each state is visited over the first m steps (m = 0
/// gives an empty report). Requires |R| <= 10^5 so the state map and the
/// uniform chi-square stay exact; larger graphs raise scale_error.
/// The chi-square here compares visit counts with the flat distribution
/// (expected m/|R| per state, no merging).
SimulationReport visitation_uniformity(std::shared_ptr<const Graph> g,
                                       std::uint64_t m, std::uint64_t seed,
                                       double alpha);

/// Deterministic JSON artifact for a report: same input, same bytes.
std::string report_json(const SimulationReport& r);

/// CSV artifact: "length,observed,expected" rows (expected blank when no
/// analytic reference is attached).
std::string report_csv(const SimulationReport& r);

} // namespace burnoff

#endif
