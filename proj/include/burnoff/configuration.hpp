#ifndef BURNOFF_CONFIGURATION_HPP
#define BURNOFF_CONFIGURATION_HPP

#include "burnoff/graph.hpp"
#include "burnoff/rng.hpp"

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace burnoff {

/// Chip configuration on a fixed graph: a nonnegative chip count per vertex.
/// Bound to its graph through a shared pointer; operations on configurations
/// from different graphs are rejected.
class Configuration {
public:
    Configuration(std::shared_ptr<const Graph> graph, std::vector<int> chips);

    static Configuration zeros(std::shared_ptr<const Graph> graph);

    /// The configuration with chips(v) = degree(v) everywhere, the maximum
    /// relaxed configuration.
    static Configuration all_critical(std::shared_ptr<const Graph> graph);

    const Graph& graph() const { return *graph_; }
    const std::shared_ptr<const Graph>& graph_ptr() const { return graph_; }

    int chips(int v) const;
    std::span<const int> chips() const { return chips_; }

    long long total_chips() const;

    /// True iff no vertex is supercritical, i.e. chips(v) <= degree(v) for
    /// all v.
    bool relaxed() const;

    /// Same underlying graph (pointer or structural) and same chip vector.
    bool operator==(const Configuration& other) const;
    bool operator<(const Configuration& other) const { return chips_ < other.chips_; }

private:
    std::shared_ptr<const Graph> graph_;
    std::vector<int> chips_;
};

/// Outcome of relaxing a configuration: number of firings, the set of
/// vertices that fired (sorted, each listed once even if it fired more than
/// once) and the relaxed final configuration.
struct GameResult {
    int length;
    std::vector<int> fired;
    Configuration final_config;
};

/// Fires v: v must be supercritical (chips(v) > degree(v)). v loses
/// degree(v)+1 chips, each neighbor gains one, and one chip leaves the game.
Configuration fire(const Configuration& c, int v);

/// Exact inverse of fire: every neighbor of v must hold at least one chip.
/// Each neighbor loses one chip and v gains degree(v)+1.
Configuration reverse_fire(const Configuration& c, int v);

/// Adds one chip at `seed` and fires supercritical vertices until none is
/// left, in first-in-first-out discovery order. Always terminates: each
/// firing removes a chip from play. The result length and final state are
/// independent of firing order; only this op's tie-breaking is fixed.
GameResult seed_and_relax(const Configuration& c, int seed);

/// Same game, but each firing picks uniformly at random among the vertices
/// currently supercritical. Exists so order-independence is testable against
/// the deterministic overload.
GameResult seed_and_relax(const Configuration& c, int seed, SplitMix64& order);

/// Result of the burning test. Vertices are deleted greedily (smallest
/// eligible index first); a vertex is eligible when its chips reach its
/// degree in the shrinking graph. The configuration is legal iff everything
/// burns. Legality is independent of relaxedness: membership in R requires
/// legal and relaxed.
struct BurningResult {
    bool legal;

    /// Greedy deletion order; a prefix of the vertices when not legal.
    std::vector<int> deletion_order;

    /// Vertices never deleted; empty iff legal.
    std::vector<int> stuck;

    /// The deletion order reversed. When legal, this ordering w_1..w_n
    /// satisfies chips(w_i) >= |{earlier w_j adjacent to w_i}|, the
    /// certificate that relaxing from here can re-reach the configuration.
    std::vector<int> relabeling() const;
};

/// Runs the burning test on any configuration, relaxed or not.
BurningResult burn(const Configuration& c);

/// True iff c passes the burning test.
bool is_legal(const Configuration& c);

/// Decides reachability by breadth-first search over relaxed states: can
/// `to` be reached from `from` by a (possibly empty) sequence of games, each
/// adding one chip somewhere and relaxing? Both configurations must be
/// relaxed and on the same graph. Exhaustive, so graphs above 4 vertices
/// raise scale_error.
bool is_recurrent_reachable(const Configuration& from, const Configuration& to);

/// Parses one line of whitespace-separated chip counts for `graph`;
/// wrong arity or negative entries raise input_error.
Configuration parse_configuration(const std::string& line,
                                  std::shared_ptr<const Graph> graph);

Configuration parse_configuration_file(const std::string& path,
                                       std::shared_ptr<const Graph> graph);

/// One line, space-separated chip counts, no trailing newline.
std::string format_configuration(const Configuration& c);

} // namespace burnoff

#endif
