#ifndef BURNOFF_ENUMERATION_HPP
#define BURNOFF_ENUMERATION_HPP

#include "burnoff/bigint.hpp"
#include "burnoff/configuration.hpp"
#include "burnoff/graph.hpp"

#include <memory>
#include <string>
#include <vector>

namespace burnoff {

/// Exact distribution of game lengths over all (configuration, seed) pairs
/// with the configuration relaxed and legal and the seed uniform: counts[l]
/// is the number of pairs whose relaxation fires exactly l times.
struct LengthDistribution {
    std::vector<BigInt> counts; // indexed by length, size n+1
    BigInt total;               // sum of counts = |R| * n

    /// counts[length] / total as an exact rational.
    Rational probability(int length) const;

    bool operator==(const LengthDistribution& other) const = default;
};

/// All relaxed legal configurations on g, in lexicographic chip order, found
/// by testing every chip vector in the box prod_v [0, deg(v)]. The box size
/// is capped at 10^7 boxes; larger graphs raise scale_error.
std::vector<Configuration> enumerate_legal_configurations(std::shared_ptr<const Graph> g);

/// |R| without enumeration: the spanning-tree count of the cone.
BigInt count_legal_configurations(const Graph& g);

/// Number of pairs whose game has length zero, computed as the sum over
/// vertices v of the cone's spanning-tree count with the apex-to-v edge
/// removed. g must be connected.
BigInt count_length_zero_pairs(const Graph& g);

/// Number of pairs whose game has length l >= 1: the sum over vertices v and
/// connected sets S of size l containing v of
///     tree_count(g[S]) * tree_count(cone(g - S)),
/// the first factor counting the possible sets of fired vertices spanning S
/// and the second the legal chip patterns off S. g must be connected.
BigInt count_length_ell_pairs(const Graph& g, int length);

/// Full distribution from the closed-form counts above. Enforces that the
/// counts add up to |R| * n. g must be connected. Lengths are computed in
/// `threads` parallel chunks when threads > 1 (identical results either way).
LengthDistribution distribution_analytic(const Graph& g, int threads = 1);

/// Same distribution the slow way: enumerate R, play every (config, seed)
/// pair, tally lengths. Kept deliberately independent of the closed-form
/// path so the two can verify each other. Subject to the enumeration scale
/// cap, plus a cap of 10^7 on |R| * n games.
LengthDistribution distribution_oracle(std::shared_ptr<const Graph> g, int threads = 1);

/// CSV artifact: header "length,count,total,probability", one row per
/// length 0..n. Probabilities follow the decimal_string rendering rule.
std::string distribution_csv(const LengthDistribution& d);

/// JSON artifact with the same content; counts and total are decimal strings
/// so values beyond 2^53 survive any JSON reader.
std::string distribution_json(const LengthDistribution& d);

} // namespace burnoff

#endif
