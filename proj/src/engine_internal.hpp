#ifndef BURNOFF_ENGINE_INTERNAL_HPP
#define BURNOFF_ENGINE_INTERNAL_HPP

#include "burnoff/graph.hpp"

#include <span>
#include <vector>

/* Allocation-free cores of the chip engine. The brute-force enumerator and
 * the exhaustive distribution oracle run these tens of millions of times, so
 * they work on raw chip vectors and caller-owned scratch buffers. The public
 * Configuration-based operations wrap them. */

namespace burnoff::detail {

struct RelaxScratch {
    std::vector<int> queue;
    std::vector<char> queued;
    std::vector<char> fired;
};

/// Adds one chip at `seed` (pass seed = -1 to skip), then fires vertices in
/// first-in-first-out discovery order until none is supercritical. Mutates
/// `chips`; returns the number of firings. s.fired marks fired vertices.
int seed_and_relax_in_place(const Graph& g, std::vector<int>& chips, int seed,
                            RelaxScratch& s);

struct BurnScratch {
    std::vector<int> residual;
    std::vector<char> pushed;
    std::vector<int> heap;
    std::vector<int> order;
};

/// Burning test on a relaxed chip vector. Deletes the smallest-index vertex
/// whose chips reach its degree in the shrinking graph, repeatedly.
/// Eligibility is monotone (deletions only lower residual degrees), so each
/// vertex enters the min-heap at most once. Fills s.order with the deletion
/// order; returns true iff every vertex burned.
bool burn_in_place(const Graph& g, std::span<const int> chips, BurnScratch& s);

} // namespace burnoff::detail

#endif
