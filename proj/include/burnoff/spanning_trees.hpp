#ifndef BURNOFF_SPANNING_TREES_HPP
#define BURNOFF_SPANNING_TREES_HPP

#include "burnoff/graph.hpp"

#include <functional>
#include <vector>

namespace burnoff {

/// Edge set of a spanning tree, normalized and sorted lexicographically.
/// For a graph on n vertices this has exactly n-1 edges (0 for n <= 1).
struct SpanningTree {
    std::vector<Edge> edges;

    bool operator==(const SpanningTree& other) const = default;
    bool operator<(const SpanningTree& other) const { return edges < other.edges; }
};

/// True iff t is exactly a spanning tree of g: right edge count, every edge
/// present in g, and the edges connect all vertices.
bool is_spanning_tree(const Graph& g, const SpanningTree& t);

/// Visits every spanning tree of g exactly once, in a deterministic order,
/// by branching on edges (contract / delete) with a connectivity prune.
/// A disconnected graph yields nothing. Intended for graphs whose tree count
/// is enumerable at desk scale; there is no internal cutoff.
void for_each_spanning_tree(const Graph& g,
                            const std::function<void(const SpanningTree&)>& visit);

std::vector<SpanningTree> all_spanning_trees(const Graph& g);

} // namespace burnoff

#endif
