#ifndef BURNOFF_SUBTREES_HPP
#define BURNOFF_SUBTREES_HPP

#include "burnoff/graph.hpp"

#include <functional>
#include <span>
#include <vector>

namespace burnoff {

/// A subtree of a host graph: a vertex subset together with tree edges on it.
/// Both lists are sorted; two subtrees are equal iff both lists agree.
struct Subtree {
    std::vector<int> vertices;
    std::vector<Edge> edges;

    bool operator==(const Subtree& other) const = default;
};

/// Visits each connected vertex set of g of the given size that contains
/// `root`, exactly once, as a sorted vertex list. Uses 64-bit vertex masks,
/// so vertex counts above 64 raise scale_error. size must be in [1, n].
void for_each_connected_set(const Graph& g, int root, int size,
                            const std::function<void(std::span<const int>)>& visit);

/// Visits every subtree of g with `size` vertices one of which is `root`,
/// exactly once: for each qualifying connected set, every spanning tree of
/// the induced subgraph. Distinct edge sets on the same vertex set are
/// distinct subtrees.
void for_each_rooted_subtree(const Graph& g, int root, int size,
                             const std::function<void(const Subtree&)>& visit);

} // namespace burnoff

#endif
