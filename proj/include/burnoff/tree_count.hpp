#ifndef BURNOFF_TREE_COUNT_HPP
#define BURNOFF_TREE_COUNT_HPP

#include "burnoff/bigint.hpp"
#include "burnoff/graph.hpp"

#include <vector>

namespace burnoff {

/// Determinant of an integer matrix by Bareiss fraction-free elimination.
/// Every intermediate value is an exact integer (each division is exact),
/// so there is no rounding at any size. Exposed for direct testing.
BigInt determinant(std::vector<std::vector<BigInt>> m);

/// Number of spanning trees by the Matrix-Tree theorem: the determinant of
/// the Laplacian with one row and column deleted. Conventions:
///   - empty graph and single vertex have exactly one spanning tree,
///   - a disconnected graph has zero.
BigInt tree_count(const Graph& g);

/// Spanning trees of the cone with the apex-to-v edge removed.
/// v must be a base vertex.
BigInt tree_count_minus_apex_edge(const ConeGraph& c, int v);

} // namespace burnoff

#endif
