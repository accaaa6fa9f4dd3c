#ifndef BURNOFF_TESTS_SUPPORT_HPP
#define BURNOFF_TESTS_SUPPORT_HPP

#include "burnoff/bigint.hpp"
#include "burnoff/configuration.hpp"
#include "burnoff/graph.hpp"
#include "burnoff/rng.hpp"
#include "burnoff/subtrees.hpp"
#include "burnoff/tree_count.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <vector>

/* Test-side helpers. The oracles here are kept deliberately primitive and
 * independent of the library's production code paths, so agreement between
 * the two is evidence, not circularity. */

namespace burnoff::testing {

inline std::shared_ptr<const Graph> shared(Graph g) {
    return std::make_shared<const Graph>(std::move(g));
}

/// Every labeled graph on n vertices, one per subset of the possible edges.
inline std::vector<Graph> all_labeled_graphs(int n, bool connected_only) {
    std::vector<Edge> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (mask >> i & 1) edges.push_back(slots[i]);
        Graph g(n, edges);
        if (connected_only && !is_connected(g)) continue;
        out.push_back(std::move(g));
    }
    return out;
}

/// Erdos-Renyi draw conditioned on connectivity (resamples until connected).
inline Graph random_connected_graph(int n, double edge_probability, SplitMix64& rng) {
    const auto threshold = static_cast<std::uint64_t>(
        edge_probability * 18446744073709551616.0 /* 2^64 */);
    for (;;) {
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.next() < threshold) edges.emplace_back(u, v);
        Graph g(n, edges);
        if (is_connected(g)) return g;
    }
}

/// Membership oracle for R: a relaxed configuration is legal iff the
/// vertices admit an ordering w_1..w_n with chips(w_i) >= |neighbors of w_i
/// among earlier w_j|. Tries all n! orderings; non-relaxed inputs are
/// outside this characterization and report false.
inline bool legal_by_permutations(const Configuration& c) {
    if (!c.relaxed()) return false;
    const Graph& g = c.graph();
    const int n = g.vertex_count();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            int earlier_neighbors = 0;
            for (int j = 0; j < i; ++j)
                if (g.has_edge(order[i], order[j])) ++earlier_neighbors;
            ok = c.chips(order[i]) >= earlier_neighbors;
        }
        if (ok) return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

/// Relaxation oracle with a different firing policy than the engine's
/// first-in-first-out queue: always fire the highest-index supercritical
/// vertex. Order independence says the results must agree anyway.
inline GameResult naive_seed_and_relax(const Configuration& c, int seed) {
    const Graph& g = c.graph();
    const int n = g.vertex_count();
    std::vector<int> chips(c.chips().begin(), c.chips().end());
    ++chips[seed];
    std::vector<char> fired_flag(n, 0);
    int length = 0;
    for (;;) {
        int pick = -1;
        for (int v = n - 1; v >= 0; --v)
            if (chips[v] > g.degree(v)) {
                pick = v;
                break;
            }
        if (pick < 0) break;
        chips[pick] -= g.degree(pick) + 1;
        for (int w : g.neighbors(pick)) ++chips[w];
        fired_flag[pick] = 1;
        ++length;
    }
    std::vector<int> fired;
    for (int v = 0; v < n; ++v)
        if (fired_flag[v]) fired.push_back(v);
    return GameResult{length, std::move(fired),
                      Configuration(c.graph_ptr(), std::move(chips))};
}

/// Literal count of positive-length pairs: walk every subtree with `length`
/// vertices rooted at every seed and add the legal patterns off its vertex
/// set, one term per tree. The production count groups terms by vertex set;
/// this path does not, which is the point.
inline BigInt count_length_ell_pairs_by_trees(const Graph& g, int length) {
    BigInt total = 0;
    for (int seed = 0; seed < g.vertex_count(); ++seed)
        for_each_rooted_subtree(g, seed, length, [&](const Subtree& t) {
            total += tree_count(cone(g.without_vertices(t.vertices)).full());
        });
    return total;
}

} // namespace burnoff::testing

#endif
