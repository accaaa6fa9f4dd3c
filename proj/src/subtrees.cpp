#include "burnoff/subtrees.hpp"

#include "burnoff/errors.hpp"
#include "burnoff/spanning_trees.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace burnoff {

namespace {

std::vector<int> unpack(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        const int v = std::countr_zero(mask);
        out.push_back(v);
        mask &= mask - 1;
    }
    return out; // ascending by construction
}

/* Classic include/exclude recursion: branch on the lowest candidate bit.
 * "Excluded" vertices go into a banned mask so no set is produced twice. */
void grow(const std::vector<std::uint64_t>& adj, int size, std::uint64_t set,
          int set_size, std::uint64_t candidates, std::uint64_t banned,
          const std::function<void(std::span<const int>)>& visit) {
    if (set_size == size) {
        const auto vertices = unpack(set);
        visit(vertices);
        return;
    }
    if (candidates == 0) return;
    const int u = std::countr_zero(candidates);
    const std::uint64_t u_bit = std::uint64_t{1} << u;

    const std::uint64_t with_u = set | u_bit;
    grow(adj, size, with_u, set_size + 1,
         (candidates | adj[u]) & ~with_u & ~banned, banned, visit);
    grow(adj, size, set, set_size, candidates & ~u_bit, banned | u_bit, visit);
}

} // namespace

void for_each_connected_set(const Graph& g, int root, int size,
                            const std::function<void(std::span<const int>)>& visit) {
    const int n = g.vertex_count();
    if (root < 0 || root >= n)
        throw input_error("root vertex " + std::to_string(root) + " out of range");
    if (size < 1 || size > n)
        throw input_error("connected-set size must lie in [1, n]");
    if (n > 64)
        throw scale_error("connected-set enumeration is limited to 64 vertices");

    std::vector<std::uint64_t> adj(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) adj[v] |= std::uint64_t{1} << w;

    const std::uint64_t root_bit = std::uint64_t{1} << root;
    grow(adj, size, root_bit, 1, adj[root] & ~root_bit, 0, visit);
}

void for_each_rooted_subtree(const Graph& g, int root, int size,
                             const std::function<void(const Subtree&)>& visit) {
    for_each_connected_set(g, root, size, [&](std::span<const int> vertices) {
        const std::vector<int> set(vertices.begin(), vertices.end());
        const Graph sub = g.induced(set);
        for_each_spanning_tree(sub, [&](const SpanningTree& local) {
            Subtree t;
            t.vertices = set;
            t.edges.reserve(local.edges.size());
            for (const auto& [a, b] : local.edges)
                t.edges.emplace_back(set[a], set[b]); // set[] is increasing, order kept
            std::sort(t.edges.begin(), t.edges.end());
            visit(t);
        });
    });
}

} // namespace burnoff
