#include "burnoff/spanning_trees.hpp"

#include <algorithm>
#include <numeric>

namespace burnoff {

namespace {

/* Union-find with union by size and an undo stack, no path compression, so
 * the contraction recursion can roll back cheaply. */
class RollbackUnionFind {
public:
    explicit RollbackUnionFind(int n) : parent_(n), size_(n, 1), blocks_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int v) const {
        while (parent_[v] != v) v = parent_[v];
        return v;
    }

    int blocks() const { return blocks_; }

    /* Returns false (and records nothing) when already joined. */
    bool join(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        trail_.push_back(b);
        --blocks_;
        return true;
    }

    void undo() {
        const int b = trail_.back();
        trail_.pop_back();
        size_[parent_[b]] -= size_[b];
        parent_[b] = b;
        ++blocks_;
    }

private:
    mutable std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<int> trail_;
    int blocks_;
};

class TreeEnumerator {
public:
    TreeEnumerator(const Graph& g, const std::function<void(const SpanningTree&)>& visit)
        : edges_(g.edges()), visit_(visit), uf_(g.vertex_count()), n_(g.vertex_count()) {}

    void run() {
        if (n_ == 0) return;
        if (n_ == 1) {
            visit_(SpanningTree{});
            return;
        }
        if (blocks_connectable(0)) recurse(0);
    }

private:
    /* Can the remaining edges edges_[from..] merge the current blocks into
     * one? Plain BFS over block representatives. */
    bool blocks_connectable(std::size_t from) {
        std::vector<std::vector<int>> adj(n_);
        for (std::size_t i = from; i < edges_.size(); ++i) {
            const int a = uf_.find(edges_[i].first), b = uf_.find(edges_[i].second);
            if (a != b) {
                adj[a].push_back(b);
                adj[b].push_back(a);
            }
        }
        std::vector<char> seen(n_, 0);
        std::vector<int> stack{uf_.find(0)};
        seen[stack[0]] = 1;
        int reached = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
        }
        return reached == uf_.blocks();
    }

    void recurse(std::size_t pos) {
        if (uf_.blocks() == 1) {
            SpanningTree t{chosen_};
            std::sort(t.edges.begin(), t.edges.end());
            visit_(t);
            return;
        }
        /* skip edges that have become internal to a block */
        while (pos < edges_.size() &&
               uf_.find(edges_[pos].first) == uf_.find(edges_[pos].second))
            ++pos;
        if (pos >= edges_.size()) return;

        /* include edges_[pos]: contract */
        uf_.join(edges_[pos].first, edges_[pos].second);
        chosen_.push_back(edges_[pos]);
        recurse(pos + 1);
        chosen_.pop_back();
        uf_.undo();

        /* exclude edges_[pos]: only worth exploring while the rest can
         * still connect everything */
        if (blocks_connectable(pos + 1)) recurse(pos + 1);
    }

    std::vector<Edge> edges_;
    const std::function<void(const SpanningTree&)>& visit_;
    RollbackUnionFind uf_;
    std::vector<Edge> chosen_;
    int n_;
};

} // namespace

bool is_spanning_tree(const Graph& g, const SpanningTree& t) {
    const int n = g.vertex_count();
    if (static_cast<int>(t.edges.size()) != std::max(n - 1, 0)) return false;
    RollbackUnionFind uf(n);
    for (const auto& [u, v] : t.edges) {
        if (u < 0 || u >= n || v < 0 || v >= n || u == v) return false;
        if (!g.has_edge(u, v)) return false;
        if (!uf.join(u, v)) return false; // cycle
    }
    return n == 0 || uf.blocks() == 1;
}

void for_each_spanning_tree(const Graph& g,
                            const std::function<void(const SpanningTree&)>& visit) {
    TreeEnumerator(g, visit).run();
}

std::vector<SpanningTree> all_spanning_trees(const Graph& g) {
    std::vector<SpanningTree> out;
    for_each_spanning_tree(g, [&](const SpanningTree& t) { out.push_back(t); });
    return out;
}

} // namespace burnoff
