#include "burnoff/bijection.hpp"

#include "burnoff/errors.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <functional>
#include <istream>
#include <numeric>
#include <sstream>

namespace burnoff {

namespace {

/* Concatenation N_1..N_{i-1} for vertex u: its graph neighbors that sit in
 * the layers built so far, listed layer by layer and by increasing index
 * inside a layer (each layer is stored sorted). Positions in this list are
 * what the chip counts encode. */
std::vector<int> earlier_layer_neighbors(const Graph& g, int u,
                                         const std::vector<std::vector<int>>& layers,
                                         std::size_t limit) {
    std::vector<int> out;
    for (std::size_t r = 0; r < limit && r < layers.size(); ++r)
        for (int w : layers[r])
            if (g.has_edge(u, w)) out.push_back(w);
    return out;
}

} // namespace

SpanningTree config_to_tree(const Configuration& c, BijectionTrace* trace) {
    const Graph& g = c.graph();
    const int n = g.vertex_count();
    const int apex = n;
    if (!is_connected(g)) throw input_error("the correspondence needs a connected graph");
    if (!c.relaxed())
        throw precondition_error("configuration must be relaxed");
    const BurningResult burning = burn(c);
    if (!burning.legal) {
        std::string msg = "configuration is not legal: burning deletes only " +
                          std::to_string(burning.deletion_order.size()) + " of " +
                          std::to_string(n) + " vertices; stuck:";
        for (int v : burning.stuck) msg += ' ' + std::to_string(v);
        throw precondition_error(msg);
    }

    if (trace) *trace = BijectionTrace{};

    std::vector<Edge> edges;
    edges.reserve(n);
    std::vector<char> placed(n, 0);
    std::vector<std::vector<int>> layers;

    /* layer 1: critical vertices hang off the apex */
    std::vector<int> first;
    for (int v = 0; v < n; ++v)
        if (c.chips(v) == g.degree(v)) {
            first.push_back(v);
            placed[v] = 1;
            edges.emplace_back(v, apex);
            if (trace) trace->steps.push_back({v, 1, {}, 0, false});
        }
    layers.push_back(std::move(first));
    int placed_count = static_cast<int>(layers[0].size());

    while (placed_count < n) {
        /* candidates: unplaced neighbors of the previous layer, ascending */
        std::vector<int> candidates;
        for (int w : layers.back())
            for (int u : g.neighbors(w))
                if (!placed[u]) candidates.push_back(u);
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()),
                         candidates.end());
        assert(!candidates.empty()); // legality guarantees progress

        const int layer_number = static_cast<int>(layers.size()) + 1;
        std::vector<int> survivors;
        for (int u : candidates) {
            const auto earlier = earlier_layer_neighbors(g, u, layers, layers.size());
            const int s = static_cast<int>(earlier.size());
            /* u is not critical here, so the deficiency j is at least 1 */
            const int j = g.degree(u) - c.chips(u);
            if (j > s) {
                /* too few placed neighbors yet; u waits for a later layer */
                if (trace) trace->steps.push_back({u, layer_number, earlier, 0, true});
                continue;
            }
            edges.emplace_back(u, earlier[j - 1]);
            placed[u] = 1;
            survivors.push_back(u);
            if (trace) trace->steps.push_back({u, layer_number, earlier, j, false});
        }
        assert(!survivors.empty());
        placed_count += static_cast<int>(survivors.size());
        layers.push_back(std::move(survivors));
    }

    if (trace) trace->layers = layers;

    SpanningTree t;
    t.edges.reserve(edges.size());
    for (auto [a, b] : edges) t.edges.emplace_back(std::min(a, b), std::max(a, b));
    std::sort(t.edges.begin(), t.edges.end());
    assert(is_spanning_tree(cone(g).full(), t));
    return t;
}

Configuration tree_to_config(std::shared_ptr<const Graph> base, const SpanningTree& t,
                             BijectionTrace* trace) {
    const Graph& g = *base;
    const int n = g.vertex_count();
    const int apex = n;
    if (!is_connected(g)) throw input_error("the correspondence needs a connected graph");

    /* validate: n edges of the cone, connecting all n+1 vertices */
    if (static_cast<int>(t.edges.size()) != n)
        throw input_error("spanning tree of the cone must have " + std::to_string(n) +
                          " edges, got " + std::to_string(t.edges.size()));
    std::vector<std::vector<int>> tree_adj(n + 1);
    {
        std::vector<int> comp(n + 1);
        std::iota(comp.begin(), comp.end(), 0);
        const std::function<int(int)> find = [&](int v) {
            while (comp[v] != v) v = comp[v] = comp[comp[v]];
            return v;
        };
        for (const auto& [a, b] : t.edges) {
            if (a < 0 || a > apex || b < 0 || b > apex || a == b)
                throw input_error("tree edge out of range");
            if (a != apex && b != apex && !g.has_edge(a, b))
                throw input_error("tree edge " + std::to_string(a) + " " +
                                  std::to_string(b) + " is not an edge of the cone");
            if (find(a) == find(b)) throw input_error("tree edges contain a cycle");
            comp[find(a)] = find(b);
            tree_adj[a].push_back(b);
            tree_adj[b].push_back(a);
        }
        /* n edges and no cycle on n+1 vertices: spanning is automatic */
    }

    if (trace) *trace = BijectionTrace{};

    /* layers = breadth-first levels from the apex, sorted inside a level */
    std::vector<int> depth(n + 1, -1);
    depth[apex] = 0;
    std::vector<std::vector<int>> layers;
    std::vector<int> current{apex};
    while (true) {
        std::vector<int> next;
        for (int v : current)
            for (int w : tree_adj[v])
                if (depth[w] < 0) {
                    depth[w] = depth[v] + 1;
                    next.push_back(w);
                }
        if (next.empty()) break;
        std::sort(next.begin(), next.end());
        layers.push_back(next);
        current = std::move(next);
    }

    std::vector<int> chips(n, 0);
    for (int u : layers[0]) {
        chips[u] = g.degree(u);
        if (trace) trace->steps.push_back({u, 1, {}, 0, false});
    }
    for (std::size_t i = 1; i < layers.size(); ++i) {
        for (int u : layers[i]) {
            const auto earlier = earlier_layer_neighbors(g, u, layers, i);
            /* the unique tree parent sits one level up; u itself has
             * depth i + 1 */
            int parent = -1;
            for (int w : tree_adj[u])
                if (depth[w] == static_cast<int>(i)) parent = w;
            assert(parent >= 0);
            const auto at = std::find(earlier.begin(), earlier.end(), parent);
            assert(at != earlier.end());
            const int position = static_cast<int>(at - earlier.begin()) + 1;
            chips[u] = g.degree(u) - position;
            if (trace)
                trace->steps.push_back({u, static_cast<int>(i) + 1, earlier, position, false});
        }
    }

    if (trace) trace->layers = layers;

    Configuration result(std::move(base), std::move(chips));
    assert(is_legal(result));
    return result;
}

namespace {

int parse_tree_endpoint(const std::string& token, int n, int line) {
    if (token == "x") return n;
    std::istringstream s(token);
    long long v;
    char extra;
    if (!(s >> v) || s >> extra || v < 0 || v >= n)
        throw input_error("line " + std::to_string(line) +
                          ": tree endpoint must be x or a vertex index, got '" + token +
                          "'");
    return static_cast<int>(v);
}

} // namespace

SpanningTree parse_tree(std::istream& in, const Graph& base) {
    const int n = base.vertex_count();
    SpanningTree t;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream s(line);
        std::string a, b;
        if (!(s >> a)) continue; // blank
        if (!(s >> b))
            throw input_error("line " + std::to_string(number) + ": expected two endpoints");
        std::string tail;
        if (s >> tail)
            throw input_error("line " + std::to_string(number) + ": trailing token '" +
                              tail + "'");
        const int u = parse_tree_endpoint(a, n, number);
        const int v = parse_tree_endpoint(b, n, number);
        if (u == v) throw input_error("line " + std::to_string(number) + ": self-loop");
        t.edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(t.edges.begin(), t.edges.end());
    if (!is_spanning_tree(cone(base).full(), t))
        throw input_error("edge list is not a spanning tree of the cone");
    return t;
}

SpanningTree parse_tree_string(const std::string& text, const Graph& base) {
    std::istringstream in(text);
    return parse_tree(in, base);
}

SpanningTree parse_tree_file(const std::string& path, const Graph& base) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open tree file: " + path);
    return parse_tree(in, base);
}

std::string format_tree(const SpanningTree& t, const Graph& base) {
    const int apex = base.vertex_count();
    std::ostringstream out;
    /* edges are sorted, and apex edges (v, apex) sort after base edges with
     * the same v, so base edges come out grouped naturally; render the apex
     * as x */
    for (const auto& [a, b] : t.edges) {
        out << a << ' ';
        if (b == apex)
            out << 'x';
        else
            out << b;
        out << '\n';
    }
    return out.str();
}

std::string format_trace(const BijectionTrace& trace, const Graph& base) {
    const int apex = base.vertex_count();
    std::ostringstream out;
    const auto name = [&](int v) {
        return v == apex ? std::string("x") : std::to_string(v);
    };
    for (std::size_t i = 0; i < trace.layers.size(); ++i) {
        out << "layer " << i + 1 << ':';
        for (int v : trace.layers[i]) out << ' ' << name(v);
        out << '\n';
    }
    for (const auto& step : trace.steps) {
        out << "vertex " << step.vertex << " (layer " << step.layer << "): earlier [";
        for (std::size_t k = 0; k < step.earlier_neighbors.size(); ++k) {
            if (k) out << ' ';
            out << step.earlier_neighbors[k];
        }
        out << "]";
        if (step.dropped)
            out << " postponed\n";
        else if (step.pick == 0)
            out << " -> apex\n";
        else
            out << " -> position " << step.pick << " (vertex "
                << step.earlier_neighbors[step.pick - 1] << ")\n";
    }
    return out.str();
}

} // namespace burnoff
