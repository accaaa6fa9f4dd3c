#include "burnoff/graph.hpp"

#include "burnoff/errors.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

namespace burnoff {

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n) {
    if (n < 0) throw input_error("vertex count must be nonnegative");
    adj_.resize(n);
    for (const auto& [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw input_error("edge endpoint out of range: " + std::to_string(a) + " " +
                              std::to_string(b));
        if (a == b) throw input_error("self-loop at vertex " + std::to_string(a));
        adj_[a].push_back(b);
        adj_[b].push_back(a);
    }
    for (auto& list : adj_) {
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end())
            throw input_error("duplicate edge in edge list");
    }
    m_ = static_cast<int>(edges.size());
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw input_error("vertex index " + std::to_string(v) + " out of range [0, " +
                          std::to_string(n_) + ")");
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

std::span<const int> Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out; // already lexicographic: u ascending, adj_ sorted
}

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
}

Graph Graph::without_edge(int u, int v) const {
    if (!has_edge(u, v))
        throw input_error("edge " + std::to_string(u) + " " + std::to_string(v) +
                          " not present");
    auto rest = edges();
    const Edge target{std::min(u, v), std::max(u, v)};
    rest.erase(std::find(rest.begin(), rest.end(), target));
    return Graph(n_, rest);
}

Graph Graph::induced(std::span<const int> vertices) const {
    std::vector<int> local(n_, -1);
    int next = 0, prev = -1;
    for (int v : vertices) {
        check_vertex(v);
        if (v <= prev) throw input_error("induced-subgraph vertex list must be sorted and unique");
        prev = v;
        local[v] = next++;
    }
    std::vector<Edge> sub;
    for (int v : vertices)
        for (int w : adj_[v])
            if (v < w && local[w] >= 0) sub.emplace_back(local[v], local[w]);
    return Graph(next, sub);
}

Graph Graph::without_vertices(std::span<const int> vertices) const {
    std::vector<char> drop(n_, 0);
    int prev = -1;
    for (int v : vertices) {
        check_vertex(v);
        if (v <= prev) throw input_error("vertex list must be sorted and unique");
        prev = v;
        drop[v] = 1;
    }
    std::vector<int> keep;
    keep.reserve(n_ - vertices.size());
    for (int v = 0; v < n_; ++v)
        if (!drop[v]) keep.push_back(v);
    return induced(keep);
}

std::vector<std::vector<int>> components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> label(n, -1);
    std::vector<std::vector<int>> out;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (label[s] >= 0) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        label[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            for (int w : g.neighbors(v))
                if (label[w] < 0) {
                    label[w] = id;
                    stack.push_back(w);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool is_connected(const Graph& g) {
    return g.vertex_count() <= 1 || components(g).size() == 1;
}

ConeGraph::ConeGraph(Graph base) : base_(std::move(base)) {
    const int n = base_.vertex_count();
    auto all = base_.edges();
    all.reserve(all.size() + n);
    for (int v = 0; v < n; ++v) all.emplace_back(v, n);
    full_ = Graph(n + 1, all);
}

ConeGraph cone(const Graph& base) { return ConeGraph(base); }

namespace families {

Graph path(int n) {
    if (n < 1) throw input_error("path size must be at least 1");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph cycle(int n) {
    if (n < 3) throw input_error("cycle size must be at least 3");
    auto g = path(n);
    auto e = g.edges();
    e.emplace_back(0, n - 1);
    return Graph(n, e);
}

Graph complete(int n) {
    if (n < 1) throw input_error("complete-graph size must be at least 1");
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, e);
}

Graph star(int n) {
    if (n < 1) throw input_error("star size must be at least 1");
    std::vector<Edge> e;
    for (int v = 1; v < n; ++v) e.emplace_back(0, v);
    return Graph(n, e);
}

Graph k3_pendant() {
    return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
}

Graph by_name(const std::string& name, int parameter) {
    if (name == "path") return path(parameter);
    if (name == "cycle") return cycle(parameter);
    if (name == "complete") return complete(parameter);
    if (name == "star") return star(parameter);
    if (name == "k3_pendant") return k3_pendant();
    throw input_error("unknown graph family: " + name);
}

} // namespace families

namespace {

/* Strips comments/blank lines and hands back significant lines with their
 * 1-based line numbers. */
std::vector<std::pair<int, std::string>> significant_lines(std::istream& in) {
    std::vector<std::pair<int, std::string>> out;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.emplace_back(number, line);
    }
    return out;
}

int parse_int_token(std::istringstream& s, int line, const char* what) {
    long long v;
    if (!(s >> v))
        throw input_error("line " + std::to_string(line) + ": expected " + what);
    if (v < 0 || v > 1'000'000'000)
        throw input_error("line " + std::to_string(line) + ": " + what + " out of range");
    return static_cast<int>(v);
}

void expect_line_end(std::istringstream& s, int line) {
    std::string tail;
    if (s >> tail)
        throw input_error("line " + std::to_string(line) + ": trailing token '" + tail + "'");
}

} // namespace

Graph parse_graph(std::istream& in) {
    const auto lines = significant_lines(in);
    if (lines.empty()) throw input_error("graph text is empty");

    std::istringstream header(lines[0].second);
    const int n = parse_int_token(header, lines[0].first, "vertex count");
    const int m = parse_int_token(header, lines[0].first, "edge count");
    expect_line_end(header, lines[0].first);

    if (static_cast<int>(lines.size()) - 1 != m)
        throw input_error("expected " + std::to_string(m) + " edge lines, found " +
                          std::to_string(lines.size() - 1));

    std::vector<Edge> edges;
    edges.reserve(m);
    for (int i = 1; i <= m; ++i) {
        const auto& [number, text] = lines[i];
        std::istringstream s(text);
        const int u = parse_int_token(s, number, "edge endpoint");
        const int v = parse_int_token(s, number, "edge endpoint");
        expect_line_end(s, number);
        if (!(u < v))
            throw input_error("line " + std::to_string(number) +
                              ": edge endpoints must satisfy u < v");
        if (v >= n)
            throw input_error("line " + std::to_string(number) + ": endpoint " +
                              std::to_string(v) + " out of range for " + std::to_string(n) +
                              " vertices");
        edges.emplace_back(u, v);
    }
    auto sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw input_error("duplicate edge in graph text");
    return Graph(n, edges);
}

Graph parse_graph_string(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

Graph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open graph file: " + path);
    return parse_graph(in);
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

} // namespace burnoff
