#ifndef BURNOFF_GRAPH_HPP
#define BURNOFF_GRAPH_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace burnoff {

/// Undirected edge, normalized so that first < second.
using Edge = std::pair<int, int>;

/// Finite simple undirected graph on vertices 0..n-1. Immutable after
/// construction; all derived-graph operations return new objects.
class Graph {
public:
    /// The empty graph (n = 0).
    Graph() = default;

    /// Builds a graph from an edge list. Endpoints may come in either order.
    /// Rejects out-of-range endpoints, self-loops and duplicate edges.
    Graph(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    int degree(int v) const;

    /// Neighbors of v in increasing index order.
    std::span<const int> neighbors(int v) const;

    bool has_edge(int u, int v) const;

    /// All edges, normalized and sorted lexicographically.
    std::vector<Edge> edges() const;

    /// Structural equality: same vertex count and same edge set.
    bool operator==(const Graph& other) const;

    /// Copy of this graph with one edge removed; the edge must exist.
    Graph without_edge(int u, int v) const;

    /// Induced subgraph on `vertices` (must be sorted, unique, in range).
    /// Vertex i of the result corresponds to vertices[i].
    Graph induced(std::span<const int> vertices) const;

    /// Induced subgraph on the complement of `vertices` (same requirements).
    Graph without_vertices(std::span<const int> vertices) const;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
};

bool is_connected(const Graph& g);

/// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<int>> components(const Graph& g);

/// A graph together with its cone: the base plus one new apex vertex that is
/// adjacent to every base vertex. The apex is always index base.vertex_count().
class ConeGraph {
public:
    explicit ConeGraph(Graph base);

    const Graph& base() const { return base_; }

    /// The full cone graph on base.vertex_count() + 1 vertices.
    const Graph& full() const { return full_; }

    int apex() const { return base_.vertex_count(); }

private:
    Graph base_;
    Graph full_;
};

/// Convenience builder, cone(g).full() is the cone graph itself.
ConeGraph cone(const Graph& base);

namespace families {

/// Path on n >= 1 vertices: edges {i, i+1}.
Graph path(int n);

/// Cycle on n >= 3 vertices: the path plus the closing edge {0, n-1}.
Graph cycle(int n);

/// Complete graph on n >= 1 vertices.
Graph complete(int n);

/// Star on n >= 1 vertices: center 0 adjacent to 1..n-1.
Graph star(int n);

/// Triangle 0-1-2 with a pendant vertex 3 attached to vertex 0.
Graph k3_pendant();

/// Builds a family member by name ("path", "cycle", "complete", "star",
/// "k3_pendant"). Families other than k3_pendant require a size parameter.
Graph by_name(const std::string& name, int parameter);

} // namespace families

/// Parses the plain-text graph format:
///   - first significant line: "n m"
///   - then m lines "u v" with 0 <= u < v < n
///   - '#' starts a comment, blank lines are ignored
/// Throws input_error with a line number on any violation, including
/// duplicate edges and a wrong edge count.
Graph parse_graph(std::istream& in);

Graph parse_graph_string(const std::string& text);

/// Reads a graph file; file-open failures are reported as input_error.
Graph parse_graph_file(const std::string& path);

/// Inverse of parse_graph: header line plus sorted edge lines.
std::string format_graph(const Graph& g);

} // namespace burnoff

#endif
