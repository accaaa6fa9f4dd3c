#ifndef BURNOFF_BIJECTION_HPP
#define BURNOFF_BIJECTION_HPP

#include "burnoff/configuration.hpp"
#include "burnoff/graph.hpp"
#include "burnoff/spanning_trees.hpp"

#include <memory>
#include <string>
#include <vector>

namespace burnoff {

/// Step-by-step record of one direction of the correspondence, for the CLI's
/// --trace output and for the layer-soundness tests.
struct BijectionTrace {
    struct VertexStep {
        int vertex;
        int layer;                       // 1-based layer the vertex was considered in
        std::vector<int> earlier_neighbors; // concatenated N_1..N_{layer-1}
        int pick;                        // 1-based position used; 0 when dropped
        bool dropped;                    // config_to_tree only
    };

    /// Final contents of each layer, layers[0] being the vertices joined
    /// directly to the apex.
    std::vector<std::vector<int>> layers;
    std::vector<VertexStep> steps;
};

/// Maps a relaxed legal configuration on a connected graph to a spanning
/// tree of the cone. Grows the tree from the apex in layers: critical
/// vertices attach to the apex; each later candidate u with deficiency
/// j = deg(u) - chips(u) attaches to the j-th of its already-placed
/// neighbors (listed layer by layer, increasing index within a layer), or is
/// postponed when it has fewer than j of them.
SpanningTree config_to_tree(const Configuration& c, BijectionTrace* trace = nullptr);

/// Inverse map. Layers are the tree's breadth-first levels from the apex
/// (increasing index within a level); apex neighbors become critical, and a
/// vertex whose tree parent is the t-th of its earlier-layer neighbors gets
/// deg(u) - t chips. Output is relaxed and legal. The tree must be a
/// spanning tree of the cone of `base`, which must be connected.
Configuration tree_to_config(std::shared_ptr<const Graph> base,
                             const SpanningTree& t,
                             BijectionTrace* trace = nullptr);

/// Parses the tree text format for the cone of `base`: one edge per line,
/// "u v" with the apex written as the letter x (e.g. "x 2"). Validates that
/// the result is a spanning tree of the cone.
SpanningTree parse_tree(std::istream& in, const Graph& base);

SpanningTree parse_tree_string(const std::string& text, const Graph& base);

SpanningTree parse_tree_file(const std::string& path, const Graph& base);

/// One edge per line, apex rendered as x, edges sorted with apex edges
/// written "x v" after the base edges.
std::string format_tree(const SpanningTree& t, const Graph& base);

/// Human-readable rendering of a trace, one line per layer and per step.
std::string format_trace(const BijectionTrace& trace, const Graph& base);

} // namespace burnoff

#endif
