#include "burnoff/errors.hpp"
#include "burnoff/graph.hpp"
#include "burnoff/spanning_trees.hpp"
#include "burnoff/subtrees.hpp"
#include "burnoff/tree_count.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

using namespace burnoff;

TEST_CASE("graph construction and accessors") {
    const Graph g(4, {{0, 1}, {2, 0}, {1, 2}, {0, 3}});
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 4);
    CHECK(g.degree(0) == 3);
    CHECK(g.degree(3) == 1);
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(2, 0));
    CHECK_FALSE(g.has_edge(1, 3));
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}});
    const auto nbrs = g.neighbors(0);
    CHECK(std::vector<int>(nbrs.begin(), nbrs.end()) == std::vector<int>{1, 2, 3});

    CHECK_THROWS_AS(Graph(2, {{0, 0}}), input_error);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), input_error);
    CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), input_error);
    CHECK_THROWS_AS(g.degree(4), input_error);
    CHECK_THROWS_AS(g.without_edge(1, 3), input_error);
}

TEST_CASE("derived graphs") {
    const Graph g = families::k3_pendant();
    const Graph h = g.without_edge(1, 2);
    CHECK(h.edge_count() == 3);
    CHECK_FALSE(h.has_edge(1, 2));
    CHECK(g.has_edge(1, 2)); // original untouched

    const std::vector<int> tri{0, 1, 2};
    const Graph t = g.induced(tri);
    CHECK(t == families::complete(3));
    const std::vector<int> last{3};
    CHECK(g.without_vertices(last) == families::complete(3));
    const std::vector<int> unsorted{1, 0};
    CHECK_THROWS_AS(g.induced(unsorted), input_error);
}

TEST_CASE("connectivity") {
    CHECK(is_connected(Graph()));
    CHECK(is_connected(families::path(1)));
    CHECK(is_connected(families::cycle(5)));
    const Graph two_parts(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(is_connected(two_parts));
    const auto comp = components(two_parts);
    REQUIRE(comp.size() == 2);
    CHECK(comp[0] == std::vector<int>{0, 1});
    CHECK(comp[1] == std::vector<int>{2, 3});
}

TEST_CASE("families") {
    CHECK(families::path(4).edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(families::cycle(3) == families::complete(3));
    CHECK(families::star(4).edges() == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
    CHECK(families::complete(4).edge_count() == 6);
    CHECK(families::k3_pendant().edges() ==
          std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}});
    CHECK(families::by_name("path", 3) == families::path(3));
    CHECK_THROWS_AS(families::path(0), input_error);
    CHECK_THROWS_AS(families::cycle(2), input_error);
    CHECK_THROWS_AS(families::by_name("wheel", 4), input_error);
}

TEST_CASE("cone construction") {
    const ConeGraph c = cone(families::k3_pendant());
    CHECK(c.apex() == 4);
    CHECK(c.full().vertex_count() == 5);
    CHECK(c.full().edge_count() == 8);
    for (int v = 0; v < 4; ++v) CHECK(c.full().has_edge(v, 4));
    /* removing the apex recovers the base exactly */
    const std::vector<int> apex{4};
    CHECK(c.full().without_vertices(apex) == c.base());
    CHECK(cone(Graph()).full() == families::complete(1));
}

TEST_CASE("graph text round trip and errors") {
    const Graph g = families::k3_pendant();
    CHECK(format_graph(g) == "4 4\n0 1\n0 2\n0 3\n1 2\n");
    CHECK(parse_graph_string(format_graph(g)) == g);
    CHECK(parse_graph_string("# chips\n\n2 1 # header\n0 1\n") == families::path(2));
    CHECK(parse_graph_string("1 0\n") == families::path(1));

    CHECK_THROWS_AS(parse_graph_string(""), input_error);
    CHECK_THROWS_AS(parse_graph_string("2\n"), input_error);
    CHECK_THROWS_AS(parse_graph_string("2 1\n"), input_error);
    CHECK_THROWS_AS(parse_graph_string("2 1\n0 1\n0 1\n"), input_error);
    CHECK_THROWS_AS(parse_graph_string("2 2\n0 1\n0 1\n"), input_error);
    CHECK_THROWS_AS(parse_graph_string("3 1\n1 0\n"), input_error);
    CHECK_THROWS_AS(parse_graph_string("3 1\n0 3\n"), input_error);
    CHECK_THROWS_AS(parse_graph_string("3 1\n0 1 2\n"), input_error);
    CHECK_THROWS_AS(parse_graph_string("3 1\na b\n"), input_error);
    CHECK_THROWS_AS(parse_graph_file("/nonexistent/graph.txt"), input_error);
}

TEST_CASE("determinant on frozen matrices") {
    CHECK(determinant({}) == 1);
    CHECK(determinant({{BigInt(7)}}) == 7);
    CHECK(determinant({{BigInt(1), BigInt(2)}, {BigInt(3), BigInt(4)}}) == -2);
    /* needs a pivot swap */
    CHECK(determinant({{BigInt(0), BigInt(1)}, {BigInt(1), BigInt(0)}}) == -1);
    CHECK(determinant({{BigInt(0), BigInt(0)}, {BigInt(0), BigInt(1)}}) == 0);
    CHECK(determinant({{BigInt(2), BigInt(-1), BigInt(0)},
                       {BigInt(-1), BigInt(2), BigInt(-1)},
                       {BigInt(0), BigInt(-1), BigInt(2)}}) == 4);
}

TEST_CASE("spanning tree counts on known graphs") {
    CHECK(tree_count(Graph()) == 1);
    CHECK(tree_count(families::path(1)) == 1);
    CHECK(tree_count(families::path(5)) == 1);
    CHECK(tree_count(families::star(7)) == 1);
    CHECK(tree_count(families::cycle(4)) == 4);
    CHECK(tree_count(families::complete(3)) == 3);
    CHECK(tree_count(families::complete(4)) == 16);
    CHECK(tree_count(families::complete(5)) == 125); // Cayley: n^(n-2)
    CHECK(tree_count(Graph(4, {{0, 1}, {2, 3}})) == 0);
    CHECK(tree_count(Graph(3, {})) == 0);

    /* Cayley at a size where 64-bit arithmetic would still be fine but the
     * growth rate is visible: 18^16 */
    CHECK(tree_count(families::complete(18)) == BigInt("121439531096594251776"));
}

TEST_CASE("cone tree counts") {
    CHECK(tree_count(cone(families::path(1)).full()) == 1);
    CHECK(tree_count(cone(families::path(2)).full()) == 3);
    CHECK(tree_count(cone(families::path(3)).full()) == 8);  // fan: 1, 3, 8, 21
    CHECK(tree_count(cone(families::path(4)).full()) == 21);
    CHECK(tree_count(cone(families::complete(3)).full()) == 16);
    CHECK(tree_count(cone(families::k3_pendant()).full()) == 40);
}

TEST_CASE("apex edge deletion counts") {
    const ConeGraph c2 = cone(families::path(2));
    CHECK(tree_count_minus_apex_edge(c2, 0) == 1);
    CHECK(tree_count_minus_apex_edge(c2, 1) == 1);
    CHECK_THROWS_AS(tree_count_minus_apex_edge(c2, 2), input_error);

    /* k3_pendant: the four values behind the 82 length-zero pairs */
    const ConeGraph ck = cone(families::k3_pendant());
    const BigInt t0 = tree_count_minus_apex_edge(ck, 0);
    const BigInt t1 = tree_count_minus_apex_edge(ck, 1);
    const BigInt t2 = tree_count_minus_apex_edge(ck, 2);
    const BigInt t3 = tree_count_minus_apex_edge(ck, 3);
    CHECK(t1 == t2); // vertices 1 and 2 are interchangeable
    CHECK(t0 + t1 + t2 + t3 == 82);
}

TEST_CASE("spanning tree enumeration matches frozen lists") {
    CHECK(all_spanning_trees(Graph()).empty());
    CHECK(all_spanning_trees(families::path(1)) ==
          std::vector<SpanningTree>{SpanningTree{}});
    CHECK(all_spanning_trees(Graph(3, {})).empty());
    CHECK(all_spanning_trees(Graph(4, {{0, 1}, {2, 3}})).empty());

    auto k3 = all_spanning_trees(families::complete(3));
    std::sort(k3.begin(), k3.end());
    CHECK(k3 == std::vector<SpanningTree>{SpanningTree{{{0, 1}, {0, 2}}},
                                          SpanningTree{{{0, 1}, {1, 2}}},
                                          SpanningTree{{{0, 2}, {1, 2}}}});
}

TEST_CASE("enumeration and determinant count the same trees") {
    /* two independent routes to the same number, checked exhaustively over
     * every labeled graph (connected or not) on up to 5 vertices */
    for (int n = 1; n <= 5; ++n) {
        for (const Graph& g : testing::all_labeled_graphs(n, false)) {
            std::set<SpanningTree> seen;
            std::uint64_t visits = 0;
            for_each_spanning_tree(g, [&](const SpanningTree& t) {
                ++visits;
                seen.insert(t);
                REQUIRE(is_spanning_tree(g, t));
            });
            REQUIRE(visits == seen.size()); // no tree produced twice
            REQUIRE(BigInt(static_cast<unsigned long>(visits)) == tree_count(g));
        }
    }
}

TEST_CASE("is_spanning_tree rejects near misses") {
    const Graph g = families::cycle(4);
    CHECK(is_spanning_tree(g, SpanningTree{{{0, 1}, {1, 2}, {2, 3}}}));
    CHECK_FALSE(is_spanning_tree(g, SpanningTree{{{0, 1}, {1, 2}}}));          // too few
    CHECK_FALSE(is_spanning_tree(g, SpanningTree{{{0, 1}, {0, 2}, {2, 3}}}));  // non-edge
    CHECK_FALSE(is_spanning_tree(
        g, SpanningTree{{{0, 1}, {1, 2}, {2, 3}, {0, 3}}}));                   // cycle
}

TEST_CASE("connected set enumeration") {
    const Graph p3 = families::path(3);
    std::vector<std::vector<int>> sets;
    for_each_connected_set(p3, 1, 2, [&](std::span<const int> s) {
        sets.emplace_back(s.begin(), s.end());
    });
    std::sort(sets.begin(), sets.end());
    CHECK(sets == std::vector<std::vector<int>>{{0, 1}, {1, 2}});

    /* {0, 2} is not connected in the path, so size 2 at root 0 is just one */
    sets.clear();
    for_each_connected_set(p3, 0, 2, [&](std::span<const int> s) {
        sets.emplace_back(s.begin(), s.end());
    });
    CHECK(sets == std::vector<std::vector<int>>{{0, 1}});

    CHECK_THROWS_AS(for_each_connected_set(p3, 3, 1, [](auto) {}), input_error);
    CHECK_THROWS_AS(for_each_connected_set(p3, 0, 0, [](auto) {}), input_error);
    CHECK_THROWS_AS(for_each_connected_set(p3, 0, 4, [](auto) {}), input_error);
}

TEST_CASE("connected set enumeration is exhaustive and duplicate free") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const Graph g = testing::random_connected_graph(6, 0.5, rng);
        for (int root = 0; root < 6; ++root) {
            for (int size = 1; size <= 6; ++size) {
                std::set<std::vector<int>> seen;
                for_each_connected_set(g, root, size, [&](std::span<const int> s) {
                    REQUIRE(std::is_sorted(s.begin(), s.end()));
                    REQUIRE(std::find(s.begin(), s.end(), root) != s.end());
                    REQUIRE(is_connected(g.induced(s)));
                    REQUIRE(seen.insert(std::vector<int>(s.begin(), s.end())).second);
                });
                /* cross-check against a brute force over all subsets */
                std::uint64_t expected = 0;
                for (std::uint64_t mask = 0; mask < 64; ++mask) {
                    if (std::popcount(mask) != size || !(mask >> root & 1)) continue;
                    std::vector<int> subset;
                    for (int v = 0; v < 6; ++v)
                        if (mask >> v & 1) subset.push_back(v);
                    if (is_connected(g.induced(subset))) ++expected;
                }
                REQUIRE(seen.size() == expected);
            }
        }
    }
}

TEST_CASE("rooted subtree enumeration") {
    /* K3 at any root, size 3: one vertex set, three trees on it */
    std::vector<Subtree> subtrees;
    for_each_rooted_subtree(families::complete(3), 0, 3,
                            [&](const Subtree& t) { subtrees.push_back(t); });
    CHECK(subtrees.size() == 3);
    for (const auto& t : subtrees) CHECK(t.vertices == std::vector<int>{0, 1, 2});

    /* number of enumerated subtrees == sum over sets of induced tree counts */
    SplitMix64 rng(12);
    const Graph g = testing::random_connected_graph(6, 0.6, rng);
    for (int root = 0; root < 6; ++root) {
        for (int size = 1; size <= 6; ++size) {
            std::set<std::pair<std::vector<int>, std::vector<Edge>>> seen;
            for_each_rooted_subtree(g, root, size, [&](const Subtree& t) {
                REQUIRE(is_spanning_tree(g.induced(t.vertices),
                                         [&] {
                                             SpanningTree local;
                                             for (auto [a, b] : t.edges) {
                                                 const auto pos = [&](int v) {
                                                     return static_cast<int>(
                                                         std::lower_bound(t.vertices.begin(),
                                                                          t.vertices.end(), v) -
                                                         t.vertices.begin());
                                                 };
                                                 local.edges.emplace_back(pos(a), pos(b));
                                             }
                                             return local;
                                         }()));
                REQUIRE(seen.insert({t.vertices, t.edges}).second);
            });
            BigInt expected = 0;
            for_each_connected_set(g, root, size, [&](std::span<const int> s) {
                expected += tree_count(g.induced(s));
            });
            REQUIRE(BigInt(static_cast<unsigned long>(seen.size())) == expected);
        }
    }
}
