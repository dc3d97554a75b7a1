#include <primedist/graphs.hpp>
#include <primedist/outerplanar.hpp>

#include <doctest.h>

#include "oracles.hpp"
#include "outerplanar_gen.hpp"

#include <set>

using namespace primedist;

namespace {

Graph two_triangles()
{
    const Edge e[] = {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}};
    return Graph(5, e);
}

/// 8-cycle 0..7 with chords 1-6 and 2-5: faces {0,1,6,7}, {1,2,5,6}, {2,3,4,5}.
OuterplanarEmbedding ladder_embedding() { return {{0, 1, 2, 3, 4, 5, 6, 7}, {{1, 6}, {2, 5}}}; }

Graph graph_of(const OuterplanarEmbedding &emb, int n)
{
    Graph g(n);
    const auto m = emb.outer_cycle.size();
    for (std::size_t i = 0; i < m; ++i)
        g.add_edge(emb.outer_cycle[i], emb.outer_cycle[(i + 1) % m]);
    for (auto [u, v] : emb.chords)
        g.add_edge(u, v);
    return g;
}

bool is_tree(int nodes, const std::vector<std::pair<int, int>> &edges)
{
    if (static_cast<int>(edges.size()) != nodes - 1)
        return false;
    std::vector<int> parent(static_cast<std::size_t>(nodes));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
    for (auto [a, b] : edges) {
        int ra = find(a), rb = find(b);
        if (ra == rb)
            return false;
        parent[ra] = rb;
    }
    return true;
}

}  // namespace

TEST_CASE("generators")
{
    CHECK(complete_graph(4).edge_count() == 6);
    const int sizes[] = {1, 2, 2};
    auto k122 = complete_multipartite(sizes);
    CHECK(k122.graph.edge_count() == 8);
    CHECK(k122.partition.parts.size() == 3);
    CHECK(k122.partition.max_part_size() == 2);
    CHECK(cycle_graph(7).edge_count() == 7);
    CHECK(path_graph(5).edge_count() == 4);
    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
    const int bad[] = {1, 0};
    CHECK_THROWS_AS(complete_multipartite(bad), std::invalid_argument);
    CHECK_THROWS_AS(complete_multipartite(std::span<const int>{}), std::invalid_argument);
}

TEST_CASE("graph invariants are enforced")
{
    Graph g(3);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(1, 2));
}

TEST_CASE("girth")
{
    CHECK(girth(cycle_graph(9)) == 9);
    CHECK_FALSE(girth(path_graph(5)));
    CHECK(girth(complete_graph(4)) == 3);
    CHECK(girth(graph_of(ladder_embedding(), 8)) == 4);
    std::mt19937 rng(7);
    for (int i = 0; i < 30; ++i) {
        auto c = testgen::random_outerplanar(3, 9, rng);
        REQUIRE(girth(c.graph).value_or(99) >= 9);
    }
}

TEST_CASE("chromatic_number")
{
    CHECK(chromatic_number(complete_graph(6)).colors == 6);
    CHECK(chromatic_number(cycle_graph(7)).colors == 3);
    CHECK(chromatic_number(cycle_graph(8)).colors == 2);
    const int sizes[] = {2, 2, 2};
    CHECK(chromatic_number(complete_multipartite(sizes).graph).colors == 3);
    CHECK(chromatic_number(Graph(4)).colors == 1);
}

TEST_CASE("chromatic_number is exact on all small connected graphs")
{
    for (int n = 1; n <= 5; ++n)
        for (const auto &g : oracle::connected_graphs(n)) {
            auto c = chromatic_number(g);
            REQUIRE(is_proper_partition(g, c.as_partition()));
            REQUIRE(static_cast<int>(c.as_partition().parts.size()) == c.colors);
            REQUIRE(oracle::colourable(g, c.colors));
            REQUIRE_FALSE(oracle::colourable(g, c.colors - 1));
        }
}

TEST_CASE("chromatic_number budget exhaustion carries bounds")
{
    // Grotzsch graph: the Mycielskian of C_5 (11 vertices, chi = 4).
    Graph g(11);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i + 5, (i + 1) % 5);
        g.add_edge(i + 5, (i + 4) % 5);
        g.add_edge(i + 5, 10);
    }
    CHECK(chromatic_number(g).colors == 4);
    // The greedy clique gives 2 and the greedy colouring 4, so one node cannot close the gap.
    try {
        chromatic_number(g, 1);
        FAIL("expected ChromaticBudgetExhausted");
    } catch (const ChromaticBudgetExhausted &e) {
        CHECK(e.lower == 2);
        CHECK(e.upper == 4);
    }
}

TEST_CASE("partitions")
{
    const int sizes[] = {1, 2, 2};
    auto mp = complete_multipartite(sizes);
    CHECK(is_proper_partition(mp.graph, mp.partition));
    Partition bad{{{0, 1}, {2, 3, 4}}};
    CHECK_FALSE(is_proper_partition(mp.graph, bad));
    Partition missing{{{0}, {1, 2}}};
    CHECK_THROWS_AS(validate_partition(mp.graph, missing), std::invalid_argument);
    Partition overlap{{{0, 1}, {1, 2, 3, 4}}};
    CHECK_THROWS_AS(validate_partition(mp.graph, overlap), std::invalid_argument);
}

TEST_CASE("block_cutpoint_tree")
{
    auto t = block_cutpoint_tree(two_triangles());
    CHECK(t.blocks.size() == 2);
    CHECK(t.cut_vertices == std::vector<int>{2});
    auto c5 = block_cutpoint_tree(cycle_graph(5));
    CHECK(c5.blocks.size() == 1);
    CHECK(c5.cut_vertices.empty());
    auto p4 = block_cutpoint_tree(path_graph(4));
    CHECK(p4.blocks.size() == 3);
    CHECK(p4.cut_vertices == std::vector<int>{1, 2});
    CHECK(p4.tree_edges.size() == 4);
    Graph disconnected(4);
    disconnected.add_edge(0, 1);
    disconnected.add_edge(2, 3);
    CHECK_THROWS_AS(block_cutpoint_tree(disconnected), std::invalid_argument);
}

TEST_CASE("block_cutpoint_tree on generated graphs")
{
    std::mt19937 rng(11);
    for (int i = 0; i < 40; ++i) {
        auto c = testgen::random_outerplanar(4, 5, rng);
        auto t = block_cutpoint_tree(c.graph);
        // Every edge lies in exactly one block; the tree has blocks + cuts - 1 edges.
        std::size_t edges = 0;
        for (const auto &be : t.block_edges)
            edges += be.size();
        CHECK(edges == c.graph.edge_count());
        CHECK(t.tree_edges.size() == t.blocks.size() + t.cut_vertices.size() - 1);
        // A vertex is a cut vertex iff deleting it disconnects the graph.
        for (int v = 0; v < c.graph.vertex_count(); ++v) {
            std::vector<int> rest;
            for (int w = 0; w < c.graph.vertex_count(); ++w)
                if (w != v)
                    rest.push_back(w);
            bool cut = !is_connected(induced_subgraph(c.graph, rest).graph);
            bool listed = std::binary_search(t.cut_vertices.begin(), t.cut_vertices.end(), v);
            REQUIRE(cut == listed);
        }
    }
}

TEST_CASE("weak_dual")
{
    OuterplanarEmbedding hexagon{{0, 1, 2, 3, 4, 5}, {{0, 2}, {0, 4}}};
    auto d = weak_dual(hexagon);
    CHECK(d.faces.size() == 3);
    CHECK(d.adjacencies.size() == 2);
    int leaves = 0;
    for (int f = 0; f < 3; ++f)
        leaves += d.degree(f) == 1;
    CHECK(leaves == 2);

    OuterplanarEmbedding plain{{0, 1, 2, 3}, {}};
    auto single = weak_dual(plain);
    CHECK(single.faces.size() == 1);
    CHECK(single.adjacencies.empty());

    OuterplanarEmbedding crossing{{0, 1, 2, 3}, {{0, 2}, {1, 3}}};
    CHECK_THROWS_AS(weak_dual(crossing), std::invalid_argument);
    OuterplanarEmbedding side{{0, 1, 2, 3}, {{0, 1}}};
    CHECK_THROWS_AS(side.validate(), std::invalid_argument);
}

TEST_CASE("weak_dual is a tree with one node per chord plus one")
{
    std::mt19937 rng(5);
    for (int i = 0; i < 100; ++i) {
        int next = 1;
        std::vector<Edge> edges;
        auto emb = testgen::grow_block(next, 0, 1 + i % 6, 3, rng, edges);
        auto d = weak_dual(emb);
        REQUIRE(d.faces.size() == emb.chords.size() + 1);
        REQUIRE(is_tree(static_cast<int>(d.faces.size()), d.adjacencies));
        std::size_t face_edges = 0;
        for (const auto &f : d.faces)
            face_edges += f.size();
        // Outer edges lie on one face, chords on two.
        CHECK(face_edges == emb.outer_cycle.size() + 2 * emb.chords.size());
    }
}

TEST_CASE("find_leaf_cycle")
{
    auto tt = two_triangles();
    auto r = find_leaf_cycle(tt, {});
    CHECK(r.attachment == std::vector<int>{2});
    CHECK(r.cycle.size() == 3);
    CHECK(r.cycle.front() == 2);
    CHECK(leaf_cycle_detaches(tt, r));

    auto ladder = ladder_embedding();
    auto lg = graph_of(ladder, 8);
    const OuterplanarEmbedding embs[] = {ladder};
    auto lr = find_leaf_cycle(lg, embs);
    CHECK(lr.attachment == std::vector<int>{1, 6});
    CHECK(std::set<int>(lr.cycle.begin(), lr.cycle.end()) == std::set<int>{0, 1, 6, 7});
    CHECK(lr.cycle[0] == 1);
    CHECK(lr.cycle[1] == 6);
    CHECK(leaf_cycle_detaches(lg, lr));

    CHECK_THROWS_AS(find_leaf_cycle(cycle_graph(5), {}), std::invalid_argument);
    CHECK_THROWS_AS(find_leaf_cycle(path_graph(4), {}), std::invalid_argument);
    CHECK_THROWS_AS(find_leaf_cycle(lg, {}), std::invalid_argument);  // no embedding for the block
}

TEST_CASE("find_leaf_cycle avoids the cut vertex when a leaf face allows it")
{
    // Ladder block glued to a triangle at vertex 0, which lies on face {0,1,6,7}.
    auto ladder = ladder_embedding();
    Graph g = graph_of(ladder, 10);
    g.add_edge(0, 8);
    g.add_edge(8, 9);
    g.add_edge(0, 9);
    const OuterplanarEmbedding embs[] = {ladder};
    auto r = find_leaf_cycle(g, embs);
    CHECK(leaf_cycle_detaches(g, r));
    // The triangle is itself a leaf block; either it or the far face is fine.
    bool triangle = std::set<int>(r.cycle.begin(), r.cycle.end()) == std::set<int>{0, 8, 9};
    bool far_face = std::set<int>(r.cycle.begin(), r.cycle.end()) == std::set<int>{2, 3, 4, 5};
    CHECK((triangle || far_face));
}

TEST_CASE("star-shaped dual with every leaf face at the cut vertex")
{
    // Block: outer cycle 0..8, chords 0-3, 0-6 and 3-6 (central triangle), all
    // three leaf faces touch 0 or share a chord with it. Cut vertex 0 carries a triangle.
    OuterplanarEmbedding emb{{0, 1, 2, 3, 4, 5, 6, 7, 8}, {{0, 3}, {0, 6}, {3, 6}}};
    Graph g = graph_of(emb, 11);
    g.add_edge(0, 9);
    g.add_edge(9, 10);
    g.add_edge(0, 10);
    const OuterplanarEmbedding embs[] = {emb};
    auto r = find_leaf_cycle(g, embs);
    CHECK(leaf_cycle_detaches(g, r));
}

TEST_CASE("leaf cycle postcondition on generated graphs")
{
    std::mt19937 rng(99);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        auto c = testgen::random_outerplanar(2 + i % 3, 4, rng);
        // Strip degree-one vertices first, as the labeler does.
        Graph g = c.graph;
        std::vector<int> keep(static_cast<std::size_t>(g.vertex_count()));
        std::iota(keep.begin(), keep.end(), 0);
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0; v < g.vertex_count(); ++v)
                if (g.degree(v) <= 1 && g.vertex_count() > 1) {
                    std::vector<int> rest;
                    for (int w = 0; w < g.vertex_count(); ++w)
                        if (w != v)
                            rest.push_back(w);
                    auto sub = induced_subgraph(g, rest);
                    std::vector<int> kept;
                    for (int w : sub.to_parent)
                        kept.push_back(keep[w]);
                    keep = kept;
                    g = sub.graph;
                    changed = true;
                    break;
                }
        }
        if (static_cast<long>(g.edge_count()) - g.vertex_count() + 1 < 2 || !is_connected(g))
            continue;
        std::map<int, int> local;
        for (std::size_t v = 0; v < keep.size(); ++v)
            local[keep[v]] = static_cast<int>(v);
        std::vector<OuterplanarEmbedding> embs;
        for (const auto &b : c.blocks) {
            OuterplanarEmbedding m;
            for (int v : b.outer_cycle)
                if (local.count(v))
                    m.outer_cycle.push_back(local[v]);
            embs.push_back(m);
        }
        auto r = find_leaf_cycle(g, embs);
        REQUIRE(leaf_cycle_detaches(g, r));
        ++checked;
    }
    CHECK(checked > 50);
}

TEST_CASE("restrict_embedding")
{
    auto ladder = ladder_embedding();
    auto g = graph_of(ladder, 8);
    const int block[] = {0, 1, 2, 3, 4, 5, 6, 7};
    auto e = restrict_embedding(g, block, ladder.outer_cycle);
    CHECK(e.chords.size() == 2);
    const int face[] = {0, 1, 6, 7};
    auto f = restrict_embedding(g, face, ladder.outer_cycle);
    CHECK(f.outer_cycle == std::vector<int>{0, 1, 6, 7});
    CHECK(f.chords.empty());
}

TEST_CASE("cycle_order and components")
{
    auto order = cycle_order(cycle_graph(6));
    CHECK(order.size() == 6);
    CHECK(order.front() == 0);
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(3, 4);
    CHECK(connected_components(g).size() == 3);
    CHECK_FALSE(is_connected(g));
    CHECK(is_cycle(cycle_graph(4)));
    CHECK_FALSE(is_cycle(path_graph(4)));
    CHECK(is_complete(complete_graph(5)));
    CHECK_FALSE(is_complete(cycle_graph(4)));
}
