#pragma once

#include <primedist/errors.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace primedist {

/// Unordered vertex pair, stored with first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Undirected simple graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);
    Graph(int vertex_count, std::span<const Edge> edges);

    /// Throws std::invalid_argument on loops, duplicates and out-of-range endpoints.
    void add_edge(int u, int v);

    int vertex_count() const { return static_cast<int>(adjacency_.size()); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge> &edges() const { return edges_; }
    const std::vector<int> &neighbors(int v) const { return adjacency_.at(v); }
    int degree(int v) const { return static_cast<int>(adjacency_.at(v).size()); }
    bool adjacent(int u, int v) const;

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adjacency_;
};

/// Disjoint vertex lists covering V(G).
struct Partition {
    std::vector<std::vector<int>> parts;

    std::size_t max_part_size() const;
};

/// Throws std::invalid_argument unless `p` covers V(g) disjointly.
void validate_partition(const Graph &g, const Partition &p);
/// True if `p` is a partition of V(g) with no edge inside a part.
bool is_proper_partition(const Graph &g, const Partition &p);

struct MultipartiteGraph {
    Graph graph;
    Partition partition;
};

Graph complete_graph(int n);
/// Part x holds the next sizes[x] vertices in order.
MultipartiteGraph complete_multipartite(std::span<const int> sizes);
Graph cycle_graph(int n);
Graph path_graph(int n);

bool is_complete(const Graph &g);
/// True if g is connected and every vertex has degree 2.
bool is_cycle(const Graph &g);
/// Vertices of a cycle graph in traversal order starting at its smallest vertex.
std::vector<int> cycle_order(const Graph &g);

std::vector<std::vector<int>> connected_components(const Graph &g);
bool is_connected(const Graph &g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_parent;  ///< local vertex -> parent vertex
};

/// Subgraph induced by `vertices` (local ids follow the order given).
InducedSubgraph induced_subgraph(const Graph &g, std::span<const int> vertices);

/// Length of a shortest cycle, or nullopt for forests.
std::optional<int> girth(const Graph &g);

struct Coloring {
    int colors = 0;
    std::vector<int> color_of;

    Partition as_partition() const;
};

/// Exact chromatic number ran out of nodes; carries the bounds proven so far.
class ChromaticBudgetExhausted : public BudgetExhausted {
public:
    ChromaticBudgetExhausted(int lower, int upper);
    int lower;
    int upper;
};

/// Exact chromatic number by DSATUR branch and bound, bracketed by a greedy
/// clique (lower) and a greedy DSATUR colouring (upper). The returned colouring
/// is proper and uses exactly `colors` colours.
Coloring chromatic_number(const Graph &g, std::uint64_t node_budget = 50'000'000);

/// Blocks (maximal 2-connected subgraphs and bridges) and cut vertices.
struct BlockCutTree {
    std::vector<std::vector<int>> blocks;       ///< sorted vertex lists
    std::vector<std::vector<Edge>> block_edges;
    std::vector<int> cut_vertices;              ///< sorted
    std::vector<std::pair<int, int>> tree_edges;  ///< (block index, cut vertex)

    std::vector<int> cut_vertices_of(std::size_t block) const;
    bool is_leaf_block(std::size_t block) const;
};

/// Rejects disconnected input.
BlockCutTree block_cutpoint_tree(const Graph &g);

}  // namespace primedist
