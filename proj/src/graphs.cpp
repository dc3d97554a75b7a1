#include <primedist/graphs.hpp>

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace primedist {

Graph::Graph(int vertex_count)
{
    if (vertex_count < 0)
        throw std::invalid_argument("Graph: negative vertex count");
    adjacency_.resize(static_cast<std::size_t>(vertex_count));
}

Graph::Graph(int vertex_count, std::span<const Edge> edges) : Graph(vertex_count)
{
    for (auto [u, v] : edges)
        add_edge(u, v);
}

void Graph::add_edge(int u, int v)
{
    const int n = vertex_count();
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("Graph: edge (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") has an endpoint outside [0," + std::to_string(n) + ")");
    if (u == v)
        throw std::invalid_argument("Graph: loop at vertex " + std::to_string(u));
    if (adjacent(u, v))
        throw std::invalid_argument("Graph: duplicate edge (" + std::to_string(u) + "," +
                                    std::to_string(v) + ")");
    auto e = make_edge(u, v);
    edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), e), e);
    auto &au = adjacency_[u];
    au.insert(std::lower_bound(au.begin(), au.end(), v), v);
    auto &av = adjacency_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
}

bool Graph::adjacent(int u, int v) const
{
    const auto &au = adjacency_.at(u);
    return std::binary_search(au.begin(), au.end(), v);
}

std::size_t Partition::max_part_size() const
{
    std::size_t m = 0;
    for (const auto &p : parts)
        m = std::max(m, p.size());
    return m;
}

void validate_partition(const Graph &g, const Partition &p)
{
    std::vector<int> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const auto &part : p.parts) {
        if (part.empty())
            throw std::invalid_argument("partition: empty part");
        for (int v : part) {
            if (v < 0 || v >= g.vertex_count())
                throw std::invalid_argument("partition: vertex " + std::to_string(v) + " out of range");
            if (seen[v]++)
                throw std::invalid_argument("partition: vertex " + std::to_string(v) + " in two parts");
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!seen[v])
            throw std::invalid_argument("partition: vertex " + std::to_string(v) + " not covered");
}

bool is_proper_partition(const Graph &g, const Partition &p)
{
    try {
        validate_partition(g, p);
    } catch (const std::invalid_argument &) {
        return false;
    }
    std::vector<int> part_of(static_cast<std::size_t>(g.vertex_count()));
    for (std::size_t i = 0; i < p.parts.size(); ++i)
        for (int v : p.parts[i])
            part_of[v] = static_cast<int>(i);
    for (auto [u, v] : g.edges())
        if (part_of[u] == part_of[v])
            return false;
    return true;
}

Graph complete_graph(int n)
{
    if (n < 1)
        throw std::invalid_argument("complete_graph: n must be >= 1");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

MultipartiteGraph complete_multipartite(std::span<const int> sizes)
{
    if (sizes.empty())
        throw std::invalid_argument("complete_multipartite: no parts");
    Partition partition;
    int n = 0;
    for (int s : sizes) {
        if (s < 1)
            throw std::invalid_argument("complete_multipartite: part sizes must be >= 1");
        std::vector<int> part;
        for (int i = 0; i < s; ++i)
            part.push_back(n++);
        partition.parts.push_back(std::move(part));
    }
    Graph g(n);
    for (std::size_t a = 0; a < partition.parts.size(); ++a)
        for (std::size_t b = a + 1; b < partition.parts.size(); ++b)
            for (int u : partition.parts[a])
                for (int v : partition.parts[b])
                    g.add_edge(u, v);
    return {std::move(g), std::move(partition)};
}

Graph cycle_graph(int n)
{
    if (n < 3)
        throw std::invalid_argument("cycle_graph: n must be >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path_graph(int n)
{
    if (n < 1)
        throw std::invalid_argument("path_graph: n must be >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i)
        g.add_edge(i, i + 1);
    return g;
}

bool is_complete(const Graph &g)
{
    const auto n = static_cast<std::size_t>(g.vertex_count());
    return g.edge_count() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

bool is_cycle(const Graph &g)
{
    if (g.vertex_count() < 3 || g.edge_count() != static_cast<std::size_t>(g.vertex_count()))
        return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 2)
            return false;
    return is_connected(g);
}

std::vector<int> cycle_order(const Graph &g)
{
    if (!is_cycle(g))
        throw std::invalid_argument("cycle_order: graph is not a cycle");
    std::vector<int> order{0};
    int prev = -1, cur = 0;
    while (true) {
        const auto &nb = g.neighbors(cur);
        int next = nb[0] != prev ? nb[0] : nb[1];
        if (prev == -1)
            next = nb[0];
        if (next == 0)
            break;
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    return order;
}

std::vector<std::vector<int>> connected_components(const Graph &g)
{
    const int n = g.vertex_count();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0)
            continue;
        std::vector<int> members{s};
        comp[s] = static_cast<int>(out.size());
        for (std::size_t i = 0; i < members.size(); ++i)
            for (int w : g.neighbors(members[i]))
                if (comp[w] < 0) {
                    comp[w] = comp[s];
                    members.push_back(w);
                }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

bool is_connected(const Graph &g) { return connected_components(g).size() <= 1; }

InducedSubgraph induced_subgraph(const Graph &g, std::span<const int> vertices)
{
    std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (local.at(vertices[i]) >= 0)
            throw std::invalid_argument("induced_subgraph: repeated vertex");
        local[vertices[i]] = static_cast<int>(i);
    }
    Graph h(static_cast<int>(vertices.size()));
    for (auto [u, v] : g.edges())
        if (local[u] >= 0 && local[v] >= 0)
            h.add_edge(local[u], local[v]);
    return {std::move(h), std::vector<int>(vertices.begin(), vertices.end())};
}

std::optional<int> girth(const Graph &g)
{
    const int n = g.vertex_count();
    int best = -1;
    std::vector<int> dist(static_cast<std::size_t>(n)), parent(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        parent[s] = -1;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push(w);
                } else if (w != parent[u]) {
                    int len = dist[u] + dist[w] + 1;
                    if (best < 0 || len < best)
                        best = len;
                }
            }
        }
    }
    if (best < 0)
        return std::nullopt;
    return best;
}

Partition Coloring::as_partition() const
{
    Partition p;
    p.parts.resize(static_cast<std::size_t>(colors));
    for (std::size_t v = 0; v < color_of.size(); ++v)
        p.parts[color_of[v]].push_back(static_cast<int>(v));
    return p;
}

std::vector<int> BlockCutTree::cut_vertices_of(std::size_t block) const
{
    std::vector<int> out;
    for (auto [b, c] : tree_edges)
        if (static_cast<std::size_t>(b) == block)
            out.push_back(c);
    std::sort(out.begin(), out.end());
    return out;
}

bool BlockCutTree::is_leaf_block(std::size_t block) const
{
    return blocks.size() > 1 && cut_vertices_of(block).size() == 1;
}

BlockCutTree block_cutpoint_tree(const Graph &g)
{
    const int n = g.vertex_count();
    if (n == 0)
        return {};
    if (!is_connected(g))
        throw std::invalid_argument("block_cutpoint_tree: graph is disconnected");

    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<Edge> stack;
    BlockCutTree out;
    std::vector<bool> is_cut(static_cast<std::size_t>(n), false);
    int timer = 0;

    // Explicit stack DFS (Hopcroft-Tarjan biconnected components).
    struct Frame {
        int v;
        int parent;
        std::size_t next;
        int children;
    };
    std::vector<Frame> frames{{0, -1, 0, 0}};
    disc[0] = low[0] = timer++;
    while (!frames.empty()) {
        auto &f = frames.back();
        const auto &nb = g.neighbors(f.v);
        if (f.next < nb.size()) {
            int w = nb[f.next++];
            if (disc[w] < 0) {
                stack.push_back(make_edge(f.v, w));
                disc[w] = low[w] = timer++;
                ++f.children;
                frames.push_back({w, f.v, 0, 0});
            } else if (w != f.parent && disc[w] < disc[f.v]) {
                stack.push_back(make_edge(f.v, w));
                low[f.v] = std::min(low[f.v], disc[w]);
            }
            continue;
        }
        Frame done = f;
        frames.pop_back();
        if (frames.empty())
            break;
        auto &up = frames.back();
        low[up.v] = std::min(low[up.v], low[done.v]);
        if (low[done.v] >= disc[up.v]) {
            if (up.parent != -1)
                is_cut[up.v] = true;
            std::vector<Edge> block_edges;
            const Edge split = make_edge(up.v, done.v);
            while (true) {
                Edge e = stack.back();
                stack.pop_back();
                block_edges.push_back(e);
                if (e == split)
                    break;
            }
            std::vector<int> verts;
            for (auto [a, b] : block_edges) {
                verts.push_back(a);
                verts.push_back(b);
            }
            std::sort(verts.begin(), verts.end());
            verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
            std::sort(block_edges.begin(), block_edges.end());
            out.blocks.push_back(std::move(verts));
            out.block_edges.push_back(std::move(block_edges));
        }
    }
    if (frames.empty() && g.neighbors(0).size() > 1) {
        // Root is a cut vertex iff it has more than one DFS child; count blocks containing it.
        int containing = 0;
        for (const auto &b : out.blocks)
            containing += std::binary_search(b.begin(), b.end(), 0) ? 1 : 0;
        is_cut[0] = containing > 1;
    }
    if (n == 1)
        out.blocks.push_back({0});
    out.block_edges.resize(out.blocks.size());

    for (int v = 0; v < n; ++v)
        if (is_cut[v])
            out.cut_vertices.push_back(v);
    for (std::size_t b = 0; b < out.blocks.size(); ++b)
        for (int c : out.cut_vertices)
            if (std::binary_search(out.blocks[b].begin(), out.blocks[b].end(), c))
                out.tree_edges.emplace_back(static_cast<int>(b), c);
    return out;
}

}  // namespace primedist
