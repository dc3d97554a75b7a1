#include <primedist/search.hpp>

#include <omp.h>

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

namespace primedist {

namespace {

struct DisjointSets {
    explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v)
    {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    }
    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[a] = b;
        return true;
    }
    std::vector<int> parent;
};

/// Red = equal parity. Valid iff red degree <= 2 and red is a forest.
bool parity_mask_ok(const Graph &g, std::uint64_t mask)
{
    std::vector<int> red_degree(static_cast<std::size_t>(g.vertex_count()), 0);
    DisjointSets sets(g.vertex_count());
    for (auto [u, v] : g.edges()) {
        if (((mask >> u) & 1) != ((mask >> v) & 1))
            continue;
        if (++red_degree[u] > 2 || ++red_degree[v] > 2 || !sets.unite(u, v))
            return false;
    }
    return true;
}

RedBlueColoring from_mask(const Graph &g, std::uint64_t mask)
{
    RedBlueColoring w;
    for (int v = 0; v < g.vertex_count(); ++v)
        w.parity.push_back(static_cast<int>((mask >> v) & 1));
    for (auto e : g.edges())
        (w.parity[e.first] == w.parity[e.second] ? w.red : w.blue).push_back(e);
    return w;
}

std::uint64_t assignment_count(const Graph &g)
{
    const int n = g.vertex_count();
    if (n > 63)
        throw std::invalid_argument("decide_2odd: more than 63 vertices");
    return n == 0 ? 1 : std::uint64_t{1} << (n - 1);
}

void check_budget(std::uint64_t total, std::uint64_t budget)
{
    if (total > budget)
        throw BudgetExhausted("decide_2odd: " + std::to_string(total) + " parity assignments exceed budget " +
                              std::to_string(budget));
}

}  // namespace

std::optional<RedBlueColoring> decide_2odd_serial(const Graph &g, std::uint64_t budget)
{
    const auto total = assignment_count(g);
    check_budget(total, budget);
    // Vertex 0 stays even: flipping every parity gives the same colouring.
    for (std::uint64_t half = 0; half < total; ++half) {
        std::uint64_t mask = half << 1;
        if (parity_mask_ok(g, mask))
            return from_mask(g, mask);
    }
    return std::nullopt;
}

std::optional<RedBlueColoring> decide_2odd(const Graph &g, std::uint64_t budget)
{
    const auto total = assignment_count(g);
    check_budget(total, budget);
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
#pragma omp parallel
    {
        std::uint64_t local = std::numeric_limits<std::uint64_t>::max();
#pragma omp for schedule(static)
        for (std::int64_t half = 0; half < static_cast<std::int64_t>(total); ++half) {
            auto h = static_cast<std::uint64_t>(half);
            if (h < local && parity_mask_ok(g, h << 1))
                local = h;
        }
#pragma omp critical
        best = std::min(best, local);
    }
    if (best == std::numeric_limits<std::uint64_t>::max())
        return std::nullopt;
    return from_mask(g, best << 1);
}

std::vector<std::vector<Edge>> simple_cycles(const Graph &g)
{
    const int n = g.vertex_count();
    std::set<std::vector<Edge>> found;
    std::vector<int> path;
    std::vector<char> on_path(static_cast<std::size_t>(n), 0);
    // Each cycle is rooted at its smallest vertex and found in both directions; the set dedupes.
    auto extend = [&](auto &&self, int start, int v) -> void {
        for (int w : g.neighbors(v)) {
            if (w == start && path.size() >= 3) {
                std::vector<Edge> cycle;
                for (std::size_t i = 0; i < path.size(); ++i)
                    cycle.push_back(make_edge(path[i], path[(i + 1) % path.size()]));
                std::sort(cycle.begin(), cycle.end());
                found.insert(std::move(cycle));
            } else if (w > start && !on_path[w]) {
                on_path[w] = 1;
                path.push_back(w);
                self(self, start, w);
                path.pop_back();
                on_path[w] = 0;
            }
        }
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        on_path[s] = 1;
        extend(extend, s, s);
        on_path[s] = 0;
    }
    return {found.begin(), found.end()};
}

std::optional<RedBlueColoring> naive_2odd_oracle(const Graph &g)
{
    const auto m = g.edge_count();
    if (m > 20)
        throw std::invalid_argument("naive_2odd_oracle: more than 20 edges");
    const auto &edges = g.edges();
    std::vector<std::uint32_t> cycle_masks;
    for (const auto &cycle : simple_cycles(g)) {
        std::uint32_t mask = 0;
        for (auto e : cycle)
            mask |= 1u << (std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
        cycle_masks.push_back(mask);
    }
    for (std::uint32_t red = 0; red < (1u << m); ++red) {
        std::vector<int> red_degree(static_cast<std::size_t>(g.vertex_count()), 0);
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i)
            if ((red >> i) & 1)
                ok = ++red_degree[edges[i].first] <= 2 && ++red_degree[edges[i].second] <= 2;
        for (auto c : cycle_masks) {
            if (!ok)
                break;
            int blue = __builtin_popcount(c & ~red);
            ok = blue > 0 && blue % 2 == 0;
        }
        if (ok) {
            RedBlueColoring w;
            for (std::size_t i = 0; i < m; ++i)
                ((red >> i) & 1 ? w.red : w.blue).push_back(edges[i]);
            return w;
        }
    }
    return std::nullopt;
}

bool is_valid_2odd_witness(const Graph &g, const RedBlueColoring &w)
{
    std::set<Edge> red(w.red.begin(), w.red.end()), blue(w.blue.begin(), w.blue.end());
    if (red.size() + blue.size() != g.edge_count())
        return false;
    for (auto e : g.edges())
        if (red.count(e) == blue.count(e))
            return false;

    std::vector<int> red_degree(static_cast<std::size_t>(g.vertex_count()), 0);
    DisjointSets sets(g.vertex_count());
    for (auto [u, v] : red)
        if (++red_degree[u] > 2 || ++red_degree[v] > 2 || !sets.unite(u, v))
            return false;

    // Two-colour with red = same side, blue = opposite side.
    std::vector<int> side(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (side[s] >= 0)
            continue;
        side[s] = 0;
        std::vector<int> queue{s};
        for (std::size_t i = 0; i < queue.size(); ++i) {
            int u = queue[i];
            for (int v : g.neighbors(u)) {
                int want = side[u] ^ (blue.count(make_edge(u, v)) ? 1 : 0);
                if (side[v] < 0) {
                    side[v] = want;
                    queue.push_back(v);
                } else if (side[v] != want) {
                    return false;
                }
            }
        }
    }
    if (!w.parity.empty())
        for (auto [u, v] : g.edges())
            if ((w.parity[u] == w.parity[v]) != (red.count({u, v}) > 0))
                return false;
    return true;
}

}  // namespace primedist
