#include <primedist/outerplanar.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace primedist {

namespace {

bool crosses(int a, int b, int c, int d)
{
    // Positions on the outer cycle; chords (a,b) and (c,d) with a<b, c<d.
    if (a == c || a == d || b == c || b == d)
        return false;
    bool c_inside = a < c && c < b;
    bool d_inside = a < d && d < b;
    return c_inside != d_inside;
}

std::vector<int> rotate_to(const std::vector<int> &cycle, int x, int y)
{
    const auto n = cycle.size();
    auto it = std::find(cycle.begin(), cycle.end(), x);
    if (it == cycle.end())
        throw std::logic_error("rotate_to: vertex not on cycle");
    std::size_t i = static_cast<std::size_t>(it - cycle.begin());
    bool forward = cycle[(i + 1) % n] == y;
    if (!forward && cycle[(i + n - 1) % n] != y)
        throw std::logic_error("rotate_to: vertices not adjacent on cycle");
    std::vector<int> out;
    for (std::size_t s = 0; s < n; ++s)
        out.push_back(cycle[forward ? (i + s) % n : (i + n - s) % n]);
    return out;
}

std::vector<int> sorted_copy(std::vector<int> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

void OuterplanarEmbedding::validate() const
{
    const auto n = outer_cycle.size();
    if (n < 3)
        throw std::invalid_argument("embedding: outer cycle needs at least 3 vertices");
    std::map<int, int> pos;
    for (std::size_t i = 0; i < n; ++i)
        if (!pos.emplace(outer_cycle[i], static_cast<int>(i)).second)
            throw std::invalid_argument("embedding: vertex " + std::to_string(outer_cycle[i]) +
                                        " repeated on outer cycle");
    std::set<Edge> seen;
    std::vector<std::pair<int, int>> spans;
    for (auto [u, v] : chords) {
        auto pu = pos.find(u), pv = pos.find(v);
        if (pu == pos.end() || pv == pos.end())
            throw std::invalid_argument("embedding: chord (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") has an endpoint off the outer cycle");
        int a = std::min(pu->second, pv->second), b = std::max(pu->second, pv->second);
        if (a == b || b - a == 1 || (a == 0 && b == static_cast<int>(n) - 1))
            throw std::invalid_argument("embedding: chord (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") joins vertices adjacent on the outer cycle");
        if (!seen.insert(make_edge(u, v)).second)
            throw std::invalid_argument("embedding: duplicate chord");
        spans.emplace_back(a, b);
    }
    for (std::size_t i = 0; i < spans.size(); ++i)
        for (std::size_t j = i + 1; j < spans.size(); ++j)
            if (crosses(spans[i].first, spans[i].second, spans[j].first, spans[j].second))
                throw std::invalid_argument("embedding: chords (" + std::to_string(chords[i].first) + "," +
                                            std::to_string(chords[i].second) + ") and (" +
                                            std::to_string(chords[j].first) + "," +
                                            std::to_string(chords[j].second) +
                                            ") cross; block is not outerplanar");
}

void OuterplanarEmbedding::validate_against(const Graph &g) const
{
    validate();
    std::set<Edge> expected;
    const auto n = outer_cycle.size();
    for (std::size_t i = 0; i < n; ++i) {
        int u = outer_cycle[i], v = outer_cycle[(i + 1) % n];
        if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count() || !g.adjacent(u, v))
            throw std::invalid_argument("embedding: outer cycle edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") is not an edge of the graph");
        expected.insert(make_edge(u, v));
    }
    for (auto [u, v] : chords) {
        if (!g.adjacent(u, v))
            throw std::invalid_argument("embedding: chord (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") is not an edge of the graph");
        expected.insert(make_edge(u, v));
    }
    std::set<int> members(outer_cycle.begin(), outer_cycle.end());
    for (int u : outer_cycle)
        for (int v : g.neighbors(u))
            if (members.count(v) && !expected.count(make_edge(u, v)))
                throw std::invalid_argument("embedding: edge (" + std::to_string(u) + "," + std::to_string(v) +
                                            ") inside the block is neither outer edge nor chord");
}

int WeakDual::degree(int face) const
{
    int d = 0;
    for (auto [a, b] : adjacencies)
        d += (a == face) + (b == face);
    return d;
}

WeakDual weak_dual(const OuterplanarEmbedding &emb)
{
    emb.validate();
    // Split the polygon along one chord at a time until no chord remains inside a piece.
    std::vector<std::vector<int>> pending{emb.outer_cycle}, faces;
    std::set<Edge> chord_set;
    for (auto [u, v] : emb.chords)
        chord_set.insert(make_edge(u, v));
    while (!pending.empty()) {
        auto poly = std::move(pending.back());
        pending.pop_back();
        const auto n = poly.size();
        bool split = false;
        for (std::size_t i = 0; i < n && !split; ++i)
            for (std::size_t j = i + 2; j < n && !split; ++j) {
                if (i == 0 && j == n - 1)
                    continue;
                if (!chord_set.count(make_edge(poly[i], poly[j])))
                    continue;
                std::vector<int> left(poly.begin() + static_cast<long>(i), poly.begin() + static_cast<long>(j) + 1);
                std::vector<int> right(poly.begin() + static_cast<long>(j), poly.end());
                right.insert(right.end(), poly.begin(), poly.begin() + static_cast<long>(i) + 1);
                pending.push_back(std::move(left));
                pending.push_back(std::move(right));
                split = true;
            }
        if (!split)
            faces.push_back(std::move(poly));
    }
    std::sort(faces.begin(), faces.end(),
              [](const auto &a, const auto &b) { return sorted_copy(a) < sorted_copy(b); });

    WeakDual out;
    out.faces = faces;
    auto has_side = [](const std::vector<int> &face, Edge e) {
        const auto n = face.size();
        for (std::size_t i = 0; i < n; ++i)
            if (make_edge(face[i], face[(i + 1) % n]) == e)
                return true;
        return false;
    };
    for (const auto &chord : chord_set) {
        std::vector<int> owners;
        for (std::size_t f = 0; f < faces.size(); ++f)
            if (has_side(faces[f], chord))
                owners.push_back(static_cast<int>(f));
        if (owners.size() != 2)
            throw std::logic_error("weak_dual: chord is not shared by exactly two faces");
        out.adjacencies.emplace_back(owners[0], owners[1]);
        out.shared_chords.push_back(chord);
    }
    return out;
}

OuterplanarEmbedding restrict_embedding(const Graph &g, std::span<const int> block_vertices,
                                        std::span<const int> order_hint)
{
    std::set<int> members(block_vertices.begin(), block_vertices.end());
    OuterplanarEmbedding emb;
    for (int v : order_hint)
        if (members.count(v))
            emb.outer_cycle.push_back(v);
    if (emb.outer_cycle.size() != members.size())
        throw std::invalid_argument("restrict_embedding: order hint does not cover the block");
    const auto n = emb.outer_cycle.size();
    std::set<Edge> outer;
    for (std::size_t i = 0; i < n; ++i)
        outer.insert(make_edge(emb.outer_cycle[i], emb.outer_cycle[(i + 1) % n]));
    for (auto [u, v] : g.edges())
        if (members.count(u) && members.count(v) && !outer.count({u, v}))
            emb.chords.emplace_back(u, v);
    emb.validate_against(g);
    return emb;
}

bool leaf_cycle_detaches(const Graph &g, const LeafCycleResult &r)
{
    const auto n = r.cycle.size();
    if (n < 3 || r.attachment.empty() || r.attachment.size() > 2)
        return false;
    for (std::size_t i = 0; i < n; ++i)
        if (!g.adjacent(r.cycle[i], r.cycle[(i + 1) % n]))
            return false;
    if (r.attachment.size() == 2 && !g.adjacent(r.attachment[0], r.attachment[1]))
        return false;
    for (int a : r.attachment)
        if (std::find(r.cycle.begin(), r.cycle.end(), a) == r.cycle.end())
            return false;

    std::vector<char> removed(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int a : r.attachment)
        removed[a] = 1;
    std::set<int> rest;
    for (int v : r.cycle)
        if (!removed[v])
            rest.insert(v);
    if (rest.empty())
        return false;
    std::vector<char> seen(removed);
    std::vector<int> queue{*rest.begin()};
    seen[queue[0]] = 1;
    std::set<int> component;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        component.insert(queue[i]);
        for (int w : g.neighbors(queue[i]))
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
    }
    if (component != rest)
        return false;
    // G minus the attachment must have at least two components.
    return std::count(seen.begin(), seen.end(), 0) > 0;
}

LeafCycleResult find_leaf_cycle(const Graph &g, std::span<const OuterplanarEmbedding> embeddings)
{
    if (!is_connected(g))
        throw std::invalid_argument("find_leaf_cycle: graph is disconnected");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) < 2)
            throw std::invalid_argument("find_leaf_cycle: vertex " + std::to_string(v) + " has degree < 2");
    if (static_cast<long>(g.edge_count()) - g.vertex_count() + 1 < 2)
        throw std::invalid_argument("find_leaf_cycle: graph has fewer than two cycles");

    auto tree = block_cutpoint_tree(g);

    auto block_embedding = [&](std::size_t b) {
        for (const auto &e : embeddings) {
            std::set<int> outer(e.outer_cycle.begin(), e.outer_cycle.end());
            if (std::all_of(tree.blocks[b].begin(), tree.blocks[b].end(), [&](int v) { return outer.count(v) > 0; }))
                return restrict_embedding(g, tree.blocks[b], e.outer_cycle);
        }
        throw std::invalid_argument("find_leaf_cycle: no embedding supplied for a block containing vertex " +
                                    std::to_string(tree.blocks[b].front()));
    };
    auto block_is_cycle = [&](std::size_t b) {
        return tree.blocks[b].size() >= 3 && tree.block_edges[b].size() == tree.blocks[b].size();
    };
    auto block_cycle = [&](std::size_t b) {
        auto h = induced_subgraph(g, tree.blocks[b]);
        std::vector<int> order;
        for (int v : cycle_order(h.graph))
            order.push_back(h.to_parent[v]);
        return order;
    };
    auto start_at = [](const std::vector<int> &cycle, int x) {
        // Follow x's smaller cycle neighbour first.
        const auto n = cycle.size();
        auto i = static_cast<std::size_t>(std::find(cycle.begin(), cycle.end(), x) - cycle.begin());
        int y = std::min(cycle[(i + 1) % n], cycle[(i + n - 1) % n]);
        return rotate_to(cycle, x, y);
    };

    std::vector<std::size_t> candidates;
    for (std::size_t b = 0; b < tree.blocks.size(); ++b)
        if (tree.blocks.size() == 1 || tree.is_leaf_block(b))
            candidates.push_back(b);
    std::sort(candidates.begin(), candidates.end(),
              [&](std::size_t a, std::size_t b) { return tree.blocks[a] < tree.blocks[b]; });

    for (std::size_t b : candidates) {
        auto cuts = tree.cut_vertices_of(b);
        int cut = cuts.empty() ? -1 : cuts.front();
        if (block_is_cycle(b)) {
            if (cut < 0)
                continue;
            LeafCycleResult r{start_at(block_cycle(b), cut), {cut}};
            if (leaf_cycle_detaches(g, r))
                return r;
            continue;
        }
        auto dual = weak_dual(block_embedding(b));
        for (std::size_t f = 0; f < dual.faces.size(); ++f) {
            if (dual.degree(static_cast<int>(f)) != 1)
                continue;
            Edge chord{};
            for (std::size_t a = 0; a < dual.adjacencies.size(); ++a)
                if (dual.adjacencies[a].first == static_cast<int>(f) ||
                    dual.adjacencies[a].second == static_cast<int>(f))
                    chord = dual.shared_chords[a];
            if (cut >= 0 && cut != chord.first && cut != chord.second &&
                std::find(dual.faces[f].begin(), dual.faces[f].end(), cut) != dual.faces[f].end())
                continue;
            LeafCycleResult r{rotate_to(dual.faces[f], chord.first, chord.second), {chord.first, chord.second}};
            if (leaf_cycle_detaches(g, r))
                return r;
        }
    }

    // Fallback: scan every inner face of every block with every admissible attachment.
    for (std::size_t b = 0; b < tree.blocks.size(); ++b) {
        if (tree.blocks[b].size() < 3)
            continue;
        std::vector<std::vector<int>> faces;
        if (block_is_cycle(b))
            faces.push_back(block_cycle(b));
        else
            faces = weak_dual(block_embedding(b)).faces;
        for (const auto &face : faces) {
            const auto n = face.size();
            for (std::size_t i = 0; i < n; ++i) {
                LeafCycleResult single{start_at(face, face[i]), {face[i]}};
                if (leaf_cycle_detaches(g, single))
                    return single;
                int x = face[i], y = face[(i + 1) % n];
                LeafCycleResult pair{rotate_to(face, std::min(x, y), std::max(x, y)), {std::min(x, y), std::max(x, y)}};
                if (leaf_cycle_detaches(g, pair))
                    return pair;
            }
        }
    }
    throw std::logic_error("find_leaf_cycle: no detachable cycle found; graph is not outerplanar as embedded");
}

}  // namespace primedist
