#include <primedist/constructors.hpp>

#include "construct_util.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace primedist {

using detail::prime_with_power_above;
using detail::require_verified;

namespace {

/// Outer-cycle orders re-expressed in the subgraph's local ids. Chords are
/// dropped; find_leaf_cycle rebuilds them from the graph.
std::vector<OuterplanarEmbedding> remap(std::span<const OuterplanarEmbedding> embs, const std::vector<int> &to_parent)
{
    std::map<int, int> local;
    for (std::size_t i = 0; i < to_parent.size(); ++i)
        local[to_parent[i]] = static_cast<int>(i);
    std::vector<OuterplanarEmbedding> out;
    for (const auto &e : embs) {
        OuterplanarEmbedding m;
        for (int v : e.outer_cycle)
            if (auto it = local.find(v); it != local.end())
                m.outer_cycle.push_back(it->second);
        if (m.outer_cycle.size() >= 3)
            out.push_back(std::move(m));
    }
    return out;
}

class OuterplanarLabeler {
public:
    OuterplanarLabeler(int k, const CycleLabelerTable &table) : k_(k), table_(table) {}

    Labeling label(const Graph &g, std::span<const OuterplanarEmbedding> embs)
    {
        const int n = g.vertex_count();
        if (auto gi = girth(g); gi && *gi < table_.ppc_upper_bound(k_) + 6)
            throw std::invalid_argument("label_outerplanar: girth " + std::to_string(*gi) + " is below " +
                                        std::to_string(table_.ppc_upper_bound(k_) + 6));
        if (n == 0)
            return Labeling{};
        if (n == 1)
            return Labeling{0};

        Labeling out;
        auto comps = connected_components(g);
        if (comps.size() > 1)
            out = label_components(g, embs, comps);
        else if (auto leaf = degree_one_vertex(g))
            out = label_pendant(g, embs, *leaf);
        else if (is_cycle(g))
            out = label_single_cycle(g);
        else
            out = label_with_leaf_cycle(g, embs);
        require_verified(g, out, {Mode::strict, k_}, "label_outerplanar");
        return out;
    }

private:
    static std::optional<int> degree_one_vertex(const Graph &g)
    {
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) == 1)
                return v;
        return std::nullopt;
    }

    Labeling label_components(const Graph &g, std::span<const OuterplanarEmbedding> embs,
                              const std::vector<std::vector<int>> &comps)
    {
        std::vector<Int> labels(static_cast<std::size_t>(g.vertex_count()));
        Int next_free = 0;
        for (const auto &comp : comps) {
            auto sub = induced_subgraph(g, comp);
            auto local = label(sub.graph, remap(embs, sub.to_parent));
            const auto [lo, hi] = std::minmax_element(local.values().begin(), local.values().end());
            const Int shift = next_free - *lo;
            for (std::size_t i = 0; i < comp.size(); ++i)
                labels[comp[i]] = checked_add(local[static_cast<int>(i)], shift);
            next_free = checked_add(checked_add(*hi, shift), 1);
        }
        return Labeling(std::move(labels));
    }

    Labeling label_pendant(const Graph &g, std::span<const OuterplanarEmbedding> embs, int x)
    {
        const int y = g.neighbors(x).front();
        std::vector<int> rest;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (v != x)
                rest.push_back(v);
        auto sub = induced_subgraph(g, rest);
        auto local = label(sub.graph, remap(embs, sub.to_parent));
        std::vector<Int> labels(static_cast<std::size_t>(g.vertex_count()));
        for (std::size_t i = 0; i < rest.size(); ++i)
            labels[rest[i]] = local[static_cast<int>(i)];
        const Int top = *std::max_element(local.values().begin(), local.values().end());
        labels[x] = checked_add(labels[y], checked_pow(prime_with_power_above(top - labels[y], k_), k_));
        return Labeling(std::move(labels));
    }

    Labeling label_single_cycle(const Graph &g)
    {
        auto order = cycle_order(g);
        auto c = label_cycle_strict(g.vertex_count(), k_, table_);
        if (!c)
            throw ConstructionFailure("label_outerplanar: no labeling for C_" + std::to_string(g.vertex_count()));
        std::vector<Int> labels(order.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            labels[order[i]] = c->labeling[static_cast<int>(i)];
        return Labeling(std::move(labels));
    }

    /// Cycle C = x, y, z, x_1..x_m, a, b, c with C - {x, y} hanging off x and y.
    Labeling label_with_leaf_cycle(const Graph &g, std::span<const OuterplanarEmbedding> embs)
    {
        auto leaf = find_leaf_cycle(g, embs);
        const auto &cyc = leaf.cycle;
        const int len = static_cast<int>(cyc.size());
        const int m = len - 6;
        if (m < 3)
            throw std::invalid_argument("label_outerplanar: leaf cycle of length " + std::to_string(len) +
                                        " is too short");
        const int x = cyc[0], y = cyc[1], z = cyc[2], a = cyc[len - 3], b = cyc[len - 2], c = cyc[len - 1];

        std::vector<int> kept;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (v == x || v == y || std::find(cyc.begin(), cyc.end(), v) == cyc.end())
                kept.push_back(v);
        auto sub = induced_subgraph(g, kept);
        auto local_of = [&](int v) {
            return static_cast<int>(std::find(kept.begin(), kept.end(), v) - kept.begin());
        };
        auto l1 = normalize(label(sub.graph, remap(embs, sub.to_parent)), local_of(x), local_of(y));
        const Int pk = l1[local_of(y)];

        auto inner = label_cycle_strict(m, k_, table_);
        if (!inner)
            throw ConstructionFailure("label_outerplanar: no labeling for C_" + std::to_string(m));

        // L(b) = r^k + q^k meets some L(x_i) when L2(x_i) = -p^k; then try the
        // reversed inner cycle and inner cycles built from other primes.
        auto try_inner = [&](const Labeling &l2) -> std::optional<Labeling> {
            std::vector<Int> rev(static_cast<std::size_t>(m));
            for (int i = 0; i < m; ++i)
                rev[i] = l2[(m - i) % m];
            for (const auto &option : {normalize(l2, 0, 1), normalize(Labeling(std::move(rev)), 0, 1)}) {
                auto attempt = assemble(g, sub.to_parent, l1, option, pk, cyc, {x, y, z, a, b, c});
                if (attempt.is_injective() && verify_strict(g, attempt, k_).ok)
                    return attempt;
            }
            return std::nullopt;
        };
        if (auto done = try_inner(inner->labeling))
            return *done;
        for (Int min_prime : {3, 7, 13, 29}) {
            auto alt = label_cycle_strict(m, k_, table_, {}, min_prime);
            if (!alt)
                continue;
            if (auto done = try_inner(alt->labeling))
                return *done;
        }
        throw ConstructionFailure("label_outerplanar: every inner cycle option collides");
    }

    Labeling assemble(const Graph &g, const std::vector<int> &to_parent, const Labeling &l1, const Labeling &l2,
                      Int pk, const std::vector<int> &cyc, std::array<int, 6> named) const
    {
        const auto [x, y, z, a, b, c] = named;
        (void)x;
        (void)y;
        const int m = l2.size();
        const Int sk = l2[1];
        const Int bound = checked_add(l1.absolute_sum(), l2.absolute_sum());
        const Int q = prime_with_power_above(bound, k_);
        const Int r = prime_with_power_above(bound, k_, q + 1);
        const Int qk = checked_pow(q, k_), rk = checked_pow(r, k_);

        std::vector<Int> labels(static_cast<std::size_t>(g.vertex_count()));
        for (std::size_t i = 0; i < to_parent.size(); ++i)
            labels[to_parent[i]] = l1[static_cast<int>(i)];
        const Int prq = checked_add(checked_add(pk, rk), qk);
        labels[z] = checked_add(pk, rk);
        labels[cyc[3]] = checked_add(labels[z], sk);
        for (int i = 1; i < m; ++i)
            labels[cyc[3 + i]] = checked_add(l2[i], prq);
        labels[a] = prq;
        labels[b] = checked_add(rk, qk);
        labels[c] = rk;
        return Labeling(std::move(labels));
    }

    int k_;
    const CycleLabelerTable &table_;
};

}  // namespace

Labeling label_outerplanar(const Graph &g, std::span<const OuterplanarEmbedding> embeddings, int k,
                           const CycleLabelerTable &table)
{
    if (k < 1)
        throw std::invalid_argument("label_outerplanar: k must be >= 1");
    for (const auto &e : embeddings)
        e.validate();
    return OuterplanarLabeler(k, table).label(g, embeddings);
}

}  // namespace primedist
