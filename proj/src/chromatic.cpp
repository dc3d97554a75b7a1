#include <primedist/graphs.hpp>

#include <algorithm>
#include <string>

namespace primedist {

ChromaticBudgetExhausted::ChromaticBudgetExhausted(int lower_, int upper_)
    : BudgetExhausted("chromatic_number: node budget exhausted with " + std::to_string(lower_) +
                      " <= chi <= " + std::to_string(upper_)),
      lower(lower_), upper(upper_)
{
}

namespace {

int greedy_clique_size(const Graph &g)
{
    const int n = g.vertex_count();
    int best = n > 0 ? 1 : 0;
    for (int s = 0; s < n; ++s) {
        std::vector<int> clique{s};
        std::vector<int> cand = g.neighbors(s);
        std::sort(cand.begin(), cand.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
        for (int v : cand)
            if (std::all_of(clique.begin(), clique.end(), [&](int c) { return g.adjacent(c, v); }))
                clique.push_back(v);
        best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
}

class Dsatur {
public:
    Dsatur(const Graph &g, std::uint64_t &nodes, std::uint64_t budget)
        : g_(g), colour_(static_cast<std::size_t>(g.vertex_count()), -1), nodes_(nodes), budget_(budget)
    {
    }

    std::vector<int> greedy()
    {
        std::fill(colour_.begin(), colour_.end(), -1);
        for (int step = 0; step < g_.vertex_count(); ++step) {
            int v = select();
            auto used = neighbour_colours(v);
            int c = 0;
            while (c < static_cast<int>(used.size()) && used[c])
                ++c;
            colour_[v] = c;
        }
        return colour_;
    }

    /// Tries to colour with at most `limit` colours; throws on budget exhaustion.
    bool colourable(int limit)
    {
        std::fill(colour_.begin(), colour_.end(), -1);
        return expand(0, limit, 0);
    }

    const std::vector<int> &colours() const { return colour_; }

private:
    std::vector<char> neighbour_colours(int v) const
    {
        std::vector<char> used(static_cast<std::size_t>(g_.vertex_count()) + 1, 0);
        for (int w : g_.neighbors(v))
            if (colour_[w] >= 0)
                used[colour_[w]] = 1;
        return used;
    }

    int select() const
    {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < g_.vertex_count(); ++v) {
            if (colour_[v] >= 0)
                continue;
            auto used = neighbour_colours(v);
            int sat = static_cast<int>(std::count(used.begin(), used.end(), 1));
            if (sat > best_sat || (sat == best_sat && g_.degree(v) > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = g_.degree(v);
            }
        }
        return best;
    }

    bool expand(int coloured, int limit, int in_use)
    {
        if (coloured == g_.vertex_count())
            return true;
        if (++nodes_ > budget_)
            throw BudgetExhausted("dsatur");
        int v = select();
        auto used = neighbour_colours(v);
        // Colours above in_use are interchangeable, so only one new colour is tried.
        for (int c = 0; c < std::min(limit, in_use + 1); ++c) {
            if (used[c])
                continue;
            colour_[v] = c;
            if (expand(coloured + 1, limit, std::max(in_use, c + 1)))
                return true;
        }
        colour_[v] = -1;
        return false;
    }

    const Graph &g_;
    std::vector<int> colour_;
    std::uint64_t &nodes_;
    std::uint64_t budget_;
};

}  // namespace

Coloring chromatic_number(const Graph &g, std::uint64_t node_budget)
{
    const int n = g.vertex_count();
    if (n == 0)
        return {0, {}};
    std::uint64_t nodes = 0;
    Dsatur solver(g, nodes, node_budget);
    auto best = solver.greedy();
    int upper = *std::max_element(best.begin(), best.end()) + 1;
    int lower = greedy_clique_size(g);

    // Walk k upward: the first feasible k is chi, and every smaller k was refuted.
    for (int k = lower; k < upper; ++k) {
        bool ok = false;
        try {
            ok = solver.colourable(k);
        } catch (const BudgetExhausted &) {
            throw ChromaticBudgetExhausted(k, upper);
        }
        if (ok) {
            best = solver.colours();
            upper = k;
            break;
        }
    }
    return {upper, best};
}

}  // namespace primedist
