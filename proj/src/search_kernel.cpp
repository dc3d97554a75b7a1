#include "search_kernel.hpp"

#include <algorithm>
#include <stdexcept>

namespace primedist {

void SearchConfig::validate() const
{
    if (label_bound < 2)
        throw std::invalid_argument("search: label bound must be >= 2");
    if (label_bound > (Int{1} << 40))
        throw std::invalid_argument("search: label bound too large");
    if (node_budget < 1)
        throw std::invalid_argument("search: node budget must be >= 1");
    if (predicate.k < 1)
        throw std::invalid_argument("search: k must be >= 1");
}

std::string_view to_string(SearchStatus s)
{
    switch (s) {
    case SearchStatus::found:
        return "found";
    case SearchStatus::exhausted:
        return "exhausted";
    case SearchStatus::budget_out:
        return "budget_out";
    }
    return "?";
}

std::vector<int> search_order(const Graph &g)
{
    const int n = g.vertex_count();
    std::vector<int> order;
    std::vector<char> placed(static_cast<std::size_t>(n), 0);
    std::vector<int> ordered_neighbours(static_cast<std::size_t>(n), 0);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (placed[v])
                continue;
            if (best < 0 || ordered_neighbours[v] > ordered_neighbours[best] ||
                (ordered_neighbours[v] == ordered_neighbours[best] && g.degree(v) > g.degree(best)))
                best = v;
        }
        placed[best] = 1;
        order.push_back(best);
        for (int w : g.neighbors(best))
            ++ordered_neighbours[w];
    }
    return order;
}

namespace detail {

SearchProblem::SearchProblem(const Graph &g, const SearchConfig &c) : graph(g), cfg(c), span(2 * c.label_bound)
{
    cfg.validate();
    order = search_order(g);
    std::vector<int> depth_of(static_cast<std::size_t>(g.vertex_count()));
    for (std::size_t d = 0; d < order.size(); ++d)
        depth_of[order[d]] = static_cast<int>(d);
    back_edges.resize(order.size());
    for (std::size_t d = 0; d < order.size(); ++d)
        for (int w : g.neighbors(order[d]))
            if (depth_of[w] < static_cast<int>(d))
                back_edges[d].push_back(depth_of[w]);
    allowed_gap.assign(static_cast<std::size_t>(span) + 1, 0);
    for (Int gap = 1; gap <= span; ++gap)
        if (gap_allowed(cfg.predicate, gap)) {
            allowed_gap[gap] = 1;
            gaps.push_back(gap);
        }
}

Labeling SearchProblem::to_labeling(const std::vector<Int> &by_depth) const
{
    std::vector<Int> values(order.size());
    for (std::size_t d = 0; d < order.size(); ++d)
        values[order[d]] = by_depth[d];
    return Labeling(std::move(values));
}

Explorer::Result Explorer::run(const std::vector<Int> &prefix, std::size_t target_depth, const Visitor &visit)
{
    labels_.assign(p_.order.size(), 0);
    std::copy(prefix.begin(), prefix.end(), labels_.begin());
    min_ = max_ = 0;
    for (Int v : prefix) {
        min_ = std::min(min_, v);
        max_ = std::max(max_, v);
    }
    target_ = target_depth;
    visit_ = &visit;
    return dfs(prefix.size());
}

void Explorer::candidates(std::size_t depth, std::vector<Int> &out) const
{
    out.clear();
    if (depth == 0) {
        out.push_back(0);
        return;
    }
    const Int lo = max_ - p_.span, hi = min_ + p_.span;
    const auto &back = p_.back_edges[depth];
    if (back.empty()) {
        for (Int c = lo; c <= hi; ++c)
            out.push_back(c);
    } else {
        const Int anchor = labels_[back.front()];
        for (auto it = p_.gaps.rbegin(); it != p_.gaps.rend(); ++it)
            if (anchor - *it >= lo)
                out.push_back(anchor - *it);
        for (Int gap : p_.gaps) {
            if (anchor + gap > hi)
                break;
            out.push_back(anchor + gap);
        }
    }
    // Negation symmetry: the second vertex is positive.
    if (depth == 1)
        out.erase(std::remove_if(out.begin(), out.end(), [](Int c) { return c <= 0; }), out.end());
    if (p_.cfg.even_labels_only)
        out.erase(std::remove_if(out.begin(), out.end(), [](Int c) { return c % 2 != 0; }), out.end());
}

bool Explorer::consistent(std::size_t depth, Int label) const
{
    if (label < max_ - p_.span || label > min_ + p_.span)
        return false;
    const bool all_pairs = p_.cfg.predicate.mode == Mode::product && p_.cfg.gap_rule == GapRule::all_pairs;
    for (std::size_t d = 0; d < depth; ++d) {
        Int diff = label - labels_[d];
        if (diff == 0 || (all_pairs && (diff == 1 || diff == -1)))
            return false;
    }
    for (int d : p_.back_edges[depth]) {
        Int diff = label - labels_[d];
        if (!p_.allowed_gap[static_cast<std::size_t>(diff < 0 ? -diff : diff)])
            return false;
    }
    return true;
}

Explorer::Result Explorer::dfs(std::size_t depth)
{
    if (cancel_.cancelled())
        return Result::cancelled;
    if (depth == target_)
        return (*visit_)(labels_) == Visit::stop ? Result::stopped : Result::completed;

    std::vector<Int> cands;
    candidates(depth, cands);
    const Int saved_min = min_, saved_max = max_;
    for (Int c : cands) {
        if (!consistent(depth, c))
            continue;
        if (!counter_.tick())
            return Result::budget_out;
        labels_[depth] = c;
        min_ = std::min(saved_min, c);
        max_ = std::max(saved_max, c);
        auto r = dfs(depth + 1);
        min_ = saved_min;
        max_ = saved_max;
        if (r != Result::completed)
            return r;
    }
    return Result::completed;
}

}  // namespace detail
}  // namespace primedist
