#include "search_kernel.hpp"

#include <omp.h>

#include <chrono>
#include <limits>
#include <stdexcept>

namespace primedist {

using detail::Explorer;
using detail::NodeCounter;
using detail::SearchProblem;
using detail::Visit;

namespace {

struct Prefixes {
    std::vector<std::vector<Int>> items;  ///< in DFS order
    Explorer::Result result;
};

Prefixes collect_prefixes(const SearchProblem &problem, NodeCounter &counter, std::size_t depth)
{
    Prefixes out;
    Explorer explorer(problem, counter);
    Explorer::Visitor visit = [&](const std::vector<Int> &labels) {
        out.items.emplace_back(labels.begin(), labels.begin() + static_cast<long>(depth));
        return Visit::proceed;
    };
    out.result = explorer.run({}, depth, visit);
    return out;
}

}  // namespace

SearchOutcome search_labeling_parallel(const Graph &g, const SearchConfig &cfg)
{
    if (g.vertex_count() == 0)
        throw std::invalid_argument("search: empty graph");
    const auto start = std::chrono::steady_clock::now();
    SearchProblem problem(g, cfg);
    const int threads = cfg.jobs > 0 ? cfg.jobs : omp_get_max_threads();
    const std::size_t n = problem.order.size();

    // Split at the shallowest depth giving enough independent subtrees.
    std::atomic<std::uint64_t> nodes{0};
    Prefixes prefixes;
    std::size_t split = std::min<std::size_t>(1, n);
    while (true) {
        nodes = 0;
        NodeCounter counter(nodes, cfg.node_budget);
        prefixes = collect_prefixes(problem, counter, split);
        counter.flush();
        if (prefixes.result == Explorer::Result::budget_out || split + 1 >= n ||
            prefixes.items.size() >= 8 * static_cast<std::size_t>(threads))
            break;
        ++split;
    }

    SearchOutcome out;
    out.label_bound = cfg.label_bound;
    out.predicate = cfg.predicate;
    auto finish = [&](SearchStatus s) {
        out.status = s;
        out.nodes_explored = nodes.load();
        out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return out;
    };
    if (prefixes.result == Explorer::Result::budget_out)
        return finish(SearchStatus::budget_out);
    if (split == n) {
        if (prefixes.items.empty())
            return finish(SearchStatus::exhausted);
        out.certificate = problem.to_labeling(prefixes.items.front());
        return finish(SearchStatus::found);
    }

    const std::size_t count = prefixes.items.size();
    std::vector<Explorer::Result> results(count, Explorer::Result::cancelled);
    std::vector<std::optional<Labeling>> found(count);
    // Index of the earliest subtree known to hold a labeling; later subtrees stop.
    std::atomic<std::size_t> first_hit{std::numeric_limits<std::size_t>::max()};
    std::atomic<bool> out_of_budget{false};

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::size_t i = 0; i < count; ++i) {
        if (i > first_hit.load() || out_of_budget.load())
            continue;
        NodeCounter counter(nodes, cfg.node_budget);
        Explorer explorer(problem, counter, {&first_hit, i});
        Explorer::Visitor visit = [&](const std::vector<Int> &labels) {
            found[i] = problem.to_labeling(labels);
            return Visit::stop;
        };
        results[i] = explorer.run(prefixes.items[i], n, visit);
        if (results[i] == Explorer::Result::stopped && found[i]) {
            std::size_t cur = first_hit.load();
            while (i < cur && !first_hit.compare_exchange_weak(cur, i)) {
            }
        } else if (results[i] == Explorer::Result::budget_out) {
            out_of_budget = true;
        }
    }

    bool budget_hit = false;
    for (std::size_t i = 0; i < count; ++i) {
        if (found[i]) {
            out.certificate = found[i];
            return finish(SearchStatus::found);
        }
        if (results[i] == Explorer::Result::budget_out || results[i] == Explorer::Result::cancelled)
            budget_hit = true;
    }
    return finish(budget_hit ? SearchStatus::budget_out : SearchStatus::exhausted);
}

}  // namespace primedist
