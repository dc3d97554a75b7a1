#include "search_kernel.hpp"

#include <chrono>
#include <stdexcept>

namespace primedist {

using detail::Explorer;
using detail::NodeCounter;
using detail::SearchProblem;
using detail::Visit;

SearchOutcome search_labeling_serial(const Graph &g, const SearchConfig &cfg)
{
    if (g.vertex_count() == 0)
        throw std::invalid_argument("search: empty graph");
    const auto start = std::chrono::steady_clock::now();
    SearchProblem problem(g, cfg);
    std::atomic<std::uint64_t> nodes{0};
    SearchOutcome out;
    out.label_bound = cfg.label_bound;
    out.predicate = cfg.predicate;
    Explorer::Result r;
    {
        NodeCounter counter(nodes, cfg.node_budget);
        Explorer explorer(problem, counter);
        Explorer::Visitor visit = [&](const std::vector<Int> &labels) {
            out.certificate = problem.to_labeling(labels);
            return Visit::stop;
        };
        r = explorer.run({}, problem.order.size(), visit);
    }
    out.status = r == Explorer::Result::stopped      ? SearchStatus::found
                 : r == Explorer::Result::budget_out ? SearchStatus::budget_out
                                                     : SearchStatus::exhausted;
    out.nodes_explored = nodes.load();
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

SearchOutcome search_labeling(const Graph &g, const SearchConfig &cfg)
{
    return cfg.deterministic ? search_labeling_serial(g, cfg) : search_labeling_parallel(g, cfg);
}

Enumeration enumerate_labelings(const Graph &g, const SearchConfig &cfg, std::size_t limit)
{
    if (g.vertex_count() == 0)
        throw std::invalid_argument("search: empty graph");
    SearchProblem problem(g, cfg);
    std::atomic<std::uint64_t> nodes{0};
    Enumeration out;
    Explorer::Result r;
    {
        NodeCounter counter(nodes, cfg.node_budget);
        Explorer explorer(problem, counter);
        Explorer::Visitor visit = [&](const std::vector<Int> &labels) {
            out.certificates.push_back(problem.to_labeling(labels));
            return out.certificates.size() >= limit ? Visit::stop : Visit::proceed;
        };
        r = explorer.run({}, problem.order.size(), visit);
    }
    out.truncated = r == Explorer::Result::stopped;
    out.status = r == Explorer::Result::budget_out ? SearchStatus::budget_out
                 : out.truncated                   ? SearchStatus::found
                                                   : SearchStatus::exhausted;
    out.nodes_explored = nodes.load();
    return out;
}

}  // namespace primedist
