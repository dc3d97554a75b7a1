#pragma once

// Shared depth-first kernel behind the serial and parallel labeling searches.

#include <primedist/search.hpp>

#include <atomic>
#include <functional>
#include <vector>

namespace primedist::detail {

/// Read-only description of one search, shared by every worker.
struct SearchProblem {
    SearchProblem(const Graph &g, const SearchConfig &cfg);

    const Graph &graph;
    SearchConfig cfg;
    Int span;                                  ///< 2B: max allowed label spread
    std::vector<int> order;                    ///< depth -> vertex
    std::vector<std::vector<int>> back_edges;  ///< depth -> earlier depths adjacent to it
    std::vector<char> allowed_gap;             ///< allowed_gap[g] for 0 <= g <= span
    std::vector<Int> gaps;                     ///< allowed gaps, ascending

    Labeling to_labeling(const std::vector<Int> &by_depth) const;
};

/// Node accounting against a budget. In parallel runs workers add their
/// counts in batches, so the total is only approximately enforced.
class NodeCounter {
public:
    NodeCounter(std::atomic<std::uint64_t> &shared, std::uint64_t budget) : shared_(shared), budget_(budget) {}
    ~NodeCounter() { flush(); }

    /// False once the budget is spent.
    bool tick()
    {
        if (++local_ >= batch)
            flush();
        return shared_.load(std::memory_order_relaxed) + local_ <= budget_;
    }
    void flush()
    {
        shared_.fetch_add(local_, std::memory_order_relaxed);
        local_ = 0;
    }

    static constexpr std::uint64_t batch = 256;

private:
    std::atomic<std::uint64_t> &shared_;
    std::uint64_t budget_;
    std::uint64_t local_ = 0;
};

enum class Visit { proceed, stop };

/// A subtree search is abandoned once an earlier subtree (lower index) has
/// produced a labeling.
struct CancelToken {
    const std::atomic<std::size_t> *first_hit = nullptr;
    std::size_t index = 0;

    bool cancelled() const { return first_hit && first_hit->load(std::memory_order_relaxed) < index; }
};

/// Depth-first extension of a partial assignment. The visitor is called for
/// each complete labeling (depth == order.size()) or, when `target_depth` is
/// smaller, for each partial assignment reaching it.
class Explorer {
public:
    using Visitor = std::function<Visit(const std::vector<Int> &by_depth)>;

    Explorer(const SearchProblem &p, NodeCounter &counter, CancelToken cancel = {})
        : p_(p), counter_(counter), cancel_(cancel)
    {
    }

    enum class Result { completed, stopped, budget_out, cancelled };

    /// Explores below `prefix` (labels for depths 0..prefix.size()-1).
    Result run(const std::vector<Int> &prefix, std::size_t target_depth, const Visitor &visit);

private:
    Result dfs(std::size_t depth);
    void candidates(std::size_t depth, std::vector<Int> &out) const;
    bool consistent(std::size_t depth, Int label) const;

    const SearchProblem &p_;
    NodeCounter &counter_;
    CancelToken cancel_;
    std::vector<Int> labels_;
    Int min_ = 0, max_ = 0;
    std::size_t target_ = 0;
    const Visitor *visit_ = nullptr;
};

}  // namespace primedist::detail
