#pragma once

#include <primedist/constructors.hpp>
#include <primedist/search.hpp>

#include <optional>
#include <string>
#include <vector>

namespace primedist {

struct PpnBounds {
    int chromatic = 0;
    int lower = 0;
    std::optional<int> upper;  ///< empty if no certificate was obtained
    std::optional<Labeling> certificate;
    std::string certificate_source;  ///< "label_complete", "search", "ap_construction", "edgeless"
    /// Searches run, in order (k = predicate.k). An exhausted search at k = lower
    /// is bounded evidence that ppn > lower, not a proof.
    std::vector<SearchOutcome> searches;
    std::string note;  ///< budget failures encountered on the way
};

/// lower = max(1, ceil(log2 chi) - 1); upper = least k in {lower, lower + 1}
/// with a certificate from label_complete (complete graphs), product-k search,
/// or the AP construction at k = ceil(log2 chi). `cfg.predicate` is ignored.
PpnBounds ppn_bounds(const Graph &g, const SearchConfig &cfg, Int ap_budget = 1'000'000);

enum class PpcStatus { constructed, found_by_search, unknown };

std::string_view to_string(PpcStatus s);

struct PpcRow {
    int n = 0;
    PpcStatus status = PpcStatus::unknown;
    std::string method;  ///< constructor used, or "search"
    std::optional<Labeling> certificate;
    /// For unknown rows: the search status ("exhausted" or "budget_out") and its bound.
    std::optional<SearchOutcome> search;
};

/// For 3 <= n <= n_max: constructions first (even formula, odd base or
/// extension), then a bounded strict-k search. Never concludes a value of ppc(k).
std::vector<PpcRow> ppc_scan(int k, int n_max, const SearchConfig &cfg, const CycleLabelerTable &table);

}  // namespace primedist
