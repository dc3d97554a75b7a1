#pragma once

#include <primedist/graphs.hpp>
#include <primedist/labeling.hpp>

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace primedist {

/// Bounded labeling search. The space covered is every labeling whose labels
/// fit in [-B, B] after some translation (equivalently max - min <= 2B),
/// quotiented by translation (first vertex in search order is 0) and
/// negation (second vertex in search order is positive).
struct SearchConfig {
    Int label_bound = 100;  ///< B
    Predicate predicate{};
    GapRule gap_rule = GapRule::adjacent_pairs;
    std::uint64_t node_budget = 10'000'000;
    bool deterministic = false;  ///< force the serial reference search
    int jobs = 0;                ///< OpenMP threads; 0 = runtime default
    bool even_labels_only = false;

    /// Throws std::invalid_argument unless B >= 2, budget >= 1, k >= 1.
    void validate() const;
};

enum class SearchStatus {
    found,
    exhausted,   ///< no labeling within the bound; evidence, not proof
    budget_out,  ///< node budget ran out first
};

std::string_view to_string(SearchStatus s);

struct SearchOutcome {
    SearchStatus status = SearchStatus::exhausted;
    std::optional<Labeling> certificate;
    std::uint64_t nodes_explored = 0;
    double seconds = 0.0;
    Int label_bound = 0;
    Predicate predicate{};
};

/// Vertex order: max degree first, then the vertex with most already-ordered
/// neighbours (ties by degree, then index).
std::vector<int> search_order(const Graph &g);

/// Dispatches to the parallel search unless cfg.deterministic is set.
SearchOutcome search_labeling(const Graph &g, const SearchConfig &cfg);
/// Reference depth-first search; certificate is the first in DFS order.
SearchOutcome search_labeling_serial(const Graph &g, const SearchConfig &cfg);
/// OpenMP subtree split; same certificate as the serial search whenever the
/// node budget is not hit.
SearchOutcome search_labeling_parallel(const Graph &g, const SearchConfig &cfg);

struct Enumeration {
    SearchStatus status = SearchStatus::exhausted;  ///< exhausted = list complete, found = stopped at limit
    std::vector<Labeling> certificates;
    std::uint64_t nodes_explored = 0;
    bool truncated = false;  ///< stopped at `limit`
};

/// Every labeling in the quotiented space, in DFS order (serial).
Enumeration enumerate_labelings(const Graph &g, const SearchConfig &cfg, std::size_t limit = 1'000'000);

/// Red edges join equal-parity vertices, blue edges cross.
struct RedBlueColoring {
    std::vector<Edge> red;
    std::vector<Edge> blue;
    std::vector<int> parity;  ///< empty when not produced from a parity assignment
};

/// Searches vertex parity assignments (vertex 0 fixed) for one whose red
/// subgraph has max degree <= 2 and no cycle. Throws BudgetExhausted after
/// `budget` assignments. Returns the witness with the smallest assignment.
std::optional<RedBlueColoring> decide_2odd(const Graph &g, std::uint64_t budget = 1ull << 32);
std::optional<RedBlueColoring> decide_2odd_serial(const Graph &g, std::uint64_t budget = 1ull << 32);

/// Enumerates every red/blue edge colouring and checks red-degree <= 2 and
/// "every cycle has a positive even number of blue edges" literally.
/// Rejects graphs with more than 20 edges.
std::optional<RedBlueColoring> naive_2odd_oracle(const Graph &g);

/// Red-degree <= 2, red subgraph acyclic, and a parity assignment exists
/// under which blue edges cross and red edges do not.
bool is_valid_2odd_witness(const Graph &g, const RedBlueColoring &w);

/// Simple cycles of g as sorted edge lists (exponential; small graphs only).
std::vector<std::vector<Edge>> simple_cycles(const Graph &g);

}  // namespace primedist
