#pragma once

#include <primedist/labeling.hpp>
#include <primedist/outerplanar.hpp>
#include <primedist/search.hpp>

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace primedist {

// Every constructor verifies its own output and throws ConstructionFailure
// rather than return a labeling that fails verification.

/// K_n labeling 2i (i <= n/2) and 2i+1 (i > n/2) for vertices i = 1..n,
/// a product labeling with ceil(log2 n) - 1 prime factors per gap. n >= 3.
Labeling label_complete(int n);

/// Prime power labelings of K_n for n <= 6: {0,2,5,7} (k = 1) and
/// {0,2,4,7,9,11} (k = 2), truncated to n vertices.
struct PowerFixture {
    Labeling labeling;
    int k = 1;
};
PowerFixture label_complete_power(int n);

/// AP length needed to label a k-partite graph with largest part `max_part`.
int required_ap_length(int parts, std::size_t max_part);

/// Product labeling of a properly k-coloured graph from a prime arithmetic
/// progression: part x (1-based) vertices get x*P + c*k!*d for c = 1..|part|,
/// where P is the progression's centre term. Every edge gap is |x-y| times a
/// term of the progression, so it has at most ceil(log2 k) prime factors.
Labeling label_multipartite_via_ap(const Graph &g, const Partition &parts, const PrimeAP &ap);
/// As above, finding the progression with find_prime_ap(required length, budget).
/// Throws BudgetExhausted naming the required length when none is found.
Labeling label_multipartite_via_ap(const Graph &g, const Partition &parts, Int budget);

/// K_{1,1,c} (vertices x, y, z_1..z_c): x -> 0, y -> 2, z_i -> p_i + 2 over
/// the first c twin pairs below `budget`. Throws BudgetExhausted.
Labeling label_K11c(int c, Int budget);

/// K_{1,2,2} (vertices x, y1, y2, z1, z2): 0, 2, -2, 5, -5.
Labeling label_K122();

/// Strict labeling of C_{2n} from primes p_1..p_n with
/// p_1^k + ... + p_{n-1}^k < p_n^k: ascending partial sums, then the
/// suffix sums back down. Labels follow cycle_graph(2n) order.
Labeling label_even_cycle_with_primes(std::span<const Int> primes, int k);
/// Same construction with the smallest admissible primes >= min_prime.
Labeling label_even_cycle(int n, int k, Int min_prime = 2);

/// Strict labeling of C_{2n+1+2j} from a strict labeling of C_{2n+1}
/// (cycle_graph order), inserting j large primes q_i on each side of the
/// first edge. Each q_i^k exceeds the absolute label sum fixed so far and
/// q_i >= min_prime. Throws std::invalid_argument if `base` is not strict.
Labeling extend_odd_cycle(const Labeling &base, int j, int k, Int min_prime = 2);

/// Which odd power ascends along the cycle in the Bezout cycle construction.
enum class BezoutRole {
    five_ascends,   ///< 0, 5^k, 2*5^k, ..., then down by 3^k
    three_ascends,  ///< 0, 3^k, 2*3^k, ..., then down by 5^k
};

/// Labels of C_N, N = up - down + 1, with `up` steps of the ascending power,
/// one seam step of 2^k and `-down` steps of the other power. Requires
/// asc^k * up + other^k * down == 2^k, down < 0 < up. Not checked for
/// distinctness.
Labeling bezout_cycle_labels(int k, BezoutRole role, Int down, Int up);

/// Smallest label value occurring twice, if any.
std::optional<Int> find_label_collision(const Labeling &l);

/// The r < 0 < s with 3^k r + 5^k s = 1 and r > -5^k.
std::pair<Int, Int> literal_bezout_coefficients(int k);

struct ExistenceCycle {
    int length = 0;  ///< odd N
    Labeling labeling;
    BezoutRole role{};
    Int down = 0;
    Int up = 0;
};

/// Smallest odd cycle reachable by the Bezout construction (both roles, all
/// representatives) whose labels are pairwise distinct.
ExistenceCycle existence_cycle(int k);

/// Per-k odd cycle base for odd-cycle extension.
class CycleLabelerTable {
public:
    struct Entry {
        int base_length = 0;  ///< odd; every odd n >= base_length is constructible
        Labeling base;        ///< strict labeling of C_{base_length}
        std::string source;
    };

    /// k = 1: C_3 {0,2,5}; k = 2: C_7 {0,4,3485,3124,2283,74,25};
    /// k >= 3: existence_cycle(k). Entries for 1..max_k.
    static CycleLabelerTable standard(int max_k = 4);

    /// Throws std::invalid_argument if `base` is not a strict labeling of an odd cycle.
    void set(int k, Entry entry);
    const Entry &entry(int k) const;
    bool has(int k) const { return entries_.count(k) > 0; }
    /// Upper bound on ppc(k) implied by the table.
    int ppc_upper_bound(int k) const { return entry(k).base_length; }

private:
    std::map<int, Entry> entries_;
};

enum class CycleMethod { even_formula, odd_base, odd_extension, search };

std::string_view to_string(CycleMethod m);

struct CycleLabeling {
    Labeling labeling;
    CycleMethod method{};
};

/// Even n: even-cycle formula. Odd n >= base: base or its extension.
/// Smaller odd n: bounded search with `search_cfg` (predicate forced to
/// strict-k); nullopt when the search does not find one. nullopt never means
/// "proven impossible".
std::optional<CycleLabeling> label_cycle_strict(int n, int k, const CycleLabelerTable &table,
                                                const SearchConfig &search_cfg = {}, Int min_prime = 2);

/// Recursive strict k-th power labeling of an outerplanar graph of girth at
/// least ppc_upper_bound(k) + 6. `embeddings` give outer cycles for blocks that
/// are not plain cycles.
Labeling label_outerplanar(const Graph &g, std::span<const OuterplanarEmbedding> embeddings, int k,
                           const CycleLabelerTable &table);

}  // namespace primedist
