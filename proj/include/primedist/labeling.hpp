#pragma once

#include <primedist/graphs.hpp>
#include <primedist/ntheory.hpp>

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace primedist {

/// Injective vertex -> integer map over V(G); entry v is L(v).
class Labeling {
public:
    Labeling() = default;
    explicit Labeling(std::vector<Int> values) : values_(std::move(values)) {}
    Labeling(std::initializer_list<Int> values) : values_(values) {}

    int size() const { return static_cast<int>(values_.size()); }
    Int operator[](int v) const { return values_.at(static_cast<std::size_t>(v)); }
    Int &operator[](int v) { return values_.at(static_cast<std::size_t>(v)); }
    const std::vector<Int> &values() const { return values_; }

    bool is_injective() const;
    /// Sum of |L(v)|, overflow-checked.
    Int absolute_sum() const;

    friend bool operator==(const Labeling &, const Labeling &) = default;

private:
    std::vector<Int> values_;
};

/// Which edge-gap condition a labeling must satisfy.
enum class Mode {
    product,  ///< gap has at most k prime factors (with multiplicity)
    power,    ///< gap is p^j with j <= k
    strict,   ///< gap is p^k exactly
};

struct Predicate {
    Mode mode = Mode::product;
    int k = 1;

    friend bool operator==(const Predicate &, const Predicate &) = default;
};

std::string_view to_string(Mode m);
Mode parse_mode(std::string_view s);

/// Scope of the "gap > 1" rule for product labelings.
enum class GapRule {
    adjacent_pairs,  ///< only edges need gap > 1 (default)
    all_pairs,       ///< every distinct pair needs gap > 1
};

std::string_view to_string(GapRule r);
GapRule parse_gap_rule(std::string_view s);

/// True if an edge gap satisfies the predicate's gap condition (gap >= 1).
bool gap_allowed(const Predicate &pred, Int gap);

enum class ViolationReason {
    duplicate_label,
    gap_too_small,
    too_many_prime_factors,
    not_prime_power,
    not_strict_power,
};

std::string_view to_string(ViolationReason r);

struct Violation {
    int u = 0;
    int v = 0;
    Int gap = 0;
    ViolationReason reason{};
};

struct VerificationReport {
    Predicate predicate;
    bool ok = true;
    std::vector<Violation> violations;
};

/// |L(u) - L(v)|; throws std::out_of_range for unknown vertices and
/// std::invalid_argument when u == v.
Int edge_gap(const Labeling &l, int u, int v);

/// Every edge gap has at most k prime factors and is > 1; with
/// GapRule::all_pairs every distinct pair must also differ by more than 1.
VerificationReport verify_product(const Graph &g, const Labeling &l, int k,
                                  GapRule rule = GapRule::adjacent_pairs);
/// Every edge gap is p^j with j <= k; labels distinct.
VerificationReport verify_power(const Graph &g, const Labeling &l, int k);
/// Every edge gap is p^k; labels distinct.
VerificationReport verify_strict(const Graph &g, const Labeling &l, int k);

VerificationReport verify(const Graph &g, const Labeling &l, const Predicate &pred,
                          GapRule rule = GapRule::adjacent_pairs);

/// Translate so `anchor` gets 0, then negate if needed so `sign_vertex` is positive.
Labeling normalize(const Labeling &l, int anchor, int sign_vertex);

}  // namespace primedist
