#include <primedist/constructors.hpp>

#include "construct_util.hpp"

#include <algorithm>
#include <stdexcept>

namespace primedist {

using detail::require_verified;

Labeling label_complete(int n)
{
    if (n < 3)
        throw std::invalid_argument("label_complete: n must be >= 3");
    std::vector<Int> labels;
    for (Int i = 1; i <= n; ++i)
        labels.push_back(2 * i <= n ? 2 * i : 2 * i + 1);
    Labeling l(std::move(labels));
    auto g = complete_graph(n);
    const int k = std::max(1, ceil_log2(n) - 1);
    auto report = verify_product(g, l, k, GapRule::all_pairs);
    if (!report.ok)
        throw ConstructionFailure("label_complete: output failed verification");
    return l;
}

PowerFixture label_complete_power(int n)
{
    if (n < 1 || n > 6)
        throw std::invalid_argument("label_complete_power: fixtures exist for 1 <= n <= 6 only");
    PowerFixture f;
    std::vector<Int> base;
    if (n <= 4) {
        base = {0, 2, 5, 7};
        f.k = 1;
    } else {
        base = {0, 2, 4, 7, 9, 11};
        f.k = 2;
    }
    base.resize(static_cast<std::size_t>(n));
    f.labeling = Labeling(std::move(base));
    require_verified(complete_graph(n), f.labeling, {Mode::power, f.k}, "label_complete_power");
    return f;
}

namespace {

Int factorial(int k)
{
    Int f = 1;
    for (int i = 2; i <= k; ++i)
        f = checked_mul(f, i);
    return f;
}

}  // namespace

int required_ap_length(int parts, std::size_t max_part)
{
    if (parts < 1 || parts > 20 || max_part < 1)
        throw std::invalid_argument("required_ap_length: need 1 <= parts <= 20 and max_part >= 1");
    const Int f = factorial(parts);
    const Int j = static_cast<Int>(max_part);
    Int len = std::max(checked_add(checked_mul(j, f), 1), checked_add(checked_mul(2 * (j - 1), f), 1));
    if (len > 1'000'000)
        throw std::invalid_argument("required_ap_length: progression length out of range");
    return static_cast<int>(len);
}

Labeling label_multipartite_via_ap(const Graph &g, const Partition &parts, const PrimeAP &ap)
{
    validate_partition(g, parts);
    if (!is_proper_partition(g, parts))
        throw std::invalid_argument("label_multipartite_via_ap: partition is not a proper colouring");
    const int k = static_cast<int>(parts.parts.size());
    const int need = required_ap_length(k, parts.max_part_size());
    if (ap.length < need)
        throw std::invalid_argument("label_multipartite_via_ap: progression has length " + std::to_string(ap.length) +
                                    ", need " + std::to_string(need));
    if (!is_prime_ap(ap))
        throw std::invalid_argument("label_multipartite_via_ap: not a prime arithmetic progression with first > 2");

    // Offsets c*k!*d between parts x and y change the gap by a multiple of
    // (x - y)*d, so gaps stay |x - y| times a term within k!(j-1) of the centre.
    const Int fk = factorial(k);
    const Int j = static_cast<Int>(parts.max_part_size());
    const Int centre = ap.term(static_cast<int>(fk * (j - 1)));
    const Int shift = checked_mul(fk, ap.step);
    std::vector<Int> labels(static_cast<std::size_t>(g.vertex_count()));
    for (int x = 1; x <= k; ++x) {
        const auto &part = parts.parts[static_cast<std::size_t>(x - 1)];
        for (std::size_t c = 1; c <= part.size(); ++c)
            labels[part[c - 1]] = checked_add(checked_mul(x, centre), checked_mul(static_cast<Int>(c), shift));
    }
    Labeling l(std::move(labels));
    require_verified(g, l, {Mode::product, std::max(1, ceil_log2(k))}, "label_multipartite_via_ap");
    return l;
}

Labeling label_multipartite_via_ap(const Graph &g, const Partition &parts, Int budget)
{
    validate_partition(g, parts);
    const int need = required_ap_length(static_cast<int>(parts.parts.size()), parts.max_part_size());
    auto ap = find_prime_ap(need, budget);
    if (!ap)
        throw BudgetExhausted("label_multipartite_via_ap: no prime arithmetic progression of length " +
                              std::to_string(need) + " with terms <= " + std::to_string(budget));
    return label_multipartite_via_ap(g, parts, *ap);
}

Labeling label_K11c(int c, Int budget)
{
    if (c < 1)
        throw std::invalid_argument("label_K11c: c must be >= 1");
    auto pairs = twin_primes(c, budget);
    std::vector<Int> labels{0, 2};
    for (const auto &t : pairs)
        labels.push_back(t.upper);
    Labeling l(std::move(labels));
    const int sizes[] = {1, 1, c};
    require_verified(complete_multipartite(sizes).graph, l, {Mode::power, 1}, "label_K11c");
    return l;
}

Labeling label_K122()
{
    Labeling l{0, 2, -2, 5, -5};
    const int sizes[] = {1, 2, 2};
    require_verified(complete_multipartite(sizes).graph, l, {Mode::power, 1}, "label_K122");
    return l;
}

}  // namespace primedist
