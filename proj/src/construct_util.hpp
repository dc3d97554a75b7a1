#pragma once

#include <primedist/errors.hpp>
#include <primedist/labeling.hpp>

#include <string>

namespace primedist::detail {

/// Throws ConstructionFailure naming the first violation.
inline void require_verified(const Graph &g, const Labeling &l, const Predicate &pred, const std::string &what)
{
    auto report = verify(g, l, pred);
    if (report.ok)
        return;
    const auto &v = report.violations.front();
    throw ConstructionFailure(what + ": output failed verification at (" + std::to_string(v.u) + "," +
                              std::to_string(v.v) + "), gap " + std::to_string(v.gap) + " (" +
                              std::string(to_string(v.reason)) + ")");
}

/// Smallest prime p >= min_prime with p^k > bound.
inline Int prime_with_power_above(Int bound, int k, Int min_prime = 2)
{
    Int p = next_prime(std::max<Int>(min_prime, bound < 0 ? 2 : integer_root(bound, k) + 1));
    while (checked_pow(p, k) <= bound)
        p = next_prime(p + 1);
    return p;
}

}  // namespace primedist::detail
