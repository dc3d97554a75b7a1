#include <primedist/labeling.hpp>

#include <algorithm>
#include <stdexcept>

namespace primedist {

bool Labeling::is_injective() const
{
    auto sorted = values_;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

Int Labeling::absolute_sum() const
{
    Int s = 0;
    for (Int v : values_)
        s = checked_add(s, abs_diff(v, 0));
    return s;
}

std::string_view to_string(Mode m)
{
    switch (m) {
    case Mode::product:
        return "product";
    case Mode::power:
        return "power";
    case Mode::strict:
        return "strict";
    }
    return "?";
}

Mode parse_mode(std::string_view s)
{
    if (s == "product")
        return Mode::product;
    if (s == "power")
        return Mode::power;
    if (s == "strict")
        return Mode::strict;
    throw std::invalid_argument("unknown mode '" + std::string(s) + "' (expected product, power or strict)");
}

std::string_view to_string(GapRule r) { return r == GapRule::all_pairs ? "all-pairs" : "adjacent-pairs"; }

GapRule parse_gap_rule(std::string_view s)
{
    if (s == "adjacent-pairs" || s == "adjacent")
        return GapRule::adjacent_pairs;
    if (s == "all-pairs" || s == "all")
        return GapRule::all_pairs;
    throw std::invalid_argument("unknown gap rule '" + std::string(s) + "'");
}

std::string_view to_string(ViolationReason r)
{
    switch (r) {
    case ViolationReason::duplicate_label:
        return "duplicate-label";
    case ViolationReason::gap_too_small:
        return "gap-too-small";
    case ViolationReason::too_many_prime_factors:
        return "too-many-prime-factors";
    case ViolationReason::not_prime_power:
        return "not-prime-power";
    case ViolationReason::not_strict_power:
        return "not-strict-power";
    }
    return "?";
}

namespace {

std::optional<ViolationReason> edge_failure(const Predicate &pred, Int gap)
{
    if (gap == 0)
        return ViolationReason::duplicate_label;
    if (gap == 1)
        return pred.mode == Mode::product ? ViolationReason::gap_too_small
               : pred.mode == Mode::power ? ViolationReason::not_prime_power
                                          : ViolationReason::not_strict_power;
    switch (pred.mode) {
    case Mode::product:
        if (count_prime_factors(gap) > pred.k)
            return ViolationReason::too_many_prime_factors;
        return std::nullopt;
    case Mode::power:
        if (!classify_prime_power(gap, pred.k))
            return ViolationReason::not_prime_power;
        return std::nullopt;
    case Mode::strict:
        if (!strict_kth_power_base(gap, pred.k))
            return ViolationReason::not_strict_power;
        return std::nullopt;
    }
    return std::nullopt;
}

void check_domain(const Graph &g, const Labeling &l)
{
    if (l.size() != g.vertex_count())
        throw std::invalid_argument("labeling has " + std::to_string(l.size()) + " labels for a graph on " +
                                    std::to_string(g.vertex_count()) + " vertices");
}

}  // namespace

bool gap_allowed(const Predicate &pred, Int gap) { return gap >= 1 && !edge_failure(pred, gap); }

Int edge_gap(const Labeling &l, int u, int v)
{
    if (u < 0 || v < 0 || u >= l.size() || v >= l.size())
        throw std::out_of_range("edge_gap: unknown vertex");
    if (u == v)
        throw std::invalid_argument("edge_gap: u == v");
    return abs_diff(l[u], l[v]);
}

VerificationReport verify(const Graph &g, const Labeling &l, const Predicate &pred, GapRule rule)
{
    if (pred.k < 1)
        throw std::invalid_argument("verify: k must be >= 1");
    check_domain(g, l);
    VerificationReport report{pred, true, {}};
    const int n = g.vertex_count();
    std::vector<char> reported_edge;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            Int gap = abs_diff(l[u], l[v]);
            if (g.adjacent(u, v)) {
                if (auto why = edge_failure(pred, gap))
                    report.violations.push_back({u, v, gap, *why});
            } else if (gap == 0) {
                report.violations.push_back({u, v, gap, ViolationReason::duplicate_label});
            } else if (pred.mode == Mode::product && rule == GapRule::all_pairs && gap == 1) {
                report.violations.push_back({u, v, gap, ViolationReason::gap_too_small});
            }
        }
    report.ok = report.violations.empty();
    return report;
}

VerificationReport verify_product(const Graph &g, const Labeling &l, int k, GapRule rule)
{
    return verify(g, l, {Mode::product, k}, rule);
}

VerificationReport verify_power(const Graph &g, const Labeling &l, int k) { return verify(g, l, {Mode::power, k}); }

VerificationReport verify_strict(const Graph &g, const Labeling &l, int k) { return verify(g, l, {Mode::strict, k}); }

Labeling normalize(const Labeling &l, int anchor, int sign_vertex)
{
    if (anchor == sign_vertex)
        throw std::invalid_argument("normalize: anchor and sign vertex must differ");
    const Int shift = l[anchor];
    std::vector<Int> out;
    out.reserve(l.values().size());
    for (Int v : l.values()) {
        Int d;
        if (__builtin_sub_overflow(v, shift, &d))
            throw std::overflow_error("normalize: overflow");
        out.push_back(d);
    }
    if (out.at(static_cast<std::size_t>(sign_vertex)) < 0)
        for (auto &v : out)
            v = -v;
    return Labeling(std::move(out));
}

}  // namespace primedist
