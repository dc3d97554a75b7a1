#include <primedist/constructors.hpp>

#include "construct_util.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <stdexcept>

namespace primedist {

using detail::prime_with_power_above;
using detail::require_verified;

Labeling label_even_cycle_with_primes(std::span<const Int> primes, int k)
{
    const auto n = primes.size();
    if (n < 2)
        throw std::invalid_argument("label_even_cycle: need at least 2 primes");
    if (k < 1)
        throw std::invalid_argument("label_even_cycle: k must be >= 1");
    std::vector<Int> powers;
    for (Int p : primes) {
        if (!is_prime(p))
            throw std::invalid_argument("label_even_cycle: " + std::to_string(p) + " is not prime");
        powers.push_back(checked_pow(p, k));
    }
    Int head = 0;
    for (std::size_t i = 0; i + 1 < n; ++i)
        head = checked_add(head, powers[i]);
    if (head >= powers.back())
        throw std::invalid_argument("label_even_cycle: last prime power must exceed the sum of the others");

    std::vector<Int> prefix{0};
    for (Int q : powers)
        prefix.push_back(checked_add(prefix.back(), q));
    std::vector<Int> labels(prefix.begin(), prefix.end());
    for (std::size_t i = 1; i + 1 < n + 1; ++i)
        labels.push_back(prefix[n] - prefix[i]);

    Labeling l(std::move(labels));
    require_verified(cycle_graph(static_cast<int>(2 * n)), l, {Mode::strict, k}, "label_even_cycle");
    return l;
}

Labeling label_even_cycle(int n, int k, Int min_prime)
{
    if (n < 2)
        throw std::invalid_argument("label_even_cycle: n must be >= 2");
    std::vector<Int> primes;
    Int sum = 0;
    Int p = next_prime(std::max<Int>(min_prime, 2));
    for (int i = 0; i + 1 < n; ++i) {
        primes.push_back(p);
        sum = checked_add(sum, checked_pow(p, k));
        p = next_prime(p + 1);
    }
    primes.push_back(prime_with_power_above(sum, k, p));
    return label_even_cycle_with_primes(primes, k);
}

Labeling extend_odd_cycle(const Labeling &base, int j, int k, Int min_prime)
{
    const int len = base.size();
    if (len < 3 || len % 2 == 0)
        throw std::invalid_argument("extend_odd_cycle: base must label an odd cycle");
    if (j < 1)
        throw std::invalid_argument("extend_odd_cycle: j must be >= 1");
    if (!verify_strict(cycle_graph(len), base, k).ok)
        throw std::invalid_argument("extend_odd_cycle: base is not a strict labeling");

    std::vector<Int> x(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i)
        x[i] = base[i] - base[0];

    // Each q_i^k exceeds every absolute label fixed before it.
    Int fixed = Labeling(x).absolute_sum();
    Int largest_base_prime = 0;
    for (int i = 0; i < len; ++i)
        largest_base_prime = std::max(largest_base_prime, *strict_kth_power_base(abs_diff(x[i], x[(i + 1) % len]), k));
    std::vector<Int> q;  // q_i^k
    Int floor_prime = std::max(min_prime, largest_base_prime + 1);
    for (int i = 0; i < j; ++i) {
        Int p = prime_with_power_above(fixed, k, floor_prime);
        Int power = checked_pow(p, k);
        q.push_back(power);
        fixed = checked_add(fixed, power);
        floor_prime = p + 1;
    }
    Int total = 0;
    for (Int v : q)
        total = checked_add(total, v);

    std::vector<Int> z{0, x[1]};
    Int run = x[1];
    for (int i = 0; i < j; ++i)
        z.push_back(run = checked_add(run, q[i]));
    for (int i = 2; i < len; ++i)
        z.push_back(checked_add(x[i], total));
    Int tail = total;
    for (int i = 0; i < j; ++i) {
        z.push_back(tail);
        tail -= q[i];
    }

    Labeling out(std::move(z));
    if (!out.is_injective())
        throw ConstructionFailure("extend_odd_cycle: labels not distinct");
    require_verified(cycle_graph(len + 2 * j), out, {Mode::strict, k}, "extend_odd_cycle");
    return out;
}

namespace {

Int modular_inverse(Int a, Int m)
{
    // Extended Euclid; a and m coprime.
    Int r0 = m, r1 = ((a % m) + m) % m, t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
        std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
    }
    if (r0 != 1)
        throw std::invalid_argument("modular_inverse: not coprime");
    return ((t0 % m) + m) % m;
}

Int mul_mod(Int a, Int b, Int m) { return static_cast<Int>(static_cast<__int128>(a) * b % m); }

struct Powers {
    Int asc, desc, seam;
};

Powers role_powers(int k, BezoutRole role)
{
    Int three = checked_pow(3, k), five = checked_pow(5, k);
    if (role == BezoutRole::five_ascends)
        return {five, three, checked_pow(2, k)};
    return {three, five, checked_pow(2, k)};
}

}  // namespace

Labeling bezout_cycle_labels(int k, BezoutRole role, Int down, Int up)
{
    if (k < 1 || down >= 0 || up <= 0)
        throw std::invalid_argument("bezout_cycle_labels: need k >= 1 and down < 0 < up");
    auto [asc, desc, seam] = role_powers(k, role);
    if (checked_add(checked_mul(asc, up), checked_mul(desc, down)) != seam)
        throw std::invalid_argument("bezout_cycle_labels: coefficients do not solve the seam equation");
    const Int count = up - down + 1;
    if (count > 10'000'000)
        throw std::invalid_argument("bezout_cycle_labels: cycle too long");
    std::vector<Int> labels;
    labels.reserve(static_cast<std::size_t>(count));
    for (Int i = 0; i <= up; ++i)
        labels.push_back(checked_mul(i, asc));
    for (Int i = -down; i >= 1; --i)
        labels.push_back(checked_mul(i, desc));
    return Labeling(std::move(labels));
}

std::optional<Int> find_label_collision(const Labeling &l)
{
    std::vector<Int> sorted = l.values();
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1])
            return sorted[i];
    return std::nullopt;
}

std::pair<Int, Int> literal_bezout_coefficients(int k)
{
    if (k < 1)
        throw std::invalid_argument("literal_bezout_coefficients: k must be >= 1");
    Int three = checked_pow(3, k), five = checked_pow(5, k);
    Int r = modular_inverse(three, five) - five;
    Int s = (1 - checked_mul(three, r)) / five;
    return {r, s};
}

ExistenceCycle existence_cycle(int k)
{
    if (k < 1 || k > 12)
        throw std::invalid_argument("existence_cycle: k must be in [1, 12]");
    std::optional<ExistenceCycle> best;
    for (auto role : {BezoutRole::five_ascends, BezoutRole::three_ascends}) {
        auto [asc, desc, seam] = role_powers(k, role);
        // Smallest positive `up` and the `down` of smallest magnitude; each
        // keeps one side of the cycle short enough that no label repeats.
        std::vector<std::pair<Int, Int>> reps;
        Int up = mul_mod(seam, modular_inverse(asc, desc), desc);
        if (up == 0)
            up = desc;
        reps.emplace_back((seam - checked_mul(asc, up)) / desc, up);
        Int down = mul_mod(seam, modular_inverse(desc, asc), asc) - asc;
        reps.emplace_back(down, (seam - checked_mul(desc, down)) / asc);
        for (auto [d, u] : reps) {
            if (d >= 0 || u <= 0)
                continue;
            const Int n = u - d + 1;
            if (best && n >= best->length)
                continue;
            auto labels = bezout_cycle_labels(k, role, d, u);
            if (find_label_collision(labels))
                continue;
            best = ExistenceCycle{static_cast<int>(n), std::move(labels), role, d, u};
        }
    }
    if (!best)
        throw ConstructionFailure("existence_cycle: no collision-free representative");
    require_verified(cycle_graph(best->length), best->labeling, {Mode::strict, k}, "existence_cycle");
    return *best;
}

CycleLabelerTable CycleLabelerTable::standard(int max_k)
{
    CycleLabelerTable t;
    if (max_k >= 1)
        t.set(1, {3, Labeling{0, 2, 5}, "C_3 prime distance labeling"});
    if (max_k >= 2)
        t.set(2, {7, Labeling{0, 4, 3485, 3124, 2283, 74, 25}, "C_7 strict square labeling"});
    for (int k = 3; k <= max_k; ++k) {
        auto e = existence_cycle(k);
        t.set(k, {e.length, e.labeling, "Bezout cycle"});
    }
    return t;
}

void CycleLabelerTable::set(int k, Entry entry)
{
    if (k < 1)
        throw std::invalid_argument("CycleLabelerTable: k must be >= 1");
    if (entry.base_length < 3 || entry.base_length % 2 == 0 || entry.base.size() != entry.base_length)
        throw std::invalid_argument("CycleLabelerTable: base must label an odd cycle");
    if (!verify_strict(cycle_graph(entry.base_length), entry.base, k).ok)
        throw std::invalid_argument("CycleLabelerTable: base labeling is not strict");
    entries_[k] = std::move(entry);
}

const CycleLabelerTable::Entry &CycleLabelerTable::entry(int k) const
{
    auto it = entries_.find(k);
    if (it == entries_.end())
        throw std::out_of_range("CycleLabelerTable: no entry for k = " + std::to_string(k));
    return it->second;
}

std::string_view to_string(CycleMethod m)
{
    switch (m) {
    case CycleMethod::even_formula:
        return "even_formula";
    case CycleMethod::odd_base:
        return "odd_base";
    case CycleMethod::odd_extension:
        return "odd_extension";
    case CycleMethod::search:
        return "search";
    }
    return "?";
}

std::optional<CycleLabeling> label_cycle_strict(int n, int k, const CycleLabelerTable &table,
                                                const SearchConfig &search_cfg, Int min_prime)
{
    if (n < 3)
        throw std::invalid_argument("label_cycle_strict: n must be >= 3");
    if (k < 1)
        throw std::invalid_argument("label_cycle_strict: k must be >= 1");
    if (n % 2 == 0)
        return CycleLabeling{label_even_cycle(n / 2, k, min_prime), CycleMethod::even_formula};
    if (table.has(k)) {
        const auto &e = table.entry(k);
        if (n == e.base_length)
            return CycleLabeling{e.base, CycleMethod::odd_base};
        if (n > e.base_length)
            return CycleLabeling{extend_odd_cycle(e.base, (n - e.base_length) / 2, k, min_prime),
                                 CycleMethod::odd_extension};
    }
    SearchConfig cfg = search_cfg;
    cfg.predicate = {Mode::strict, k};
    auto outcome = search_labeling(cycle_graph(n), cfg);
    if (outcome.status != SearchStatus::found)
        return std::nullopt;
    require_verified(cycle_graph(n), *outcome.certificate, cfg.predicate, "label_cycle_strict");
    return CycleLabeling{*outcome.certificate, CycleMethod::search};
}

}  // namespace primedist
