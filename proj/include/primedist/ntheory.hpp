#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace primedist {

using Int = std::int64_t;

/// p^j with p prime and j >= 1.
struct PrimePower {
    Int base = 0;
    int exponent = 0;

    /// Throws std::overflow_error if base^exponent leaves the 64-bit range.
    Int value() const;

    friend bool operator==(const PrimePower &, const PrimePower &) = default;
};

struct TwinPair {
    Int lower = 0;
    Int upper = 0;

    friend bool operator==(const TwinPair &, const TwinPair &) = default;
};

/// first, first + step, ..., first + (length - 1) * step, all prime.
struct PrimeAP {
    Int first = 0;
    Int step = 0;
    int length = 0;

    Int term(int i) const { return first + static_cast<Int>(i) * step; }
    Int last() const { return term(length - 1); }

    friend bool operator==(const PrimeAP &, const PrimeAP &) = default;
};

// Overflow-checked arithmetic. All throw std::overflow_error.
Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);
Int checked_pow(Int base, int exponent);
/// |a - b|, checked.
Int abs_diff(Int a, Int b);

/// Deterministic for every 64-bit input (Miller-Rabin with a fixed witness set).
bool is_prime(Int n);

/// Smallest prime >= n.
Int next_prime(Int n);

/// Prime factors of n >= 2 with multiplicity, ascending.
std::vector<Int> prime_factors(Int n);

/// Omega(n): prime factors counted with multiplicity. Rejects n <= 1.
int count_prime_factors(Int n);

/// ceil(log2(n)) for n >= 1.
int ceil_log2(Int n);

/// Floor of the k-th root of n >= 0.
Int integer_root(Int n, int k);

/// (p, j) with p^j == n and 1 <= j <= max_exponent, if it exists.
std::optional<PrimePower> classify_prime_power(Int n, int max_exponent);

/// p if n == p^k exactly for a prime p.
std::optional<Int> strict_kth_power_base(Int n, int k);

/// Sieve of Eratosthenes on [0, limit].
std::vector<bool> prime_sieve(Int limit);

/// First `count` twin prime pairs whose upper member is <= budget.
/// Throws BudgetExhausted if fewer than `count` pairs fit under the budget.
std::vector<TwinPair> twin_primes(int count, Int budget);

/// Checks every term is prime, first > 2 and step > 0.
bool is_prime_ap(const PrimeAP &ap);

/// Prime AP of the given length with first term > 2, minimising the last
/// term (ties: smallest first term). Only terms <= budget are considered.
std::optional<PrimeAP> find_prime_ap(int length, Int budget);

}  // namespace primedist
