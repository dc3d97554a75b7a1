#include <primedist/ntheory.hpp>
#include <primedist/errors.hpp>

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace primedist {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m)
{
    u64 result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1)
            result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// This witness set is exact for all n < 2^64.
constexpr std::array<u64, 12> witnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool miller_rabin(u64 n)
{
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : witnesses) {
        if (a % n == 0)
            continue;
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

// Brent's variant of Pollard rho; n is odd and composite.
u64 pollard_rho(u64 n)
{
    for (u64 c = 1;; ++c) {
        u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
        const u64 m = 64;
        u64 r = 1;
        auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
        do {
            x = y;
            for (u64 i = 0; i < r; ++i)
                y = f(y);
            u64 k = 0;
            do {
                ys = y;
                for (u64 i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r <<= 1;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

void factor_into(u64 n, std::vector<Int> &out)
{
    if (n == 1)
        return;
    if (is_prime(static_cast<Int>(n))) {
        out.push_back(static_cast<Int>(n));
        return;
    }
    u64 d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

Int PrimePower::value() const { return checked_pow(base, exponent); }

Int checked_add(Int a, Int b)
{
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("64-bit overflow in addition");
    return r;
}

Int checked_mul(Int a, Int b)
{
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("64-bit overflow in multiplication");
    return r;
}

Int checked_pow(Int base, int exponent)
{
    if (exponent < 0)
        throw std::invalid_argument("negative exponent");
    Int r = 1;
    for (int i = 0; i < exponent; ++i)
        r = checked_mul(r, base);
    return r;
}

Int abs_diff(Int a, Int b)
{
    Int r;
    if (__builtin_sub_overflow(a, b, &r) || r == std::numeric_limits<Int>::min())
        throw std::overflow_error("64-bit overflow in label difference");
    return r < 0 ? -r : r;
}

bool is_prime(Int n)
{
    if (n < 2)
        return false;
    for (Int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p)
            return true;
        if (n % p == 0)
            return false;
    }
    if (n < 41 * 41)
        return true;
    return miller_rabin(static_cast<u64>(n));
}

Int next_prime(Int n)
{
    if (n <= 2)
        return 2;
    Int c = n;
    while (!is_prime(c))
        c = checked_add(c, 1);
    return c;
}

std::vector<Int> prime_factors(Int n)
{
    if (n <= 1)
        throw std::invalid_argument("prime_factors: n must be >= 2, got " + std::to_string(n));
    std::vector<Int> out;
    for (Int p = 2; p < 64 && p * p <= n; ++p)
        while (n % p == 0) {
            out.push_back(p);
            n /= p;
        }
    factor_into(static_cast<u64>(n), out);
    std::sort(out.begin(), out.end());
    return out;
}

int count_prime_factors(Int n)
{
    if (n <= 1)
        throw std::invalid_argument("count_prime_factors: n must be >= 2, got " + std::to_string(n));
    return static_cast<int>(prime_factors(n).size());
}

int ceil_log2(Int n)
{
    if (n < 1)
        throw std::invalid_argument("ceil_log2: n must be >= 1");
    int r = 0;
    while ((Int{1} << r) < n)
        ++r;
    return r;
}

Int integer_root(Int n, int k)
{
    if (n < 0 || k < 1)
        throw std::invalid_argument("integer_root: need n >= 0 and k >= 1");
    if (k == 1 || n < 2)
        return n;
    // Binary search on r with r^k <= n; r^k may overflow so compare by division.
    Int lo = 1, hi = std::min<Int>(n, Int{1} << (64 / k + 1));
    auto fits = [&](Int r) {
        Int acc = 1;
        for (int i = 0; i < k; ++i) {
            if (acc > n / r)
                return false;
            acc *= r;
        }
        return acc <= n;
    };
    while (lo < hi) {
        Int mid = lo + (hi - lo + 1) / 2;
        if (fits(mid))
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

std::optional<PrimePower> classify_prime_power(Int n, int max_exponent)
{
    if (n <= 1)
        throw std::invalid_argument("classify_prime_power: n must be >= 2, got " + std::to_string(n));
    if (max_exponent < 1)
        throw std::invalid_argument("classify_prime_power: max_exponent must be >= 1");
    auto factors = prime_factors(n);
    if (factors.front() != factors.back())
        return std::nullopt;
    int exponent = static_cast<int>(factors.size());
    if (exponent > max_exponent)
        return std::nullopt;
    return PrimePower{factors.front(), exponent};
}

std::optional<Int> strict_kth_power_base(Int n, int k)
{
    if (n <= 1)
        throw std::invalid_argument("strict_kth_power_base: n must be >= 2, got " + std::to_string(n));
    if (k < 1)
        throw std::invalid_argument("strict_kth_power_base: k must be >= 1");
    Int r = integer_root(n, k);
    if (checked_pow(r, k) != n || !is_prime(r))
        return std::nullopt;
    return r;
}

std::vector<bool> prime_sieve(Int limit)
{
    if (limit < 0)
        throw std::invalid_argument("prime_sieve: negative limit");
    std::vector<bool> sieve(static_cast<std::size_t>(limit) + 1, true);
    sieve[0] = false;
    if (limit >= 1)
        sieve[1] = false;
    for (Int i = 2; i * i <= limit; ++i)
        if (sieve[i])
            for (Int j = i * i; j <= limit; j += i)
                sieve[j] = false;
    return sieve;
}

std::vector<TwinPair> twin_primes(int count, Int budget)
{
    if (count < 1)
        throw std::invalid_argument("twin_primes: count must be >= 1");
    if (budget < 0)
        throw std::invalid_argument("twin_primes: budget must be >= 0");
    auto sieve = prime_sieve(budget);
    std::vector<TwinPair> pairs;
    for (Int p = 3; p + 2 <= budget && static_cast<int>(pairs.size()) < count; ++p)
        if (sieve[p] && sieve[p + 2])
            pairs.push_back({p, p + 2});
    if (static_cast<int>(pairs.size()) < count)
        throw BudgetExhausted("twin_primes: only " + std::to_string(pairs.size()) + " of " +
                              std::to_string(count) + " twin pairs have upper member <= " +
                              std::to_string(budget));
    return pairs;
}

bool is_prime_ap(const PrimeAP &ap)
{
    if (ap.length < 1 || ap.step <= 0 || ap.first <= 2)
        return false;
    for (int i = 0; i < ap.length; ++i) {
        Int t;
        if (__builtin_mul_overflow(static_cast<Int>(i), ap.step, &t) ||
            __builtin_add_overflow(t, ap.first, &t))
            return false;
        if (!is_prime(t))
            return false;
    }
    return true;
}

std::optional<PrimeAP> find_prime_ap(int length, Int budget)
{
    if (length < 1)
        throw std::invalid_argument("find_prime_ap: length must be >= 1");
    if (budget < 3)
        return std::nullopt;
    if (length == 1)
        return PrimeAP{3, 1, 1};

    auto sieve = prime_sieve(budget);
    std::vector<Int> small_primes;
    for (Int q = 2; q <= length; ++q)
        if (sieve.size() > static_cast<std::size_t>(q) ? sieve[q] : is_prime(q))
            small_primes.push_back(q);

    // A prime q <= length that is below the first term cannot itself be a
    // term, so it must divide the step (otherwise some term is a multiple of q).
    auto required_modulus = [&](Int first) {
        Int m = 1;
        for (Int q : small_primes)
            if (q < first)
                m = checked_mul(m, q);
        return m;
    };
    const Int full_modulus = required_modulus(std::numeric_limits<Int>::max());
    const Int span = length - 1;

    auto check = [&](Int first, Int step) {
        for (int i = 0; i < length; ++i) {
            Int t = first + i * step;
            if (t > budget || !sieve[t])
                return false;
        }
        return true;
    };

    for (Int last = 3; last <= budget; ++last) {
        if (!sieve[last])
            continue;
        std::optional<PrimeAP> best;
        auto consider = [&](Int first, Int step) {
            if (step <= 0 || first <= 2 || !sieve[first] || step % required_modulus(first) != 0)
                return;
            if (!check(first, step))
                return;
            if (!best || first < best->first)
                best = PrimeAP{first, step, length};
        };
        // First terms that exceed every q <= length: step is a multiple of the full modulus.
        for (Int step = full_modulus; step <= (last - 3) / span; step += full_modulus)
            consider(last - span * step, step);
        // Small first terms may themselves be one of the exempt primes.
        for (Int first : small_primes)
            if (first > 2 && first < last && (last - first) % span == 0)
                consider(first, (last - first) / span);
        if (best)
            return best;
    }
    return std::nullopt;
}

}  // namespace primedist
