#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <span>
#include <type_traits>
#include <vector>

#include "ramsey/errors.hpp"

namespace ramsey {

inline constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

// Saturating arithmetic: results that overflow 64 bits clamp to kSaturated.
inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) noexcept
{
    if (a == 0 || b == 0) return 0;
    if (a > kSaturated / b) return kSaturated;
    return a * b;
}

inline std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) noexcept
{
    return (a > kSaturated - b) ? kSaturated : a + b;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept
{
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // result * num / i is integral; i / gcd(result, i) therefore divides num
        const std::uint64_t num = n - k + i;
        const std::uint64_t g = std::gcd(result, i);
        result = sat_mul(result / g, num / (i / g));
        if (result == kSaturated) return kSaturated;
    }
    return result;
}

inline std::uint64_t factorial(std::uint64_t n) noexcept
{
    std::uint64_t f = 1;
    for (std::uint64_t i = 2; i <= n; ++i) f = sat_mul(f, i);
    return f;
}

/// Catalan number via the closed form C(2k, k) / (k + 1).
inline std::uint64_t catalan(std::uint64_t k) noexcept
{
    const std::uint64_t c = binomial(2 * k, k);
    return c == kSaturated ? kSaturated : c / (k + 1);
}

/// Advances a strictly increasing combination of {0, ..., n-1} to the next one in
/// lexicographic order. Returns false after the last combination.
inline bool next_combination(std::span<std::size_t> comb, std::size_t n) noexcept
{
    const std::size_t k = comb.size();
    if (k == 0) return false;
    std::size_t i = k;
    while (i > 0) {
        --i;
        if (comb[i] < n - k + i) {
            ++comb[i];
            for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

inline std::vector<std::size_t> first_combination(std::size_t k)
{
    std::vector<std::size_t> comb(k);
    for (std::size_t i = 0; i < k; ++i) comb[i] = i;
    return comb;
}

/// Calls fn(span of k indices) for every k-subset of {0, ..., n-1} in lexicographic order.
/// fn may return bool; returning false stops the enumeration.
template <class Fn>
void for_each_combination(std::size_t n, std::size_t k, Fn&& fn)
{
    if (k > n) return;
    auto comb = first_combination(k);
    do {
        if constexpr (std::is_same_v<decltype(fn(std::span<const std::size_t>(comb))), bool>) {
            if (!fn(std::span<const std::size_t>(comb))) return;
        } else {
            fn(std::span<const std::size_t>(comb));
        }
    } while (next_combination(comb, n));
}

/// Colex rank of a sorted k-subset of {0, 1, ...}: sum of C(c_i, i + 1).
inline std::uint64_t colex_rank(std::span<const std::uint64_t> sorted) noexcept
{
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) rank += binomial(sorted[i], i + 1);
    return rank;
}

/// Seeded generator with platform-independent bounded draws.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound), bound > 0.
    std::uint64_t below(std::uint64_t bound)
    {
        if (bound == 0) throw PreconditionError("Rng::below: empty range");
        const std::uint64_t limit = kSaturated - (kSaturated % bound);
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform k-subset of {0, ..., n-1}, sorted (Floyd's algorithm).
    std::vector<std::uint64_t> subset(std::uint64_t n, std::size_t k)
    {
        if (k > n) throw PreconditionError("Rng::subset: k exceeds n");
        std::set<std::uint64_t> chosen;
        for (std::uint64_t j = n - k; j < n; ++j) {
            const std::uint64_t r = below(j + 1);
            if (!chosen.insert(r).second) chosen.insert(j);
        }
        return {chosen.begin(), chosen.end()};
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

} // namespace ramsey
