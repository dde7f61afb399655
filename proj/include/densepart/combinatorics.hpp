#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace densepart {

/// x(x-1)...(x-k+1)/(y(y-1)...(y-k+1)); exactly 0 once a factor of the numerator
/// is nonpositive. Equals C(y-k, x-k)/C(y, x) for integers x <= y.
inline double falling_ratio(long long x, long long y, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) {
        if (x - i <= 0) return 0.0;
        r *= static_cast<double>(x - i) / static_cast<double>(y - i);
    }
    return r;
}

inline double log_binomial(long long n, long long k) {
    if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
    return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
           std::lgamma(static_cast<double>(n - k) + 1.0);
}

inline double binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double r = 1.0;
    for (long long i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    return r < 0x1.0p53 ? std::round(r) : r;
}

__extension__ using uint128_t = unsigned __int128;

/// Exact binomial, saturating at UINT64_MAX.
inline std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    uint128_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(r);
}

inline long long pairs_of(long long m) { return m * (m - 1) / 2; }

}  // namespace densepart
