#pragma once

#include <cstdint>
#include <stdexcept>

#include <boost/dynamic_bitset.hpp>

namespace turan {

using Bits = boost::dynamic_bitset<std::uint64_t>;

// Binomial coefficients in 64-bit arithmetic with overflow checking.
// Only small k is ever needed; counts at n = 10^4 still fit comfortably.
inline long long binom2(long long n) {
    if (n < 2) return 0;
    __int128 r = static_cast<__int128>(n) * (n - 1) / 2;
    if (r > INT64_MAX) throw std::overflow_error("binom2 overflow");
    return static_cast<long long>(r);
}

inline long long binom3(long long n) {
    if (n < 3) return 0;
    __int128 r = static_cast<__int128>(n) * (n - 1) * (n - 2) / 6;
    if (r > INT64_MAX) throw std::overflow_error("binom3 overflow");
    return static_cast<long long>(r);
}

inline long long binom(long long n, int k) {
    if (k < 0 || n < 0) return 0;
    switch (k) {
        case 0: return 1;
        case 1: return n;
        case 2: return binom2(n);
        case 3: return binom3(n);
        default: {
            __int128 r = 1;
            for (int i = 1; i <= k; ++i) {
                r = r * (n - k + i) / i;
                if (r > INT64_MAX) throw std::overflow_error("binom overflow");
            }
            return static_cast<long long>(r);
        }
    }
}

// Colex ranks: pairs and triples are indexed by their colexicographic
// position among all pairs/triples, so bitset layouts are independent of n.
inline long long pair_rank(int u, int v) {
    return binom2(v) + u;  // requires u < v
}

inline long long triple_rank(int u, int v, int w) {
    return binom3(w) + binom2(v) + u;  // requires u < v < w
}

}  // namespace turan
