#ifndef TURAN_COMBINATORICS_HPP
#define TURAN_COMBINATORICS_HPP

#include <cstdint>
#include <functional>
#include <vector>

namespace turan {

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Visits all sorted k-subsets of {0,...,n-1} in lexicographic order.
template <typename Fn>
void for_each_subset(int n, int k, Fn fn) {
    if (k < 0 || k > n) return;
    std::vector<int> s(k);
    for (int i = 0; i < k; ++i) s[i] = i;
    while (true) {
        fn(const_cast<const std::vector<int>&>(s));
        int i = k - 1;
        while (i >= 0 && s[i] == n - k + i) --i;
        if (i < 0) break;
        ++s[i];
        for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
    }
}

inline std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    for_each_subset(n, k, [&](const std::vector<int>& s) { out.push_back(s); });
    return out;
}

// splitmix64; used to derive independent per-trial seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(splitmix64(seed) ^ (0x51aebc21853f2a6dULL * (index + 1)));
}

// Counter-based splitmix64 stream. Unlike std:: distributions, the outputs
// are identical on every platform, which the reproducibility contract needs.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(splitmix64(seed ^ 0xd6e8feb86659fd93ULL)) {}

    std::uint64_t next() {
        std::uint64_t out = splitmix64(state);
        state += 0x9e3779b97f4a7c15ULL;
        return out;
    }

    // Uniform in [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

    double real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool coin() { return next() & 1; }
};

}  // namespace turan

#endif
