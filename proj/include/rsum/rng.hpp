#pragma once

#include <cstdint>
#include <random>

namespace rsum {

// splitmix64; used to spread user seeds into engine seeds and to derive
// independent per-index streams.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic PRNG wrapper. mt19937_64 output is fixed by the standard and
// bounded draws use plain modulo, so sequences are identical across
// platforms and standard libraries (uniform_int_distribution is not).
class Prng {
public:
    explicit Prng(std::uint64_t seed) : eng_(splitmix64(seed)) {}

    std::uint64_t next() { return eng_(); }

    // Uniform-ish draw in [lo, hi]. Modulo bias is irrelevant here; only
    // determinism and rough uniformity matter.
    std::uint64_t bounded(std::uint64_t lo, std::uint64_t hi) {
        return lo + next() % (hi - lo + 1);
    }

    long long int_in(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::mt19937_64 eng_;
};

// Stable sub-seed for item `index` of a seeded run.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(splitmix64(seed) ^ (index + 0x632be59bd9b4e019ULL));
}

}  // namespace rsum
