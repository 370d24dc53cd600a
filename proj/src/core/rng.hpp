#ifndef BAZLAB_CORE_RNG_HPP
#define BAZLAB_CORE_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace bazlab {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seeded generator with byte-stable output across platforms: draws come from
/// mt19937_64 (fully specified by the standard) and are mapped to doubles
/// without std::*_distribution, whose output is implementation-defined.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(splitmix64(seed)) {}

    // Independent per-trial stream; trials may run in any order.
    static Rng for_trial(uint64_t master_seed, uint64_t trial) {
        return Rng(splitmix64(master_seed) ^ splitmix64(trial * 0x9e3779b97f4a7c15ULL + 1));
    }

    uint64_t next_u64() { return gen_(); }

    double uniform() { // [0, 1)
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    uint64_t uniform_int(uint64_t n) { // [0, n), n >= 1
        return next_u64() % n;
    }

    double exponential() { return -std::log1p(-uniform()); }

private:
    std::mt19937_64 gen_;
};

} // namespace bazlab

#endif
