#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace pvu {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Stable sub-stream derivation: streams depend only on (master, tag, index),
// never on draw history, so worker count and resume points cannot change them.
inline uint64_t derive_seed(uint64_t master, uint64_t tag, uint64_t index = 0) {
    return splitmix64(splitmix64(master ^ splitmix64(tag)) ^ splitmix64(index));
}

namespace seed_tag {
constexpr uint64_t surface_sampling = 0x5355524641434531ULL;
constexpr uint64_t queries = 0x5155455259504f4fULL;
constexpr uint64_t param_init = 0x494e49545041524dULL;
constexpr uint64_t train_step = 0x545241494e535450ULL;
constexpr uint64_t jitter = 0x4a49545445525344ULL;
constexpr uint64_t resample = 0x524553414d504c45ULL;
constexpr uint64_t displace = 0x444953504c414345ULL;
}  // namespace seed_tag

// mt19937_64 with explicit uniform/normal conversions. The distributions are
// hand-rolled so streams are identical across standard library versions.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t raw() { return gen_(); }

    // Uniform in [0, 1).
    double uniform() { return double(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform in (0, 1].
    double uniform_pos() { return double((gen_() >> 11) + 1) * 0x1.0p-53; }

    // Box-Muller, cosine branch only; deterministic single-value stream.
    double normal() {
        const double u1 = uniform_pos();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    // Uniform integer in [0, n).
    uint64_t index(uint64_t n) {
        // Rejection-free modulo bias is negligible for n << 2^64; use
        // multiply-shift which is exact enough and branch-free.
        return uint64_t((__uint128_t(gen_()) * n) >> 64);
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace pvu
