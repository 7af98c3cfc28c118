// Self-contained RNG (splitmix64 seeding + xoshiro256++), so that trajectories
// are byte-identical for a given seed independent of the standard library.
#pragma once

#include <cstdint>
#include <cmath>

#include "lmphc/common.hpp"

namespace lmphc {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Child-seed derivation rule for parallel jobs: child(seed, index) feeds the
// pair through splitmix64 twice. Documented in the README; the CLI relies on it.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t job_index) {
    std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL * (job_index + 1));
    splitmix64(s);
    return splitmix64(s);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) { reseed(seed); }

    void reseed(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : s_) w = splitmix64(sm);
        calls_ = 0;
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        ++calls_;
        return result;
    }

    // Uniform in [0,1) with 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n) without modulo bias (n > 0).
    std::uint64_t uniform_index(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

    // Uniform point in the d-ball of given radius centered at origin (rejection
    // from the bounding cube; acceptance >= pi/6 for d <= 3).
    Point uniform_in_ball(int d, double radius) {
        for (;;) {
            Point p{0.0, 0.0, 0.0};
            double r2 = 0.0;
            for (int k = 0; k < d; ++k) {
                p[k] = uniform(-1.0, 1.0);
                r2 += p[k] * p[k];
            }
            if (r2 <= 1.0) {
                for (int k = 0; k < d; ++k) p[k] *= radius;
                return p;
            }
        }
    }

    std::uint64_t call_count() const { return calls_; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t s_[4]{};
    std::uint64_t calls_ = 0;
};

} // namespace lmphc
