#pragma once

#include <cstdint>
#include <random>

namespace maxcov {

// splitmix64 step (Vigna's reference constants).
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seed for one (algorithm, uav_count, run) cell of a sweep. Pure function of
// its inputs, so any cell can be reproduced without replaying the sweep.
inline std::uint64_t mix_seed(std::uint64_t base_seed, std::uint64_t algorithm_id,
                              std::uint64_t uav_count, std::uint64_t run_index) {
    std::uint64_t h = splitmix64(base_seed);
    h = splitmix64(h ^ algorithm_id);
    h = splitmix64(h ^ uav_count);
    h = splitmix64(h ^ run_index);
    return h;
}

// Run-level random stream. mt19937_64 is pinned by the standard, and
// uniform01 maps raw bits directly (std::uniform_real_distribution is
// implementation-defined), so identical seeds give identical draws on every
// platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform integer in [lo, hi].
    std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) {
        return lo + engine_() % (hi - lo + 1);
    }

  private:
    std::mt19937_64 engine_;
};

} // namespace maxcov
