#pragma once

#include <cstdint>
#include <random>

namespace nilcomm {

/// Seeded generator for all randomized verification passes. Bounded draws are
/// implemented here (rejection sampling over mt19937_64) instead of
/// std::uniform_int_distribution, so a seed reproduces the same stream on any
/// platform and the reports stay byte-stable.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform in [0, n); n must be positive.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t r = eng_();
        while (r >= limit) r = eng_();
        return r % n;
    }

    /// Uniform in [lo, hi] inclusive.
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (eng_() & 1u) != 0; }

  private:
    std::mt19937_64 eng_;
};

}  // namespace nilcomm
