#pragma once

#include <cstdint>

namespace ofcluster {

// splitmix64 generator. Self-contained so runs are reproducible independent
// of the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi], inclusive. Unbiased via rejection.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        if (lo >= hi) return lo;
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = (~0ULL) - (~0ULL) % span;
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return lo + static_cast<std::int64_t>(v % span);
    }

    double uniform_real(double lo, double hi) {
        const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
        return lo + u * (hi - lo);
    }

private:
    std::uint64_t state_;
};

}  // namespace ofcluster
