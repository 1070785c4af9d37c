#pragma once

#include <cstdint>
#include <random>

namespace ranet::bilinear {

// Seeded deterministic generator. mt19937_64's output sequence is pinned by
// the standard, so fixed-seed vectors reproduce across platforms; the
// distribution logic below is hand-rolled for the same reason.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform over [0, bound) by rejection sampling.
    std::uint64_t uniform_below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % bound;
    }

    // Uniform in [0, 1) with 53 bits of precision.
    double uniform_double() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace ranet::bilinear
