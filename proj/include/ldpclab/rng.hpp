#pragma once

#include <cstdint>
#include <vector>

namespace ldpclab {

// Counter-based stream RNG (splitmix64 core). Streams are keyed by
// (master seed, stream index), so parallel trials draw from independent
// streams whose output does not depend on scheduling order.
class RngStream {
public:
    using result_type = std::uint64_t;

    explicit RngStream(std::uint64_t seed) : state_(seed) {}

    static RngStream derive(std::uint64_t master_seed, std::uint64_t stream_index) {
        // Two finalizer passes decorrelate (seed, index) pairs.
        std::uint64_t s = mix(master_seed ^ 0x5851f42d4c957f2dULL);
        s = mix(s + 0x9e3779b97f4a7c15ULL * (stream_index + 1));
        return RngStream(s);
    }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    result_type operator()() { return next_u64(); }
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type(0); }

    // Unbiased integer in [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        const std::uint64_t limit = max() - max() % bound;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % bound;
    }

    bool next_bool() { return (next_u64() >> 63) != 0; }

    // Uniform in [0, 1) with 53 bits of precision.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Fisher-Yates; hand-rolled so output is identical across standard libraries.
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

} // namespace ldpclab
