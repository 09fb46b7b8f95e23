#pragma once

#include <cstdint>

#include "ltree/bigint.hpp"

namespace ltree {

/// Deterministic random stream for one sample index. Streams are a pure
/// function of (seed, index), so sample ranges can be sharded across tasks
/// without changing results.
class SampleStream {
public:
    SampleStream(std::uint64_t seed, std::uint64_t index)
        : state_(seed * 0x9E3779B97F4A7C15ull + index * 0xD1B54A32D192ED03ull + 1) {}

    std::uint64_t next_u64() {
        // splitmix64
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n), n > 0.
    std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

    bool next_bool() { return (next_u64() & 1) != 0; }

    /// Uniform-ish integer in [lo, hi] inclusive. Exact values, modulo bias
    /// is irrelevant here (sampling only needs coverage plus determinism).
    BigInt next_int(const BigInt& lo, const BigInt& hi);

    /// Geometric count of failures with success probability 1/(mean+1).
    unsigned next_geometric(unsigned mean) {
        unsigned k = 0;
        while (next_below(mean + 1) != 0) ++k;
        return k;
    }

private:
    std::uint64_t state_;
};

inline BigInt SampleStream::next_int(const BigInt& lo, const BigInt& hi) {
    BigInt width = hi - lo + 1;
    if (width <= 0) return lo;
    if (width <= BigInt(~std::uint64_t(0))) {
        std::uint64_t w = width.convert_to<std::uint64_t>();
        return lo + BigInt(w == 0 ? next_u64() : next_below(w));
    }
    // Wide range: draw enough 64-bit words, then reduce.
    BigInt draw = 0;
    BigInt probe = width;
    while (probe > 0) {
        draw = (draw << 64) | BigInt(next_u64());
        probe >>= 64;
    }
    return lo + draw % width;
}

}  // namespace ltree
