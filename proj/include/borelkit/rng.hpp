#pragma once

#include <cstdint>

#include "borelkit/errors.hpp"

namespace borelkit {

/// Deterministic splitmix64 stream. Hand-rolled so that identical seeds give
/// identical draws on every platform and toolchain; std:: distributions make
/// no such promise.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw from [lo, hi], inclusive.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        if (lo > hi) {
            throw Error("empty uniform range");
        }
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) {  // full 64-bit range
            return static_cast<std::int64_t>(next());
        }
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t draw;
        do {
            draw = next();
        } while (draw >= limit);
        return lo + static_cast<std::int64_t>(draw % span);
    }

private:
    std::uint64_t state_;
};

}  // namespace borelkit
