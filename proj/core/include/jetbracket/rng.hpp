#pragma once

#include <cstdint>

#include "jetbracket/rational.hpp"

namespace jetbracket {

/// splitmix64 generator. <random> engines would be deterministic too, but the
/// standard distributions are not pinned across library implementations, and
/// certificate seeds have to mean the same sample sequence everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t next_below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

    /// Uniform over {-3,...,3}\{0} divided by 1 or 2 — the sampling pool for
    /// jet-point coordinates.
    Rational small_rational() {
        long num = static_cast<long>(next_below(6)) + 1;  // 1..6
        if (num > 3) num = 3 - num;                       // -1..-3
        long den = next_below(2) == 0 ? 1 : 2;
        return rational(num, den);
    }

private:
    std::uint64_t state_;
};

}  // namespace jetbracket
