#pragma once

#include <cstdint>

#include "shapiro/arc.hpp"

namespace shapiro {

// 64-bit linear congruential generator, constants from Knuth's MMIX:
//   s <- s * 6364136223846793005 + 1442695040888963407
// Every port of the campaign format must use exactly this generator so that
// seeded arc lists (and therefore golden files) agree across languages.
struct Lcg64 {
    std::uint64_t state;

    explicit Lcg64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state;
    }

    // uniform in [0, 1) from the top 53 bits
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }
};

// Arc with length uniform in [min_len, 2*pi] and position uniform within
// the remaining room.  Draw order (length first) is part of the format.
inline Arc random_arc(Lcg64& rng, double min_len) {
    const double len = min_len + rng.next_double() * (two_pi - min_len);
    const double alpha = rng.next_double() * (two_pi - len);
    return Arc(alpha, alpha + len);
}

}  // namespace shapiro
