#pragma once

#include <cstdint>

#include "pariton/game.hpp"

namespace pariton {

/**
 * splitmix64: tiny, well-studied PRNG with bit-stable output on every
 * platform (unlike the std distributions, whose results vary across
 * standard library implementations).  Bounded values use the multiply-
 * shift reduction; its bias is far below anything observable at the
 * sizes generated here, and it keeps streams reproducible everywhere.
 */
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /** Uniform-ish value in [0, bound). */
    uint64_t below(uint64_t bound) {
        return uint64_t((static_cast<unsigned __int128>(next()) * bound) >> 64);
    }
    /** Uniform-ish value in [lo, hi] inclusive. */
    int64_t range(int64_t lo, int64_t hi) {
        return lo + int64_t(below(uint64_t(hi - lo + 1)));
    }

private:
    uint64_t state_;
};

/**
 * Random game: n positions, priorities uniform in [0, max_prio], owners
 * uniform, out-degrees uniform in [min_deg, max_deg] (capped at n), with
 * distinct successors sampled uniformly; self-loops allowed.
 */
ParityGame random_game(int n, int max_prio, int min_deg, int max_deg, uint64_t seed);

/**
 * Ladder family: 2k positions on a single forced cycle; position i has
 * priority i and owner i mod 2, moving to (i+1) mod 2k.  Winner everywhere
 * is the parity of 2k-1 (odd), so player 1 wins the whole game.
 */
ParityGame ladder_game(int k);

/**
 * Clique family: k positions, priority i and owner i mod 2 on position i,
 * fully connected including self-loops.
 */
ParityGame clique_game(int k);

}  // namespace pariton
