#pragma once

#include <cstdint>

#include "gapwords/gapspec.hpp"

namespace gapwords {

// Deterministic seeded fixtures. The generator is pinned (mt19937_64 with
// plain modulo reduction) so the same seed produces the same rule on every
// platform.

// Strictly increasing gap table of the given length, continued by the
// sum-of-previous-two rule.
GapSpec random_gap_increasing(std::uint64_t seed, std::size_t table_len = 160);

// Blockwise injective but in general non-monotone: distinct block values in
// shuffled order with small multiplicities, continued past the listed part
// by an increasing tail above every listed value.
GapSpec random_blockwise(std::uint64_t seed, std::size_t blocks = 8);

// The word 0 (1 0^2)^2 (1 0^3)^3 ...: gap value r + 1 repeated r times.
// Tabulated through the given number of blocks, then continued increasingly;
// counts for n below the last tabulated value are unaffected by the tail.
GapSpec staircase_word(std::uint64_t blocks);

}  // namespace gapwords
