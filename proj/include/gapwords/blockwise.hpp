#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gapwords/gapspec.hpp"
#include "gapwords/profile.hpp"

namespace gapwords {

// Run-length view of a blockwise injective gap sequence: equal gap values
// occur in one contiguous block, so the sequence is described by the distinct
// values in order of first appearance plus their multiplicities. By
// convention the value in front of the first block is 0.
struct BlockSummary {
    std::vector<Int> values;                  // block values, first block at index 0
    std::vector<std::uint64_t> multiplicity;  // bounded: last block repeats forever and has no entry
    bool bounded = false;
    Int max_value = 0;

    // Unbounded only: every gap past the summarized horizon is >= tail_floor.
    Int tail_floor = 0;
    std::uint64_t horizon = 0;

    std::uint64_t blocks() const { return values.size(); }
};

// Summarizes g(1..horizon); errors if blockwise injectivity is violated
// within the horizon. For rules that are bounded by shape the summary is
// complete and the horizon argument is ignored.
BlockSummary block_summary(const GapSpec& spec, std::uint64_t horizon);

// Number of right special factors of length n for a blockwise injective gap
// sequence. Counts, per block r (value j(r), multiplicity p(r), j(0) = 0):
//   one-one factors   j(r) <= n < j(r) + max(j(r-1), [p(r) >= 2] j(r)),
//                     in the bounded case additionally requiring a witness
//                     block r' with j(r') > j(r) whose neighborhood admits
//                     the same leading-zero count;
//   repeated-block    j(r+1) > j(r) and 2 j(r) <= n < p(r) j(r) + min(j(r-1), j(r));
//   block-crossing    j(r+1) < j(r) and j(r) + j(r+1) <= n
//                       < (p(r) - 1) j(r) + j(r+1) + min(j(r-1), j(r));
// plus 1 for the all-zeros factor when it is right special (always in the
// unbounded case, and exactly for n <= max_value - 2 in the bounded case).
// Unbounded summaries must satisfy tail_floor > n or a horizon_error is
// raised; a silent undercount is never produced.
Int special_factors_blockwise(const BlockSummary& summary, std::uint64_t n);

// Non-decreasing specialization: one plus the number of blocks r with
// j(r) <= n and j(r-1) + p(r) j(r) >= n + 1 (bounded: restricted to the
// finite blocks, the all-zeros term as above).
Int special_factors_nondecreasing(const BlockSummary& summary, std::uint64_t n);

// Per-class bounds on f(n+1) - f(n): strictly increasing (1, floor(n/2) + 1),
// injective (1, n + 1), non-decreasing (0, n + 1), blockwise injective
// (0, n (n + 1) / 2 + 1).
std::pair<Int, Int> delta_bounds(Regularity klass, std::uint64_t n);

// f(1..n_max) streamed from the blockwise (or non-decreasing) counts, seeded
// with the number of distinct letters.
ComplexityProfile complexity_table_blockwise(const GapSpec& spec, std::uint64_t n_max,
                                             bool nondecreasing_route);

}  // namespace gapwords
