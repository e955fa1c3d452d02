#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gapwords/gapspec.hpp"
#include "gapwords/profile.hpp"

namespace gapwords {

// Decides whether a complexity table is the subword complexity of a word
// with strictly increasing gaps, and constructs every witness word. A
// witness is written 0^p 1 0^(j_1) 1 0^(j_2) 1 ... with p < j_1 and the runs
// j strictly increasing; its complexity is pinned down by two position sets:
//   ups   = lengths whose run is fresh (no equal adjacent-run sum),
//   downs = adjacent-run sums + 1 that match no run,
// which are exactly the positions where the second difference of f is +1
// and -1.

struct NecessaryCheck {
    bool ok = false;
    std::string reason;
    std::uint64_t position = 0;
    std::vector<std::uint64_t> ups;    // second difference +1
    std::vector<std::uint64_t> downs;  // second difference -1
};

// f(1) = 2, f(2) = 3 and |second difference| <= 1 everywhere evaluable.
NecessaryCheck necessary_check(const ComplexityProfile& profile);

// {lead + x_1 + 1, x_1 + x_2 + 1, x_2 + x_3 + 1, ...} for strictly
// increasing x and 0 <= lead < x_1. Term i + 1 is one past the length of
// the double gap formed by runs x_i and x_(i+1).
std::vector<Int> adjacent_sums(const Int& lead, const std::vector<Int>& xs);

// Sorted union of two strictly increasing disjoint sequences; an element in
// common is an error naming it.
std::vector<Int> merge_disjoint(const std::vector<Int>& a, const std::vector<Int>& b);

enum class WitnessVerdict {
    accepted_up_to_horizon,
    rejected_conflict,      // an adjacent-sum value landed on an up position
    rejected_missing_down,  // a down position was skipped by the sum stream
    rejected_finite,        // the run sequence stalled before the horizon
};

struct WitnessCandidate {
    std::uint64_t leading_zeros = 0;          // p
    std::vector<std::uint64_t> runs;          // j, up to the horizon
    std::vector<std::uint64_t> overlap;       // runs contributed by the sum stream
    WitnessVerdict verdict = WitnessVerdict::rejected_finite;
    std::string detail;
    std::uint64_t conflict_index = 0;  // 1-based index into the sum stream
    std::uint64_t conflict_value = 0;
    std::uint64_t horizon = 0;
};

// Streaming merge construction: the first run is the first up position;
// each later run is the smaller of the next unused up position and the next
// pending adjacent-sum value that is not a down position. Rejects on a sum
// value hitting an up position, on a skipped down position, or on a stall
// (finite word). Values are only classified while they stay within the
// evaluable part of the profile, so acceptance is explicitly horizon-bounded.
WitnessCandidate construct_witness(const ComplexityProfile& profile,
                                   std::uint64_t leading_zeros, std::uint64_t horizon);

struct RealizabilityReport {
    bool accepted = false;
    NecessaryCheck necessary;
    std::vector<WitnessCandidate> candidates;  // one per admissible leading-zero count
    std::uint64_t horizon = 0;
};

RealizabilityReport realizable(const ComplexityProfile& profile, std::uint64_t horizon);

// The gap rule of a candidate: gaps p + 1, j_1 + 1, j_2 + 1, ... continued
// by the sum of the previous two (which keeps the gaps strictly increasing
// and out of the way of any factor the verification window can see).
GapSpec witness_spec(const WitnessCandidate& candidate);

// Materializes the candidate and compares its brute-force complexity table
// with the profile for n <= n_max.
bool verify_witness(const WitnessCandidate& candidate, const ComplexityProfile& profile,
                    std::uint64_t n_max);

// Built-in symbolic profile families, tabulated exactly.
// ex42: f(n) = (floor(n/q) + 1) (n - (q/2) floor(n/q)) + 1, q >= 2: realizable
//       with exactly q - 1 witnesses.
// ex43: f(n) = n + (n-1) m - q m (m+1) / 2 + 1 with m = floor((n-1)/q), q >= 3:
//       every leading-zero count fails the sum-stream test.
ComplexityProfile family_ex42(std::uint64_t q, std::uint64_t n_max);
ComplexityProfile family_ex43(std::uint64_t q, std::uint64_t n_max);

}  // namespace gapwords
