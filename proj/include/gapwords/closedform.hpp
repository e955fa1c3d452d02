#pragma once

#include <cstdint>

#include "gapwords/gapspec.hpp"
#include "gapwords/profile.hpp"

namespace gapwords {

// Closed-form subword complexity of words whose gaps strictly increase
// (allowing the benign leading tie, see GapSpec::gap_increasing_eligible):
//
//   f(n) = n + 1                                            for n <= g(1)
//   f(n) = G(L) + G(L+1) - G(M+1) + n (M - L) + n + 1       otherwise,
//
// where L = wide_gap_cutoff(n) and M = last_short_gap(n). Both cutoffs are
// thresholds of monotone predicates; a galloping bracket plus binary search
// keeps every probed index near the answer, so fast-growing rules are never
// evaluated in the middle of [0, n].

// Least L >= 0 with g(L+1) + g(L+2) >= n + 1. Beyond the L-th one, a window
// of length n can no longer contain two ones.
std::uint64_t wide_gap_cutoff(const GapSpec& spec, std::uint64_t n);

// Greatest M >= 0 with g(M+1) <= n - 1: the last gap short enough to sit
// between two ones of a length-n window. Undefined (error) for n <= g(1).
std::uint64_t last_short_gap(const GapSpec& spec, std::uint64_t n);

Int complexity_closed(const GapSpec& spec, std::uint64_t n);

// Number of right special factors of length n of a word with injective gaps:
// one (for the all-zeros factor) plus the number of indices l >= 1 with
// g(l) <= n and g(l-1) + g(l) >= n + 1, taking g(0) = 0.
Int special_factors_injective(const GapSpec& spec, std::uint64_t n);

// The same count along the strictly-increasing route,
// last_short_gap(n+1) - wide_gap_cutoff(n) + 1 for n >= g(1) and 1 below it.
// Must agree with special_factors_injective on eligible specs.
Int special_count_increasing(const GapSpec& spec, std::uint64_t n);

enum class TableMethod { closed, recurrence };

// f(1..n_max) built by streaming the per-n special factor counts on top of
// f(1) = 2. `closed` requires gap-increasing eligibility, `recurrence`
// requires an injective (or stronger) declaration.
ComplexityProfile complexity_table(const GapSpec& spec, std::uint64_t n_max, TableMethod method);

}  // namespace gapwords
