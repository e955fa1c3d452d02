#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gapwords/gapspec.hpp"
#include "gapwords/profile.hpp"

namespace gapwords {

// Ground truth by brute force: count distinct length-n factors and right
// special factors of a materialized prefix, with prefix lengths justified by
// the declared gap regularity. Two interchangeable backends must agree; the
// automaton is the fast one.

enum class CountBackend { window_hash, automaton };

struct FactorCensus {
    std::uint64_t n = 0;
    Int distinct_count = 0;
    Int special_count = 0;
    std::uint64_t prefix_length_used = 0;
    bool certified = false;
};

Int distinct_factors(const BinaryPrefix& prefix, std::uint64_t n,
                     CountBackend backend = CountBackend::window_hash);
Int right_special_count(const BinaryPrefix& prefix, std::uint64_t n,
                        CountBackend backend = CountBackend::window_hash);
// The factors themselves, sorted; n + 1 <= prefix length required.
std::vector<std::string> right_special_factors(const BinaryPrefix& prefix, std::uint64_t n);

struct PrefixRequirement {
    Int length = 0;      // 0 when only the doubling heuristic applies
    bool certified = false;
};

// Prefix length within which every length-n factor of the infinite word
// occurs. Strictly increasing gaps: max(G(L+1), G(M+1) + n) with L the least
// index with g(L) >= n + 1 (G(2) + n below the first gap). Bounded rules:
// pre-period plus period plus n. Other classes: certified via the index past
// which all gaps exceed n, when the rule provides one; otherwise heuristic.
PrefixRequirement sufficient_prefix_length(const GapSpec& spec, std::uint64_t n);

FactorCensus oracle_complexity(const GapSpec& spec, std::uint64_t n,
                               CountBackend backend = CountBackend::window_hash);

// One prefix, counts for every n <= n_max (cheaper than n_max separate
// censuses and guaranteed internally consistent).
ComplexityProfile oracle_table(const GapSpec& spec, std::uint64_t n_max,
                               CountBackend backend = CountBackend::automaton);
std::vector<Int> oracle_special_table(const GapSpec& spec, std::uint64_t n_max,
                                      CountBackend backend = CountBackend::automaton);

// Occurrence predicates on gap-increasing words (benign leading tie allowed);
// both terminate because the probed quantities strictly increase.
bool has_run_between_ones(const GapSpec& spec, std::uint64_t n);  // 1 0^n 1 occurs
bool has_double_gap(const GapSpec& spec, std::uint64_t len);      // adjacent zero-runs (leading
                                                                  // run included) summing to len

// Second difference of the complexity table, decided from the two
// predicates: a fresh run alone raises the count of one-one factors, a
// double gap alone lowers it, together or absent they cancel.
struct SecondDifference {
    bool run_present = false;
    bool double_gap_present = false;
    int value = 0;   // +1, -1 or 0
    char label = 0;  // 'a' run only, 'b' double gap only, 'c' both, 'd' neither
};
SecondDifference second_difference_case(const GapSpec& spec, std::uint64_t n);

}  // namespace gapwords
