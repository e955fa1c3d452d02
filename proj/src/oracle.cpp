#include "gapwords/oracle.hpp"

#include <algorithm>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "gapwords/closedform.hpp"
#include "gapwords/errors.hpp"
#include "gapwords/suffix_automaton.hpp"

namespace gapwords {

namespace {

std::uint64_t hash_count_distinct(std::string_view bits, std::uint64_t n) {
    std::unordered_set<std::string_view> seen;
    seen.reserve(bits.size());
    for (std::uint64_t i = 0; i + n <= bits.size(); ++i)
        seen.insert(bits.substr(i, n));
    return seen.size();
}

std::uint64_t hash_count_special(std::string_view bits, std::uint64_t n) {
    std::unordered_map<std::string_view, unsigned> ext;
    ext.reserve(bits.size());
    for (std::uint64_t i = 0; i + n + 1 <= bits.size(); ++i)
        ext[bits.substr(i, n)] |= bits[i + n] == '1' ? 2u : 1u;
    std::uint64_t count = 0;
    for (const auto& [_, mask] : ext) count += mask == 3u;
    return count;
}

}  // namespace

Int distinct_factors(const BinaryPrefix& prefix, std::uint64_t n, CountBackend backend) {
    if (n < 1 || n > prefix.length())
        throw spec_error("factor length outside [1, prefix length]");
    if (backend == CountBackend::window_hash)
        return hash_count_distinct(prefix.bits, n);
    return SuffixAutomaton(prefix.bits, n).distinct_of_length(n);
}

Int right_special_count(const BinaryPrefix& prefix, std::uint64_t n, CountBackend backend) {
    if (n < 1 || n + 1 > prefix.length())
        throw spec_error("factor length outside [1, prefix length - 1]");
    if (backend == CountBackend::window_hash)
        return hash_count_special(prefix.bits, n);
    return SuffixAutomaton(prefix.bits, n).right_special_of_length(n);
}

std::vector<std::string> right_special_factors(const BinaryPrefix& prefix, std::uint64_t n) {
    if (n < 1 || n + 1 > prefix.length())
        throw spec_error("factor length outside [1, prefix length - 1]");
    std::string_view bits = prefix.bits;
    std::unordered_map<std::string_view, unsigned> ext;
    for (std::uint64_t i = 0; i + n + 1 <= bits.size(); ++i)
        ext[bits.substr(i, n)] |= bits[i + n] == '1' ? 2u : 1u;
    std::vector<std::string> out;
    for (const auto& [factor, mask] : ext)
        if (mask == 3u) out.emplace_back(factor);
    std::sort(out.begin(), out.end());
    return out;
}

PrefixRequirement sufficient_prefix_length(const GapSpec& spec, std::uint64_t n) {
    if (n < 1) throw spec_error("n must be >= 1");

    if (spec.gap_increasing_eligible()) {
        if (Int(n) <= spec.gap(1))
            return {spec.one_distribution(2) + n, true};
        // least L with g(L) >= n + 1
        std::uint64_t lo = 1, hi = 2;
        while (spec.gap(hi) < Int(n) + 1) {
            lo = hi;
            hi *= 2;
        }
        while (hi - lo > 1) {
            const std::uint64_t mid = lo + (hi - lo) / 2;
            (spec.gap(mid) < Int(n) + 1 ? lo : hi) = mid;
        }
        const std::uint64_t L = spec.gap(1) >= Int(n) + 1 ? 1 : hi;
        const std::uint64_t M = last_short_gap(spec, n);
        return {std::max(spec.one_distribution(L + 1),
                         spec.one_distribution(M + 1) + n),
                true};
    }

    if (spec.bounded()) {
        // pre-period (the listed gaps) + one period + the window
        const Int preperiod = spec.one_distribution(spec.listed_length());
        const Int period = spec.gap(spec.listed_length() + 1);
        return {preperiod + period + n, true};
    }

    // Unbounded non-strict classes: all factors settle once every gap
    // exceeds n (two consecutive big gaps host every factor with at most one
    // one; factors with two or more ones are anchored to earlier blocks).
    if (spec.declared_class() != Regularity::none) {
        const auto settle = spec.all_gaps_exceed_after(Int(n));
        if (settle) return {spec.one_distribution(*settle + 1), true};
    }
    return {0, false};  // doubling heuristic
}

namespace {

struct Counts {
    std::uint64_t distinct_n = 0;
    std::uint64_t distinct_n1 = 0;
    std::uint64_t special_n = 0;
};

Counts count_at(const BinaryPrefix& prefix, std::uint64_t n, CountBackend backend) {
    Counts c;
    if (backend == CountBackend::automaton) {
        SuffixAutomaton sam(prefix.bits, n + 1);
        c.distinct_n = sam.distinct_of_length(n);
        c.distinct_n1 = sam.distinct_of_length(n + 1);
        c.special_n = sam.right_special_of_length(n);
    } else {
        c.distinct_n = hash_count_distinct(prefix.bits, n);
        c.distinct_n1 = hash_count_distinct(prefix.bits, n + 1);
        c.special_n = hash_count_special(prefix.bits, n);
    }
    return c;
}

}  // namespace

FactorCensus oracle_complexity(const GapSpec& spec, std::uint64_t n, CountBackend backend) {
    const PrefixRequirement need = sufficient_prefix_length(spec, n + 1);
    FactorCensus census;
    census.n = n;

    if (need.certified) {
        const Int want = std::max(need.length, Int(n) + 2);
        if (want > Int(max_prefix_bits()))
            throw resource_guard_error("certified census at n = " + std::to_string(n) +
                                       " needs a prefix of " + want.str() +
                                       " bits, above the cap of " +
                                       std::to_string(max_prefix_bits()));
        const BinaryPrefix prefix = word_prefix(spec, to_u64(want));
        const Counts c = count_at(prefix, n, backend);
        census.distinct_count = c.distinct_n;
        census.special_count = c.special_n;
        census.prefix_length_used = prefix.length();
        census.certified = true;
        return census;
    }

    // no certified bound: grow geometrically until the counts are unchanged
    // across two consecutive doublings
    std::uint64_t len = std::max<std::uint64_t>(4096, 8 * (n + 2));
    Counts last{};
    unsigned stable = 0;
    for (;;) {
        if (len > max_prefix_bits())
            throw resource_guard_error("heuristic census exceeded the prefix cap "
                                       "before stabilizing");
        const BinaryPrefix prefix = word_prefix(spec, len);
        const Counts c = count_at(prefix, n, backend);
        if (c.distinct_n == last.distinct_n && c.special_n == last.special_n &&
            c.distinct_n1 == last.distinct_n1) {
            if (++stable == 2) {
                census.distinct_count = c.distinct_n;
                census.special_count = c.special_n;
                census.prefix_length_used = prefix.length();
                census.certified = false;
                return census;
            }
        } else {
            stable = 0;
        }
        last = c;
        len *= 2;
    }
}

namespace {

BinaryPrefix table_prefix(const GapSpec& spec, std::uint64_t n_max) {
    const PrefixRequirement need = sufficient_prefix_length(spec, n_max + 1);
    if (!need.certified)
        throw class_error("oracle_table needs a certified prefix bound for this class");
    const Int want = std::max(need.length, Int(n_max) + 2);
    if (want > Int(max_prefix_bits()))
        throw resource_guard_error("oracle table needs " + want.str() + " bits, above the cap");
    return word_prefix(spec, to_u64(want));
}

}  // namespace

ComplexityProfile oracle_table(const GapSpec& spec, std::uint64_t n_max, CountBackend backend) {
    const BinaryPrefix prefix = table_prefix(spec, n_max);
    ComplexityProfile p;
    p.f.reserve(n_max);
    if (backend == CountBackend::automaton) {
        SuffixAutomaton sam(prefix.bits, n_max);
        for (std::uint64_t n = 1; n <= n_max; ++n) p.f.push_back(sam.distinct_of_length(n));
    } else {
        for (std::uint64_t n = 1; n <= n_max; ++n)
            p.f.push_back(hash_count_distinct(prefix.bits, n));
    }
    return p;
}

std::vector<Int> oracle_special_table(const GapSpec& spec, std::uint64_t n_max,
                                      CountBackend backend) {
    const BinaryPrefix prefix = table_prefix(spec, n_max);
    std::vector<Int> s;
    s.reserve(n_max);
    if (backend == CountBackend::automaton) {
        SuffixAutomaton sam(prefix.bits, n_max + 1);
        for (std::uint64_t n = 1; n <= n_max; ++n) s.push_back(sam.right_special_of_length(n));
    } else {
        for (std::uint64_t n = 1; n <= n_max; ++n)
            s.push_back(hash_count_special(prefix.bits, n));
    }
    return s;
}

bool has_run_between_ones(const GapSpec& spec, std::uint64_t n) {
    if (!spec.gap_increasing_eligible())
        throw class_error("run/double-gap predicates need strictly increasing gaps");
    // a run of n zeros between ones means g(i) == n + 1 for some i >= 2
    const Int target = Int(n) + 1;
    for (std::uint64_t i = 2;; ++i) {
        const Int g = spec.gap(i);
        if (g == target) return true;
        if (g > target) return false;
    }
}

bool has_double_gap(const GapSpec& spec, std::uint64_t len) {
    if (!spec.gap_increasing_eligible())
        throw class_error("run/double-gap predicates need strictly increasing gaps");
    // adjacent runs n_(i-1), n_i sum to len iff g(i) + g(i+1) == len + 2
    const Int target = Int(len) + 2;
    for (std::uint64_t i = 1;; ++i) {
        const Int sum = spec.gap(i) + spec.gap(i + 1);
        if (sum == target) return true;
        if (sum > target) return false;
    }
}

SecondDifference second_difference_case(const GapSpec& spec, std::uint64_t n) {
    if (n < 1) throw spec_error("n must be >= 1");
    SecondDifference d;
    d.run_present = has_run_between_ones(spec, n);
    d.double_gap_present = n >= 1 && has_double_gap(spec, n - 1);
    if (d.run_present && !d.double_gap_present) {
        d.value = 1;
        d.label = 'a';
    } else if (!d.run_present && d.double_gap_present) {
        d.value = -1;
        d.label = 'b';
    } else if (d.run_present && d.double_gap_present) {
        d.value = 0;
        d.label = 'c';
    } else {
        d.value = 0;
        d.label = 'd';
    }
    return d;
}

}  // namespace gapwords
