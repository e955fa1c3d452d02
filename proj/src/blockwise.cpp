#include "gapwords/blockwise.hpp"

#include <algorithm>
#include <map>

#include "gapwords/errors.hpp"

namespace gapwords {

namespace {

void push_block(BlockSummary& s, const Int& value, std::uint64_t count,
                std::map<Int, std::size_t>& seen) {
    if (!s.values.empty() && s.values.back() == value) {
        s.multiplicity.back() += count;
        return;
    }
    auto [it, fresh] = seen.emplace(value, s.values.size());
    if (!fresh)
        throw class_error("gap value " + value.str() + " recurs non-contiguously; "
                          "the sequence is not blockwise injective");
    s.values.push_back(value);
    s.multiplicity.push_back(count);
    s.max_value = std::max(s.max_value, value);
}

BlockSummary bounded_summary(const GapSpec& spec) {
    BlockSummary s;
    s.bounded = true;
    std::map<Int, std::size_t> seen;
    // listed gaps, then the value that repeats forever (merging if the list
    // already ends in it)
    const std::uint64_t L = spec.listed_length();
    for (std::uint64_t i = 1; i <= L + 1; ++i) push_block(s, spec.gap(i), 1, seen);
    s.multiplicity.pop_back();  // the final block has no finite multiplicity
    return s;
}

}  // namespace

BlockSummary block_summary(const GapSpec& spec, std::uint64_t horizon) {
    if (spec.bounded()) return bounded_summary(spec);
    if (horizon < 1) throw spec_error("summary horizon must be >= 1");
    BlockSummary s;
    s.horizon = horizon;
    std::map<Int, std::size_t> seen;
    for (std::uint64_t i = 1; i <= horizon; ++i) push_block(s, spec.gap(i), 1, seen);
    s.tail_floor = spec.min_gap_beyond(horizon);
    return s;
}

namespace {

struct BlockView {
    const BlockSummary& s;

    std::uint64_t blocks() const { return s.values.size(); }
    const Int& value(std::uint64_t r) const { return s.values[r - 1]; }  // 1-based
    Int before(std::uint64_t r) const { return r >= 2 ? s.values[r - 2] : Int(0); }  // j(r-1), j(0)=0
    bool last_repeats_forever(std::uint64_t r) const {
        return s.bounded && r == blocks();
    }
    std::uint64_t mult(std::uint64_t r) const { return s.multiplicity[r - 1]; }
    bool mult_at_least_two(std::uint64_t r) const {
        return last_repeats_forever(r) || mult(r) >= 2;
    }
    // Reach of the zeros a one-one factor ending in value(r) may carry:
    // max(j(r-1), j(r) when the block repeats).
    Int lead_reach(std::uint64_t r) const {
        Int reach = before(r);
        if (mult_at_least_two(r)) reach = std::max(reach, value(r));
        return reach;
    }
};

}  // namespace

Int special_factors_blockwise(const BlockSummary& summary, std::uint64_t n) {
    if (n < 1) throw spec_error("n must be >= 1");
    const BlockView v{summary};
    const Int N(n);

    if (!summary.bounded && summary.tail_floor <= N)
        throw horizon_error("summary horizon too short: gaps <= n may exist beyond it");

    Int count = 0;

    // all-zeros factor
    if (!summary.bounded)
        count += 1;
    else if (N + 2 <= summary.max_value)
        count += 1;

    const std::uint64_t B = v.blocks();
    for (std::uint64_t r = 1; r <= B; ++r) {
        const Int& jr = v.value(r);
        if (jr > N) continue;  // every system below needs j(r) <= n

        // one-one factors 0^(n - j(r)) 1 0^(j(r) - 1)
        if (N < jr + v.lead_reach(r)) {
            if (!summary.bounded) {
                count += 1;
            } else {
                // needs a block with a strictly larger value to append the 0
                const Int lead = N - jr;
                for (std::uint64_t w = 1; w <= B; ++w) {
                    if (v.value(w) > jr && lead < v.lead_reach(w)) {
                        count += 1;
                        break;
                    }
                }
            }
        }

        // factors repeating block r at least twice, followable by 0 only
        // when the next value is larger; and factors crossing into a smaller
        // next block. The two cases exclude each other by the sign of
        // j(r+1) - j(r).
        if (summary.bounded && r == B) continue;  // infinite final block: no successor
        const std::uint64_t p = v.mult(r);
        const Int low = std::min(v.before(r), jr);
        const bool next_bigger =
            r < B ? v.value(r + 1) > jr : true;  // unsummarized gaps all exceed n >= j(r)
        if (next_bigger) {
            if (2 * jr <= N && N < Int(p) * jr + low) count += 1;
        } else {
            const Int& jn = v.value(r + 1);
            if (jr + jn <= N && N < Int(p - 1) * jr + jn + low) count += 1;
        }
    }
    return count;
}

Int special_factors_nondecreasing(const BlockSummary& summary, std::uint64_t n) {
    if (n < 1) throw spec_error("n must be >= 1");
    for (std::size_t i = 1; i < summary.values.size(); ++i)
        if (summary.values[i] <= summary.values[i - 1])
            throw class_error("summary is not non-decreasing");
    const Int N(n);
    if (!summary.bounded && summary.tail_floor <= N)
        throw horizon_error("summary horizon too short: gaps <= n may exist beyond it");

    const BlockView v{summary};
    Int count = 0;
    if (!summary.bounded)
        count += 1;
    else if (N + 2 <= summary.max_value)
        count += 1;

    const std::uint64_t finite = summary.bounded ? v.blocks() - 1 : v.blocks();
    for (std::uint64_t r = 1; r <= finite; ++r) {
        const Int& jr = v.value(r);
        if (jr <= N && v.before(r) + Int(v.mult(r)) * jr >= N + 1) count += 1;
    }
    return count;
}

std::pair<Int, Int> delta_bounds(Regularity klass, std::uint64_t n) {
    const Int N(n);
    switch (klass) {
        case Regularity::strictly_increasing: return {1, N / 2 + 1};
        case Regularity::injective: return {1, N + 1};
        case Regularity::non_decreasing: return {0, N + 1};
        case Regularity::blockwise_injective: return {0, N * (N + 1) / 2 + 1};
        case Regularity::none: break;
    }
    throw class_error("no difference bounds for unclassified gap sequences");
}

ComplexityProfile complexity_table_blockwise(const GapSpec& spec, std::uint64_t n_max,
                                             bool nondecreasing_route) {
    if (n_max < 2) throw spec_error("n_max must be >= 2");
    const Regularity r = spec.declared_class();
    if (nondecreasing_route) {
        if (r != Regularity::non_decreasing && r != Regularity::strictly_increasing)
            throw class_error("non-decreasing route needs a non-decreasing declaration, got " +
                              to_string(r));
    } else if (r == Regularity::none) {
        throw class_error("blockwise route needs a blockwise-injective declaration");
    }

    BlockSummary summary;
    if (spec.bounded()) {
        summary = block_summary(spec, 1);
    } else {
        const auto settle = spec.all_gaps_exceed_after(Int(n_max));
        if (!settle) throw horizon_error("gap rule never outgrows n_max");
        summary = block_summary(spec, std::max<std::uint64_t>(*settle, 2));
    }

    ComplexityProfile p;
    p.f.reserve(n_max);
    // one letter (all ones) when every gap is 1, two letters otherwise
    const bool has_zero = spec.bounded() ? summary.max_value >= 2 : true;
    p.f.push_back(has_zero ? 2 : 1);
    for (std::uint64_t n = 1; n < n_max; ++n) {
        const Int s = nondecreasing_route ? special_factors_nondecreasing(summary, n)
                                          : special_factors_blockwise(summary, n);
        p.f.push_back(p.f.back() + s);
    }
    return p;
}

}  // namespace gapwords
