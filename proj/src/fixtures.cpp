#include "gapwords/fixtures.hpp"

#include <algorithm>
#include <random>
#include <vector>

#include "gapwords/errors.hpp"

namespace gapwords {

GapSpec random_gap_increasing(std::uint64_t seed, std::size_t table_len) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 1);
    std::vector<Int> gaps;
    gaps.reserve(table_len);
    Int g = 1 + rng() % 4;
    gaps.push_back(g);
    for (std::size_t i = 1; i < table_len; ++i) {
        g += 1 + rng() % 6;
        gaps.push_back(g);
    }
    return GapSpec::explicit_table(std::move(gaps), TailRule::sum_prev_two(),
                                   Regularity::strictly_increasing);
}

GapSpec random_blockwise(std::uint64_t seed, std::size_t blocks) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 2);
    // distinct values, shuffled so the table is not monotone
    std::vector<Int> values;
    Int v = 1 + rng() % 3;
    for (std::size_t r = 0; r < blocks; ++r) {
        values.push_back(v);
        v += 1 + rng() % 4;
    }
    for (std::size_t i = values.size(); i > 1; --i)
        std::swap(values[i - 1], values[rng() % i]);

    std::vector<Int> gaps;
    Int max_value = 0;
    for (const Int& value : values) {
        const std::uint64_t mult = 1 + rng() % 4;
        for (std::uint64_t t = 0; t < mult; ++t) gaps.push_back(value);
        max_value = std::max(max_value, value);
    }
    // increasing tail strictly above every listed value keeps the whole
    // sequence blockwise injective
    const Int start = max_value + 1;
    const Int offset = start - Int(gaps.size() + 1);
    return GapSpec::explicit_table(std::move(gaps), TailRule::linear(1, offset),
                                   Regularity::blockwise_injective);
}

GapSpec staircase_word(std::uint64_t blocks) {
    if (blocks < 1) throw spec_error("need at least one block");
    std::vector<Int> gaps;
    for (std::uint64_t r = 1; r <= blocks; ++r)
        for (std::uint64_t t = 0; t < r; ++t) gaps.push_back(Int(r) + 1);
    const Int start = Int(blocks) + 2;
    const Int offset = start - Int(gaps.size() + 1);
    return GapSpec::explicit_table(std::move(gaps), TailRule::linear(1, offset),
                                   Regularity::non_decreasing);
}

}  // namespace gapwords
