#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

namespace gapwords {

// Suffix automaton over a binary string. Each state covers the substrings
// with one end-position set; the lengths it contributes form the interval
// (link_len, len]. Distinct substrings of a given length are counted by
// interval stabbing, right special factors by restricting to states that can
// be extended by both letters.
class SuffixAutomaton {
public:
    // n_cap bounds the factor lengths the count tables are built for.
    SuffixAutomaton(std::string_view bits, std::uint64_t n_cap);

    std::uint64_t distinct_of_length(std::uint64_t n) const;
    std::uint64_t right_special_of_length(std::uint64_t n) const;

private:
    struct Node {
        std::int64_t len = 0;
        std::int32_t link = -1;
        std::array<std::int32_t, 2> next{-1, -1};
    };
    std::vector<Node> nodes_;
    std::vector<std::uint64_t> distinct_;
    std::vector<std::uint64_t> special_;
    std::uint64_t cap_;

    std::int32_t extend(std::int32_t last, int c);
};

}  // namespace gapwords
