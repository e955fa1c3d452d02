#include "gapwords/suffix_automaton.hpp"

#include <algorithm>
#include <stdexcept>

namespace gapwords {

std::int32_t SuffixAutomaton::extend(std::int32_t last, int c) {
    const std::int32_t cur = static_cast<std::int32_t>(nodes_.size());
    nodes_.push_back({});
    nodes_[cur].len = nodes_[last].len + 1;
    std::int32_t p = last;
    while (p != -1 && nodes_[p].next[c] == -1) {
        nodes_[p].next[c] = cur;
        p = nodes_[p].link;
    }
    if (p == -1) {
        nodes_[cur].link = 0;
    } else {
        const std::int32_t q = nodes_[p].next[c];
        if (nodes_[p].len + 1 == nodes_[q].len) {
            nodes_[cur].link = q;
        } else {
            const std::int32_t clone = static_cast<std::int32_t>(nodes_.size());
            nodes_.push_back(nodes_[q]);
            nodes_[clone].len = nodes_[p].len + 1;
            while (p != -1 && nodes_[p].next[c] == q) {
                nodes_[p].next[c] = clone;
                p = nodes_[p].link;
            }
            nodes_[q].link = clone;
            nodes_[cur].link = clone;
        }
    }
    return cur;
}

SuffixAutomaton::SuffixAutomaton(std::string_view bits, std::uint64_t n_cap) : cap_(n_cap) {
    nodes_.reserve(2 * bits.size() + 4);
    nodes_.push_back({});  // root
    std::int32_t last = 0;
    for (char ch : bits) {
        if (ch != '0' && ch != '1') throw std::invalid_argument("bits must be '0'/'1'");
        last = extend(last, ch - '0');
    }
    // interval stabbing via difference arrays over lengths 1..cap
    distinct_.assign(cap_ + 2, 0);
    special_.assign(cap_ + 2, 0);
    for (std::size_t i = 1; i < nodes_.size(); ++i) {
        const Node& nd = nodes_[i];
        const std::uint64_t lo = static_cast<std::uint64_t>(nodes_[nd.link].len) + 1;
        if (lo > cap_) continue;
        const std::uint64_t hi = std::min<std::uint64_t>(static_cast<std::uint64_t>(nd.len), cap_);
        if (hi < lo) continue;
        distinct_[lo] += 1;
        distinct_[hi + 1] -= 1;
        if (nd.next[0] != -1 && nd.next[1] != -1) {
            special_[lo] += 1;
            special_[hi + 1] -= 1;
        }
    }
    for (std::uint64_t n = 1; n <= cap_; ++n) {
        distinct_[n] += distinct_[n - 1];
        special_[n] += special_[n - 1];
    }
}

std::uint64_t SuffixAutomaton::distinct_of_length(std::uint64_t n) const {
    if (n < 1 || n > cap_) throw std::out_of_range("length outside the built table");
    return distinct_[n];
}

std::uint64_t SuffixAutomaton::right_special_of_length(std::uint64_t n) const {
    if (n < 1 || n > cap_) throw std::out_of_range("length outside the built table");
    return special_[n];
}

}  // namespace gapwords
