#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gapwords/bigint.hpp"

namespace gapwords {

// A gap function g assigns to i >= 1 the distance between the (i-1)-th and
// i-th one of an infinite binary word; G(i) = g(1) + ... + g(i) is the
// position of the i-th one, with G(0) = 0. A GapSpec is a finite rule that
// denotes the whole infinite sequence g(1), g(2), ...

enum class GapKind {
    polynomial_g,   // G(i) = i^k          => g(i) = i^k - (i-1)^k
    exponential_g,  // G(i) = k^(i-1)      => g(1) = 1, g(i) = k^(i-1) - k^(i-2)
    linear_gap,     // g(i) = c*i + d
    explicit_table, // listed gaps, continued by a tail rule
    run_recurrence, // zero-run lengths with n_i = n_(i-a) + n_(i-a+1) + 1 for i >= 2a
    periodic_run,   // g(i) = b, the word (0^(b-1) 1)^inf
};

enum class Regularity {
    strictly_increasing,
    injective,
    non_decreasing,
    blockwise_injective,
    none,
};

std::string to_string(Regularity r);
std::string to_string(GapKind k);

// Continuation rule for explicit_table specs, so that every spec denotes an
// infinite word.
struct TailRule {
    enum class Kind { linear_gap, sum_prev_two, run_recurrence, constant };
    Kind kind = Kind::constant;
    Int c = 0, d = 0;               // linear_gap: g(i) = c*i + d for i past the table
    std::size_t order = 0;          // run_recurrence
    std::optional<Int> value;       // constant; defaults to the last table gap

    static TailRule linear(Int c, Int d);
    static TailRule sum_prev_two();
    static TailRule run_rec(std::size_t order);
    static TailRule constant(std::optional<Int> value = std::nullopt);
};

class GapSpec {
public:
    static GapSpec polynomial_g(unsigned k);
    static GapSpec exponential_g(unsigned k);
    static GapSpec linear(Int c, Int d);
    static GapSpec periodic_run(Int b);
    static GapSpec explicit_table(std::vector<Int> gaps, TailRule tail,
                                  std::optional<Regularity> declared = std::nullopt);
    static GapSpec run_recurrence(std::size_t order, std::vector<Int> seed_runs,
                                  std::optional<Regularity> declared = std::nullopt);

    GapKind kind() const;
    Regularity declared_class() const;

    // g(i), exact; i >= 1.
    Int gap(std::uint64_t i) const;
    // G(i), exact; i >= 0. Memoized per spec instance; safe for concurrent
    // callers.
    Int one_distribution(std::uint64_t i) const;

    // True when the rule shape forces finitely many distinct gap values.
    bool bounded() const;
    // Number of explicitly listed gaps (table entries or seed runs);
    // 0 for closed-form rules.
    std::uint64_t listed_length() const;
    // Exact infimum of g over indices > pos (attained).
    Int min_gap_beyond(std::uint64_t pos) const;
    // Smallest index i0 such that g(i) > x for every i >= i0, when the rule
    // guarantees one exists.
    std::optional<std::uint64_t> all_gaps_exceed_after(const Int& x) const;

    // Whether the closed-form machinery for words with strictly increasing
    // gaps applies: either the declared class is strictly_increasing, or the
    // sequence has the benign leading tie g(1) == g(2) with g strictly
    // increasing from the second gap on (the gaps between actual ones are
    // then strictly increasing). The tie shape is spot-verified on a finite
    // horizon and, like every declared class, trusted beyond it.
    bool gap_increasing_eligible() const;

    nlohmann::json to_json() const;
    static GapSpec from_json(const nlohmann::json& j);
    static GapSpec from_json_text(const std::string& text);
    // Stable digest of the canonical serialized form.
    std::string digest() const;

private:
    struct State;
    std::shared_ptr<State> state_;
    GapSpec() = default;
};

struct ClassReport {
    std::uint64_t horizon = 0;
    bool strictly_increasing = false;
    bool injective = false;
    bool non_decreasing = false;
    bool blockwise_injective = false;
    bool bounded = false;
    Regularity declared = Regularity::none;
};

// Verifies the observable regularity of g(1..horizon) and checks it against
// the declared class. A declared-class violation within the horizon is a
// hard error: the formula modules would silently be wrong.
ClassReport classify(const GapSpec& spec, std::uint64_t horizon);

// A finite prefix of the denoted word. runs holds the zero-run lengths
// preceding each one that made it into the prefix, so runs[i] + 1 = g(i+1).
struct BinaryPrefix {
    std::string bits;  // '0' / '1'
    std::vector<std::uint64_t> runs;
    std::uint64_t ones = 0;
    std::uint64_t trailing_zeros = 0;
    std::uint64_t length() const { return bits.size(); }
};

// Default 1e8 bits, overridable through GAPWORDS_MAX_PREFIX_BITS.
std::uint64_t max_prefix_bits();

BinaryPrefix word_prefix(const GapSpec& spec, std::uint64_t length);
BinaryPrefix prefix_from_bits(std::string bits);

}  // namespace gapwords
