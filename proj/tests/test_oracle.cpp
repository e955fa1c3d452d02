#include <doctest.h>

#include "gapwords/closedform.hpp"
#include "gapwords/errors.hpp"
#include "gapwords/fixtures.hpp"
#include "gapwords/oracle.hpp"

using namespace gapwords;

namespace {

// g(i) = 2i - 1, the square one-distribution
GapSpec squares() { return GapSpec::polynomial_g(2); }

// run word 0 1 0^3 1 0^5 1 0^9 ... (runs 1, 3, 5, 9, 15, 25, ...)
GapSpec word_u() { return GapSpec::explicit_table({2, 4}, TailRule::sum_prev_two()); }
// run word 0^2 1 0^3 1 0^6 1 0^10 ... (runs 2, 3, 6, 10, 17, 28, ...)
GapSpec word_v() { return GapSpec::explicit_table({3, 4}, TailRule::sum_prev_two()); }

}  // namespace

TEST_CASE("distinct factor counts on raw prefixes") {
    const BinaryPrefix p = prefix_from_bits("1010010001");
    CHECK(distinct_factors(p, 2, CountBackend::window_hash) == 3);  // 10, 01, 00
    CHECK(distinct_factors(p, 2, CountBackend::automaton) == 3);
    CHECK(distinct_factors(p, 1) == 2);
    CHECK_THROWS_AS(distinct_factors(p, 11), spec_error);
    CHECK(distinct_factors(prefix_from_bits(word_prefix(GapSpec::periodic_run(3), 30).bits), 5) ==
          3);
}

TEST_CASE("both backends agree on arbitrary strings") {
    std::uint64_t state = 12345;
    auto next = [&] { return state = state * 6364136223846793005ull + 1442695040888963407ull; };
    for (int round = 0; round < 40; ++round) {
        std::string bits;
        const std::size_t len = 20 + next() % 200;
        for (std::size_t i = 0; i < len; ++i) bits.push_back(next() & 1 ? '1' : '0');
        const BinaryPrefix p = prefix_from_bits(bits);
        for (std::uint64_t n = 1; n + 1 < len; n += 1 + next() % 5) {
            CHECK(distinct_factors(p, n, CountBackend::window_hash) ==
                  distinct_factors(p, n, CountBackend::automaton));
            CHECK(right_special_count(p, n, CountBackend::window_hash) ==
                  right_special_count(p, n, CountBackend::automaton));
        }
    }
}

TEST_CASE("right special factors") {
    CHECK(right_special_factors(prefix_from_bits("000000"), 2).empty());

    const BinaryPrefix stair = word_prefix(staircase_word(12), 400);
    const std::vector<std::string> expect = {"00000", "00100", "01000", "10000"};
    CHECK(right_special_factors(stair, 5) == expect);

    const BinaryPrefix sq = word_prefix(squares(), 400);
    CHECK(right_special_factors(sq, 5).size() == 2);
}

TEST_CASE("sufficient prefix length, strictly increasing") {
    const GapSpec lin = GapSpec::linear(1, 0);
    const PrefixRequirement r = sufficient_prefix_length(lin, 4);
    CHECK(r.certified);
    CHECK(r.length == 21);  // max(G(6), G(3) + 4)

    // below the first gap
    const GapSpec wide = GapSpec::explicit_table({5, 7, 11}, TailRule::sum_prev_two());
    const PrefixRequirement small = sufficient_prefix_length(wide, 3);
    CHECK(small.certified);
    CHECK(small.length == 15);  // G(2) + 3

    // census stays put when the prefix doubles past the bound
    const PrefixRequirement pr = sufficient_prefix_length(squares(), 10);
    const std::uint64_t bound = to_u64(pr.length);
    const BinaryPrefix at = word_prefix(squares(), bound);
    const BinaryPrefix twice = word_prefix(squares(), 2 * bound);
    const BinaryPrefix quad = word_prefix(squares(), 4 * bound);
    CHECK(distinct_factors(at, 10) == distinct_factors(quad, 10));
    CHECK(right_special_count(at, 10) == right_special_count(twice, 10));
}

TEST_CASE("oracle censuses") {
    CHECK(oracle_complexity(GapSpec::linear(1, 0), 5).distinct_count == 10);
    CHECK(oracle_complexity(GapSpec::periodic_run(4), 3).distinct_count == 4);
    CHECK(oracle_complexity(word_u(), 10).distinct_count == 17);
    CHECK(oracle_complexity(word_v(), 10).distinct_count == 17);
    CHECK(oracle_complexity(GapSpec::linear(1, 0), 5).certified);
    CHECK(oracle_complexity(GapSpec::periodic_run(4), 3).certified);
}

TEST_CASE("first difference equals the special factor count") {
    for (const GapSpec& spec : {squares(), GapSpec::linear(2, 1), word_u(), staircase_word(14)}) {
        const ComplexityProfile f = oracle_table(spec, 24);
        const std::vector<Int> s = oracle_special_table(spec, 23);
        for (std::uint64_t n = 1; n <= 23; ++n) CHECK(f.delta(n) == s[n - 1]);
    }
}

TEST_CASE("censuses never shrink with the prefix") {
    const GapSpec spec = staircase_word(10);
    Int last = 0;
    for (std::uint64_t len = 64; len <= 1024; len *= 2) {
        const Int d = distinct_factors(word_prefix(spec, len), 7);
        CHECK(d >= last);
        last = d;
    }
}

TEST_CASE("heuristic census for undeclared tables") {
    // blockwise value order scrambled, declared nothing useful
    const GapSpec spec = GapSpec::explicit_table({4, 4, 2, 2, 7, 7, 7}, TailRule::linear(1, 1),
                                                 Regularity::none);
    const FactorCensus census = oracle_complexity(spec, 6);
    CHECK_FALSE(census.certified);
    // cross-check against a directly materialized long prefix
    CHECK(census.distinct_count == distinct_factors(word_prefix(spec, 4096), 6));
}

TEST_CASE("resource guard refuses infeasible censuses") {
    CHECK_THROWS_AS(oracle_complexity(GapSpec::exponential_g(2), 1'000'000'000),
                    resource_guard_error);
}

TEST_CASE("run and double-gap predicates") {
    // word u: leading run 1, then runs 3, 5, 9, 15, 25, ...
    const GapSpec u = word_u();
    CHECK(has_run_between_ones(u, 3));
    CHECK(has_run_between_ones(u, 5));
    CHECK_FALSE(has_run_between_ones(u, 4));
    CHECK(has_double_gap(u, 4));    // leading 1 + first run 3
    CHECK(has_double_gap(u, 8));    // 3 + 5
    CHECK_FALSE(has_double_gap(u, 6));

    CHECK(second_difference_case(u, 3).label == 'a');
    CHECK(second_difference_case(u, 3).value == 1);
    CHECK(second_difference_case(u, 5).label == 'c');
    CHECK(second_difference_case(u, 5).value == 0);
    CHECK(second_difference_case(u, 4).label == 'd');

    // runs 1, 2, 3, 8: double gap of length 3 with no run of length 4
    const GapSpec mixed = GapSpec::explicit_table({2, 3, 4, 9}, TailRule::sum_prev_two());
    CHECK(second_difference_case(mixed, 4).label == 'b');
    CHECK(second_difference_case(mixed, 4).value == -1);
}

TEST_CASE("second differences match the census tables") {
    for (const GapSpec& spec : {squares(), GapSpec::linear(2, 1), word_u(),
                                GapSpec::explicit_table({2, 3, 4, 9}, TailRule::sum_prev_two())}) {
        const ComplexityProfile f = oracle_table(spec, 30);
        for (std::uint64_t n = 1; n <= 28; ++n)
            CHECK(Int(second_difference_case(spec, n).value) == f.delta2(n));
    }
}
