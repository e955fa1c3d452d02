#include <doctest.h>

#include <thread>

#include "gapwords/errors.hpp"
#include "gapwords/gapspec.hpp"

using namespace gapwords;

TEST_CASE("gap evaluation") {
    CHECK(GapSpec::polynomial_g(2).gap(3) == 5);
    CHECK(GapSpec::linear(2, 1).gap(1) == 3);
    CHECK(GapSpec::exponential_g(2).gap(4) == 4);
    CHECK(GapSpec::exponential_g(2).gap(1) == 1);
    CHECK(GapSpec::periodic_run(3).gap(17) == 3);
}

TEST_CASE("one distribution") {
    const GapSpec poly = GapSpec::polynomial_g(2);
    CHECK(poly.one_distribution(0) == 0);
    CHECK(poly.one_distribution(4) == 16);
    CHECK(GapSpec::exponential_g(3).one_distribution(3) == 9);
    // exponential values leave 64 bits behind index 65
    CHECK(GapSpec::exponential_g(2).one_distribution(80) == int_pow(Int(2), 79));
}

TEST_CASE("one distribution telescopes and is strictly increasing") {
    for (const GapSpec& spec :
         {GapSpec::polynomial_g(3), GapSpec::linear(2, 1), GapSpec::exponential_g(2)}) {
        Int prev = 0;
        for (std::uint64_t i = 1; i <= 50; ++i) {
            const Int G = spec.one_distribution(i);
            CHECK(G - prev == spec.gap(i));
            CHECK(spec.gap(i) >= 1);
            CHECK(G > prev);
            prev = G;
        }
    }
}

TEST_CASE("word prefixes") {
    CHECK(word_prefix(GapSpec::linear(1, 0), 10).bits == "1010010001");
    // (0^(b-1) 1)^inf: gaps are b throughout
    CHECK(word_prefix(GapSpec::periodic_run(3), 6).bits == "001001");
    const GapSpec u = GapSpec::explicit_table({2, 4}, TailRule::sum_prev_two());
    CHECK(word_prefix(u, 8).bits == "01000100");
}

TEST_CASE("prefix consistency and runs") {
    const GapSpec spec = GapSpec::explicit_table({3, 1, 5, 2, 9}, TailRule::sum_prev_two());
    const BinaryPrefix longer = word_prefix(spec, 200);
    const BinaryPrefix shorter = word_prefix(spec, 57);
    CHECK(longer.bits.substr(0, 57) == shorter.bits);
    for (std::size_t i = 0; i < shorter.runs.size(); ++i)
        CHECK(Int(shorter.runs[i]) + 1 == spec.gap(i + 1));
}

TEST_CASE("prefix length guard") {
    CHECK_THROWS_AS(word_prefix(GapSpec::linear(1, 0), max_prefix_bits() + 1),
                    resource_guard_error);
}

TEST_CASE("classify") {
    CHECK(classify(GapSpec::linear(2, 1), 100).strictly_increasing);

    const ClassReport periodic = classify(GapSpec::periodic_run(3), 100);
    CHECK(periodic.non_decreasing);
    CHECK(periodic.blockwise_injective);
    CHECK(periodic.bounded);
    CHECK_FALSE(periodic.strictly_increasing);

    const GapSpec bad = GapSpec::explicit_table({2, 3, 3, 2}, TailRule::constant(Int(7)));
    const ClassReport rep = classify(bad, 16);
    CHECK_FALSE(rep.blockwise_injective);
    CHECK(bad.declared_class() == Regularity::none);

    CHECK_THROWS_AS(GapSpec::explicit_table({2, 3, 3, 2}, TailRule::constant(Int(7)),
                                            Regularity::blockwise_injective),
                    class_error);

    // the exponential base-2 tie: non-decreasing, not strictly increasing,
    // eligible for the closed forms
    const GapSpec exp2 = GapSpec::exponential_g(2);
    const ClassReport e = classify(exp2, 64);
    CHECK(e.non_decreasing);
    CHECK_FALSE(e.strictly_increasing);
    CHECK_FALSE(e.injective);
    CHECK(exp2.gap_increasing_eligible());
    CHECK(GapSpec::periodic_run(3).gap_increasing_eligible() == false);
}

TEST_CASE("classify is monotone in the horizon") {
    const GapSpec spec = GapSpec::explicit_table({2, 5, 3}, TailRule::sum_prev_two());
    for (std::uint64_t h : {2ull, 3ull, 8ull, 64ull}) {
        const ClassReport rep = classify(spec, h);
        if (h >= 3) CHECK_FALSE(rep.strictly_increasing);
    }
    CHECK(classify(spec, 2).strictly_increasing);  // violation only visible from 3 on
}

TEST_CASE("malformed rules are rejected at construction") {
    CHECK_THROWS_AS(GapSpec::linear(0, 5), spec_error);
    CHECK_THROWS_AS(GapSpec::linear(2, -2), spec_error);
    CHECK_THROWS_AS(GapSpec::polynomial_g(1), spec_error);
    CHECK_THROWS_AS(GapSpec::periodic_run(0), spec_error);
    CHECK_THROWS_AS(GapSpec::explicit_table({}, TailRule::sum_prev_two()), spec_error);
    CHECK_THROWS_AS(GapSpec::explicit_table({3}, TailRule::sum_prev_two()), spec_error);
    CHECK_THROWS_AS(GapSpec::explicit_table({0, 2}, TailRule::sum_prev_two()), spec_error);
    CHECK_THROWS_AS(GapSpec::run_recurrence(1, {1, 2}), spec_error);
    CHECK_THROWS_AS(GapSpec::run_recurrence(2, {1, 2, 3}), spec_error);
}

TEST_CASE("json round trip") {
    const char* texts[] = {
        R"({"kind":"polynomial_G","k":2})",
        R"({"kind":"linear_gap","c":2,"d":1})",
        R"({"kind":"exponential_G","k":3})",
        R"({"kind":"periodic_run","b":4})",
        R"({"kind":"explicit_table","gaps":[2,4],"tail":{"rule":"sum_prev_two"}})",
        R"({"kind":"run_recurrence","a":2,"seed_runs":[3,4,6,9]})",
    };
    for (const char* text : texts) {
        const GapSpec spec = GapSpec::from_json_text(text);
        const GapSpec again = GapSpec::from_json(spec.to_json());
        CHECK(spec.to_json() == again.to_json());
        for (std::uint64_t i = 1; i <= 12; ++i) CHECK(spec.gap(i) == again.gap(i));
    }
}

TEST_CASE("json rejects unknown fields and bad shapes") {
    CHECK_THROWS_AS(GapSpec::from_json_text(R"({"kind":"linear_gap","c":2,"d":1,"x":0})"),
                    spec_error);
    CHECK_THROWS_AS(GapSpec::from_json_text(R"({"kind":"linear_gap","c":2})"), spec_error);
    CHECK_THROWS_AS(GapSpec::from_json_text(R"({"kind":"linear_gap","c":1,"d":-1})"), spec_error);
    CHECK_THROWS_AS(GapSpec::from_json_text(R"({"kind":"mystery"})"), spec_error);
    CHECK_THROWS_AS(GapSpec::from_json_text("not json"), spec_error);
    CHECK_THROWS_AS(GapSpec::from_json_text(
                        R"({"kind":"explicit_table","gaps":[2,4],"tail":{"rule":"nope"}})"),
                    spec_error);
}

TEST_CASE("digest is stable across copies") {
    const GapSpec a = GapSpec::linear(2, 1);
    const GapSpec b = GapSpec::from_json(a.to_json());
    CHECK(a.digest() == b.digest());
    CHECK(a.digest() != GapSpec::linear(2, 0).digest());
}

TEST_CASE("min gap beyond and settle index") {
    const GapSpec lin = GapSpec::linear(2, 0);
    CHECK(lin.min_gap_beyond(3) == 8);
    const GapSpec table = GapSpec::explicit_table({3, 1, 5, 2, 9}, TailRule::sum_prev_two());
    CHECK(table.min_gap_beyond(0) == 1);
    CHECK(table.min_gap_beyond(2) == 2);
    CHECK(table.min_gap_beyond(4) == 9);
    const auto settle = table.all_gaps_exceed_after(5);
    REQUIRE(settle.has_value());
    CHECK(*settle == 5);  // g(5) = 9 > 5 and everything after grows
    CHECK_FALSE(GapSpec::periodic_run(4).all_gaps_exceed_after(9).has_value());
    CHECK(*GapSpec::periodic_run(4).all_gaps_exceed_after(3) == 1);

    const GapSpec rr = GapSpec::run_recurrence(2, {3, 4, 6, 9});
    // gaps 4, 5, 7, 10, 17, 27, ...
    CHECK(rr.min_gap_beyond(0) == 4);
    CHECK(rr.min_gap_beyond(4) == 17);
}

TEST_CASE("memo cache is safe under concurrent reads") {
    const GapSpec spec = GapSpec::explicit_table({2, 4}, TailRule::sum_prev_two());
    std::vector<std::thread> threads;
    std::vector<Int> results(8);
    for (int t = 0; t < 8; ++t)
        threads.emplace_back([&, t] { results[t] = spec.one_distribution(400 + t); });
    for (auto& th : threads) th.join();
    for (int t = 0; t < 8; ++t) CHECK(results[t] == spec.one_distribution(400 + t));
}
