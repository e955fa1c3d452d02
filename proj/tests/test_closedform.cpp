#include <doctest.h>

#include <cmath>

#include "gapwords/closedform.hpp"
#include "gapwords/errors.hpp"
#include "gapwords/fixtures.hpp"
#include "gapwords/oracle.hpp"

using namespace gapwords;

namespace {
GapSpec squares() { return GapSpec::polynomial_g(2); }
}

TEST_CASE("search cutoffs") {
    CHECK(wide_gap_cutoff(squares(), 5) == 1);
    CHECK(wide_gap_cutoff(squares(), 3) == 0);  // g(1) + g(2) = 4 >= 4
    CHECK(wide_gap_cutoff(GapSpec::linear(2, 0), 7) == 1);

    CHECK(last_short_gap(squares(), 5) == 1);
    CHECK(last_short_gap(GapSpec::exponential_g(2), 9) == 4);
    CHECK(last_short_gap(GapSpec::linear(1, 0), 4) == 2);
    CHECK_THROWS_AS(last_short_gap(GapSpec::linear(5, 0), 5), spec_error);
}

TEST_CASE("cutoffs match a linear scan and are monotone") {
    for (const GapSpec& spec : {squares(), GapSpec::linear(3, 1), GapSpec::exponential_g(3)}) {
        std::uint64_t prev_l = 0, prev_m = 0;
        for (std::uint64_t n = 1; n <= 300; ++n) {
            std::uint64_t l = 0;
            while (spec.gap(l + 1) + spec.gap(l + 2) < Int(n) + 1) ++l;
            CHECK(wide_gap_cutoff(spec, n) == l);
            CHECK(l >= prev_l);
            prev_l = l;
            if (Int(n) > spec.gap(1)) {
                std::uint64_t m = 0;
                while (spec.gap(m + 2) <= Int(n) - 1) ++m;
                CHECK(last_short_gap(spec, n) == m);
                CHECK(m >= prev_m);
                prev_m = m;
            }
        }
    }
}

TEST_CASE("closed complexity values") {
    CHECK(complexity_closed(GapSpec::linear(1, 0), 5) == 10);
    CHECK(complexity_closed(squares(), 1) == 2);
    CHECK(complexity_closed(GapSpec::explicit_table({4, 6, 7}, TailRule::sum_prev_two()), 3) ==
          4);  // n below the first gap
    CHECK(complexity_closed(squares(), 6) == oracle_complexity(squares(), 6).distinct_count);
}

TEST_CASE("closed complexity equals brute force on every rule family") {
    const GapSpec specs[] = {GapSpec::linear(1, 0),      GapSpec::linear(2, 1),
                             squares(),                  GapSpec::polynomial_g(3),
                             GapSpec::exponential_g(2),  GapSpec::exponential_g(3),
                             random_gap_increasing(7)};
    for (const GapSpec& spec : specs) {
        const ComplexityProfile brute = oracle_table(spec, 40);
        for (std::uint64_t n = 1; n <= 40; ++n) CHECK(complexity_closed(spec, n) == brute.at(n));
    }
}

TEST_CASE("special factor counts, injective route") {
    CHECK(special_factors_injective(squares(), 5) == 2);
    // first gap above n: only the all-zeros factor
    CHECK(special_factors_injective(GapSpec::explicit_table({7, 9, 11}, TailRule::sum_prev_two()),
                                    4) == 1);

    // injective but not monotone
    const GapSpec scrambled = GapSpec::explicit_table({3, 1, 5, 2, 9}, TailRule::sum_prev_two());
    CHECK(scrambled.declared_class() == Regularity::injective);
    const std::vector<Int> brute = oracle_special_table(scrambled, 12);
    for (std::uint64_t n = 1; n <= 12; ++n)
        CHECK(special_factors_injective(scrambled, n) == brute[n - 1]);
}

TEST_CASE("the two special-factor routes agree on increasing rules") {
    for (const GapSpec& spec : {squares(), GapSpec::linear(2, 1), GapSpec::exponential_g(3),
                                random_gap_increasing(11)}) {
        for (std::uint64_t n = 1; n <= 200; ++n)
            CHECK(special_factors_injective(spec, n) == special_count_increasing(spec, n));
    }
}

TEST_CASE("complexity tables") {
    const ComplexityProfile closed = complexity_table(squares(), 120, TableMethod::closed);
    const ComplexityProfile rec = complexity_table(squares(), 120, TableMethod::recurrence);
    for (std::uint64_t n = 1; n <= 120; ++n) {
        CHECK(closed.at(n) == rec.at(n));
        CHECK(closed.at(n) == complexity_closed(squares(), n));
    }
    // f(n+4) = f(n) + n + 4 on the square rule
    for (std::uint64_t n = 1; n + 4 <= 120; ++n)
        CHECK(closed.at(n + 4) == closed.at(n) + n + 4);

    // f(n+2c) = f(n) + n + 2c from n = c + d on for linear gaps
    for (auto [c, d] : {std::pair<int, int>{2, 0}, {2, 1}, {3, 1}}) {
        const GapSpec lin = GapSpec::linear(c, d);
        const ComplexityProfile t = complexity_table(lin, 160, TableMethod::closed);
        for (std::uint64_t n = c + d; n + 2 * c <= 160; ++n)
            CHECK(t.at(n + 2 * c) == t.at(n) + n + 2 * c);
    }

    CHECK_THROWS_AS(complexity_table(GapSpec::periodic_run(3), 20, TableMethod::recurrence),
                    class_error);
    CHECK_THROWS_AS(complexity_table(GapSpec::periodic_run(3), 20, TableMethod::closed),
                    class_error);
}

TEST_CASE("difference and value bounds for increasing rules") {
    for (const GapSpec& spec : {squares(), GapSpec::linear(1, 0), random_gap_increasing(3)}) {
        const ComplexityProfile t = complexity_table(spec, 100, TableMethod::closed);
        for (std::uint64_t n = 1; n <= 99; ++n) {
            const Int df = t.delta(n);
            CHECK(df >= 1);
            CHECK(df <= Int(n) / 2 + 1);
        }
        for (std::uint64_t n = 1; n <= 100; ++n) {
            const Int hi = Int(n + 1) / 2 * (Int(n) / 2) + Int(n + 1) / 2 + 1;
            CHECK(t.at(n) >= Int(n) + 1);
            CHECK(t.at(n) <= hi);
        }
    }
}

TEST_CASE("growth ratio stays inside a fixed window") {
    // polynomial rules grow like n^(k/(k-1)), exponential ones linearly
    for (unsigned k : {2u, 3u}) {
        const GapSpec spec = GapSpec::polynomial_g(k);
        const double e = double(k) / double(k - 1);
        const double base =
            static_cast<double>(complexity_closed(spec, 1000)) / std::pow(1000.0, e);
        for (std::uint64_t n : {10'000ull, 100'000ull}) {
            const double r = static_cast<double>(complexity_closed(spec, n)) /
                             std::pow(static_cast<double>(n), e);
            CHECK(r > base / 2);
            CHECK(r < base * 2);
        }
    }
    const GapSpec e2 = GapSpec::exponential_g(2);
    const double base = static_cast<double>(complexity_closed(e2, 1000)) / 1000.0;
    for (std::uint64_t n : {10'000ull, 100'000ull}) {
        const double r = static_cast<double>(complexity_closed(e2, n)) / double(n);
        CHECK(r > base / 2);
        CHECK(r < base * 2);
    }
}
