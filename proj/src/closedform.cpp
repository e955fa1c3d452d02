#include "gapwords/closedform.hpp"

#include "gapwords/errors.hpp"

namespace gapwords {

namespace {

void require_eligible(const GapSpec& spec, const char* op) {
    if (!spec.gap_increasing_eligible())
        throw class_error(std::string(op) + " needs strictly increasing gaps (declared class is " +
                          to_string(spec.declared_class()) + ")");
}

void require_injective(const GapSpec& spec, const char* op) {
    const Regularity r = spec.declared_class();
    if (r != Regularity::injective && r != Regularity::strictly_increasing)
        throw class_error(std::string(op) + " needs an injective gap declaration, got " +
                          to_string(r));
}

// Least index in [0, limit] where the monotone predicate turns true.
template <typename Pred>
std::uint64_t least_true(std::uint64_t limit, Pred pred) {
    if (pred(0)) return 0;
    std::uint64_t lo = 0, hi = 1;  // pred(lo) is false
    while (hi < limit && !pred(hi)) {
        lo = hi;
        hi = hi * 2 < limit ? hi * 2 : limit;
    }
    if (!pred(hi)) throw class_error("monotone search found no admissible index");
    while (hi - lo > 1) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        (pred(mid) ? hi : lo) = mid;
    }
    return hi;
}

}  // namespace

std::uint64_t wide_gap_cutoff(const GapSpec& spec, std::uint64_t n) {
    if (n < 1) throw spec_error("n must be >= 1");
    require_eligible(spec, "wide_gap_cutoff");
    const Int target = Int(n) + 1;
    // g(i+1) >= i forces a solution at or before n.
    return least_true(n, [&](std::uint64_t l) {
        return spec.gap(l + 1) + spec.gap(l + 2) >= target;
    });
}

std::uint64_t last_short_gap(const GapSpec& spec, std::uint64_t n) {
    require_eligible(spec, "last_short_gap");
    if (Int(n) <= spec.gap(1))
        throw spec_error("last_short_gap undefined below the first gap");
    const Int limit = Int(n) - 1;
    // least m with g(m+1) > n - 1, minus one
    const std::uint64_t first_long =
        least_true(n, [&](std::uint64_t m) { return spec.gap(m + 1) > limit; });
    return first_long - 1;
}

Int complexity_closed(const GapSpec& spec, std::uint64_t n) {
    if (n < 1) throw spec_error("n must be >= 1");
    require_eligible(spec, "complexity_closed");
    if (Int(n) <= spec.gap(1)) return Int(n) + 1;
    const std::uint64_t L = wide_gap_cutoff(spec, n);
    const std::uint64_t M = last_short_gap(spec, n);
    return spec.one_distribution(L) + spec.one_distribution(L + 1) -
           spec.one_distribution(M + 1) + Int(n) * (Int(M) - Int(L)) + Int(n) + 1;
}

Int special_factors_injective(const GapSpec& spec, std::uint64_t n) {
    if (n < 1) throw spec_error("n must be >= 1");
    require_injective(spec, "special_factors_injective");
    // Enumerate l with g(l) <= n; past all_gaps_exceed_after(n) no solution
    // exists, so the count is certified.
    const auto stop = spec.all_gaps_exceed_after(Int(n));
    if (!stop) throw horizon_error("gap rule never outgrows n; count not certifiable");
    Int count = 0;
    Int prev = 0;  // g(0) = 0
    for (std::uint64_t l = 1; l < *stop; ++l) {
        Int cur = spec.gap(l);
        if (cur <= n && prev + cur >= Int(n) + 1) ++count;
        prev = std::move(cur);
    }
    return count + 1;
}

Int special_count_increasing(const GapSpec& spec, std::uint64_t n) {
    require_eligible(spec, "special_count_increasing");
    if (Int(n) < spec.gap(1)) return 1;
    const std::uint64_t M = last_short_gap(spec, n + 1);
    const std::uint64_t L = wide_gap_cutoff(spec, n);
    return Int(M) - Int(L) + 1;
}

ComplexityProfile complexity_table(const GapSpec& spec, std::uint64_t n_max, TableMethod method) {
    if (n_max < 2) throw spec_error("n_max must be >= 2");
    if (method == TableMethod::closed)
        require_eligible(spec, "complexity_table(closed)");
    else
        require_injective(spec, "complexity_table(recurrence)");

    ComplexityProfile p;
    p.f.reserve(n_max);
    p.f.push_back(2);
    for (std::uint64_t n = 1; n < n_max; ++n) {
        const Int s = method == TableMethod::closed ? special_count_increasing(spec, n)
                                                    : special_factors_injective(spec, n);
        p.f.push_back(p.f.back() + s);
    }
    return p;
}

}  // namespace gapwords
