#include "gapwords/realizability.hpp"

#include <algorithm>
#include <deque>
#include <optional>

#include "gapwords/errors.hpp"
#include "gapwords/oracle.hpp"

namespace gapwords {

NecessaryCheck necessary_check(const ComplexityProfile& profile) {
    NecessaryCheck out;
    if (profile.max_n() < 3) {
        out.reason = "profile too short (need at least f(1..3))";
        return out;
    }
    if (profile.at(1) != 2) {
        out.reason = "f(1) != 2";
        out.position = 1;
        return out;
    }
    if (profile.at(2) != 3) {
        out.reason = "f(2) != 3";
        out.position = 2;
        return out;
    }
    for (std::uint64_t n = 1; n <= profile.max_delta2_n(); ++n) {
        const Int d2 = profile.delta2(n);
        if (d2 > 1 || d2 < -1) {
            out.reason = "second difference outside [-1, 1]";
            out.position = n;
            return out;
        }
        if (d2 == 1) out.ups.push_back(n);
        if (d2 == -1) out.downs.push_back(n);
    }
    out.ok = true;
    return out;
}

std::vector<Int> adjacent_sums(const Int& lead, const std::vector<Int>& xs) {
    if (xs.empty()) return {};
    if (lead < 0 || lead >= xs.front()) throw spec_error("lead must satisfy 0 <= lead < x_1");
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (xs[i] <= xs[i - 1]) throw spec_error("sequence must be strictly increasing");
    std::vector<Int> out;
    out.reserve(xs.size());
    out.push_back(lead + xs[0] + 1);
    for (std::size_t i = 1; i < xs.size(); ++i) out.push_back(xs[i - 1] + xs[i] + 1);
    return out;
}

std::vector<Int> merge_disjoint(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, k = 0;
    while (i < a.size() && k < b.size()) {
        if (a[i] == b[k])
            throw spec_error("sequences share the element " + a[i].str());
        out.push_back(a[i] < b[k] ? a[i++] : b[k++]);
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (k < b.size()) out.push_back(b[k++]);
    for (std::size_t t = 1; t < out.size(); ++t)
        if (out[t] <= out[t - 1]) throw spec_error("inputs were not strictly increasing");
    return out;
}

WitnessCandidate construct_witness(const ComplexityProfile& profile,
                                   std::uint64_t leading_zeros, std::uint64_t horizon) {
    const NecessaryCheck nc = necessary_check(profile);
    if (!nc.ok) throw spec_error("profile fails the necessary condition: " + nc.reason);
    if (nc.ups.empty())
        throw spec_error("profile has no +1 second difference; no witness exists");
    if (horizon > profile.max_delta2_n())
        throw spec_error("horizon exceeds the evaluable part of the profile (max " +
                         std::to_string(profile.max_delta2_n()) + ")");
    const std::uint64_t first_up = nc.ups.front();
    if (leading_zeros >= first_up)
        throw spec_error("leading zero count must be below the first up position");

    WitnessCandidate cand;
    cand.leading_zeros = leading_zeros;
    cand.horizon = horizon;

    auto is_up = [&](std::uint64_t v) {
        return std::binary_search(nc.ups.begin(), nc.ups.end(), v);
    };

    // runs so far; the sum stream s_1 = p + j_1 + 1, s_(i+1) = j_i + j_(i+1) + 1
    // always runs ahead of its consumption, since s_(i+1) > j_(i+1).
    std::vector<std::uint64_t>& runs = cand.runs;
    runs.push_back(first_up);
    std::size_t next_up = 1;                  // index into nc.ups
    std::size_t next_down = 0;                // downs must be met in order
    std::uint64_t sums_generated = 0;         // how many stream values exist
    std::deque<std::pair<std::uint64_t, std::uint64_t>> pending;  // (value, stream index)

    auto generate_sums = [&]() {
        while (sums_generated < runs.size()) {
            const std::uint64_t idx = sums_generated + 1;
            const std::uint64_t value = idx == 1 ? leading_zeros + runs[0] + 1
                                                 : runs[idx - 2] + runs[idx - 1] + 1;
            pending.emplace_back(value, idx);
            ++sums_generated;
        }
    };

    for (;;) {
        generate_sums();

        // classify pending sum values in order until one survives as a run
        // candidate or the queue drains
        std::optional<std::uint64_t> sum_candidate;
        while (!pending.empty()) {
            const auto [value, idx] = pending.front();
            if (next_down < nc.downs.size() && nc.downs[next_down] < value) {
                cand.verdict = WitnessVerdict::rejected_missing_down;
                cand.detail = "down position " + std::to_string(nc.downs[next_down]) +
                              " is not an adjacent-run sum";
                return cand;
            }
            if (value > horizon) break;  // beyond what the profile can classify
            if (is_up(value)) {
                cand.verdict = WitnessVerdict::rejected_conflict;
                cand.conflict_index = idx;
                cand.conflict_value = value;
                cand.detail = "adjacent-run sum " + std::to_string(value) +
                              " (stream index " + std::to_string(idx) +
                              ") lands on an up position";
                return cand;
            }
            if (next_down < nc.downs.size() && nc.downs[next_down] == value) {
                ++next_down;  // consumed as a down position
                pending.pop_front();
                continue;
            }
            sum_candidate = value;
            break;
        }

        const std::uint64_t up_candidate =
            next_up < nc.ups.size() ? nc.ups[next_up] : UINT64_MAX;
        const std::uint64_t sum_front =
            sum_candidate ? *sum_candidate
                          : (!pending.empty() ? pending.front().first : UINT64_MAX);

        if (up_candidate == UINT64_MAX && pending.empty()) {
            // no up positions left and the sum stream is spent: the run
            // sequence cannot be extended, the word would be finite
            cand.verdict = WitnessVerdict::rejected_finite;
            cand.detail = "run sequence stalls at " + std::to_string(runs.back());
            return cand;
        }
        const std::uint64_t next_run = std::min(up_candidate, sum_front);
        if (next_run > horizon) {
            cand.verdict = WitnessVerdict::accepted_up_to_horizon;
            return cand;
        }
        if (next_run == up_candidate) {
            ++next_up;
        } else {
            pending.pop_front();
            cand.overlap.push_back(next_run);
        }
        runs.push_back(next_run);
    }
}

RealizabilityReport realizable(const ComplexityProfile& profile, std::uint64_t horizon) {
    RealizabilityReport rep;
    rep.horizon = std::min<std::uint64_t>(horizon, profile.max_delta2_n());
    rep.necessary = necessary_check(profile);
    if (!rep.necessary.ok) return rep;
    if (rep.necessary.ups.empty()) return rep;  // no +1 anywhere: not realizable
    const std::uint64_t limit =
        rep.necessary.downs.empty() ? 0 : rep.necessary.downs.back();
    const std::uint64_t need =
        std::max(rep.necessary.ups.back(), limit);
    if (rep.horizon < need)
        throw spec_error("horizon " + std::to_string(rep.horizon) +
                         " too short to cover every marked position (need " +
                         std::to_string(need) + ")");
    for (std::uint64_t p = 0; p < rep.necessary.ups.front(); ++p) {
        rep.candidates.push_back(construct_witness(profile, p, rep.horizon));
        if (rep.candidates.back().verdict == WitnessVerdict::accepted_up_to_horizon)
            rep.accepted = true;
    }
    return rep;
}

GapSpec witness_spec(const WitnessCandidate& candidate) {
    if (candidate.verdict != WitnessVerdict::accepted_up_to_horizon)
        throw spec_error("only accepted candidates denote a word");
    std::vector<Int> gaps;
    gaps.reserve(candidate.runs.size() + 1);
    gaps.push_back(Int(candidate.leading_zeros) + 1);
    for (std::uint64_t r : candidate.runs) gaps.push_back(Int(r) + 1);
    return GapSpec::explicit_table(std::move(gaps), TailRule::sum_prev_two(),
                                   Regularity::strictly_increasing);
}

bool verify_witness(const WitnessCandidate& candidate, const ComplexityProfile& profile,
                    std::uint64_t n_max) {
    if (profile.max_n() < n_max) throw spec_error("profile shorter than n_max");
    if (candidate.runs.empty() || candidate.runs.back() < n_max + 1)
        throw spec_error("candidate horizon too short to certify factors up to n_max");
    const GapSpec spec = witness_spec(candidate);
    const ComplexityProfile actual = oracle_table(spec, n_max);
    for (std::uint64_t n = 1; n <= n_max; ++n)
        if (actual.at(n) != profile.at(n)) return false;
    return true;
}

ComplexityProfile family_ex42(std::uint64_t q, std::uint64_t n_max) {
    if (q < 2) throw spec_error("family ex42 requires q >= 2");
    ComplexityProfile p;
    p.f.reserve(n_max);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        const Int m = Int(n) / q;
        // (m + 1)(n - q m / 2) + 1 with m (m + 1) always even
        p.f.push_back((m + 1) * Int(n) - Int(q) * m * (m + 1) / 2 + 1);
    }
    return p;
}

ComplexityProfile family_ex43(std::uint64_t q, std::uint64_t n_max) {
    if (q < 3) throw spec_error("family ex43 requires q >= 3");
    ComplexityProfile p;
    p.f.reserve(n_max);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        const Int m = Int(n - 1) / q;
        p.f.push_back(Int(n) + Int(n - 1) * m - Int(q) * m * (m + 1) / 2 + 1);
    }
    return p;
}

}  // namespace gapwords
