#include "gapwords/gapspec.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>

#include "gapwords/errors.hpp"

namespace gapwords {

std::string to_string(Regularity r) {
    switch (r) {
        case Regularity::strictly_increasing: return "strictly_increasing";
        case Regularity::injective: return "injective";
        case Regularity::non_decreasing: return "non_decreasing";
        case Regularity::blockwise_injective: return "blockwise_injective";
        case Regularity::none: return "none";
    }
    return "none";
}

std::string to_string(GapKind k) {
    switch (k) {
        case GapKind::polynomial_g: return "polynomial_G";
        case GapKind::exponential_g: return "exponential_G";
        case GapKind::linear_gap: return "linear_gap";
        case GapKind::explicit_table: return "explicit_table";
        case GapKind::run_recurrence: return "run_recurrence";
        case GapKind::periodic_run: return "periodic_run";
    }
    return "?";
}

TailRule TailRule::linear(Int c, Int d) {
    TailRule t;
    t.kind = Kind::linear_gap;
    t.c = std::move(c);
    t.d = std::move(d);
    return t;
}

TailRule TailRule::sum_prev_two() {
    TailRule t;
    t.kind = Kind::sum_prev_two;
    return t;
}

TailRule TailRule::run_rec(std::size_t order) {
    TailRule t;
    t.kind = Kind::run_recurrence;
    t.order = order;
    return t;
}

TailRule TailRule::constant(std::optional<Int> value) {
    TailRule t;
    t.kind = Kind::constant;
    t.value = std::move(value);
    return t;
}

struct GapSpec::State {
    GapKind kind = GapKind::periodic_run;
    Regularity declared = Regularity::none;
    unsigned k = 0;            // polynomial / exponential
    Int c = 0, d = 0;          // linear
    Int b = 0;                 // periodic
    std::vector<Int> table;    // explicit gaps
    std::optional<TailRule> tail;
    std::size_t order = 0;     // run recurrence
    std::vector<Int> seed_runs;

    mutable std::mutex mu;
    mutable std::vector<Int> gaps;  // cache of g(1..m), table-driven kinds only
    mutable std::vector<Int> sums;  // G(0..m)

    bool table_driven() const {
        return kind == GapKind::explicit_table || kind == GapKind::run_recurrence;
    }

    // Length of the explicitly listed part of the sequence.
    std::size_t listed_len() const {
        if (kind == GapKind::explicit_table) return table.size();
        if (kind == GapKind::run_recurrence) return seed_runs.size();
        return 0;
    }

    // Window width past the listed part that min_gap_beyond has to inspect.
    std::size_t tail_span() const {
        if (kind == GapKind::run_recurrence) return order;
        if (kind == GapKind::explicit_table && tail->kind == TailRule::Kind::run_recurrence)
            return tail->order;
        return 1;
    }

    Int closed_gap(std::uint64_t i) const {
        switch (kind) {
            case GapKind::polynomial_g:
                return int_pow(Int(i), k) - int_pow(Int(i) - 1, k);
            case GapKind::exponential_g:
                if (i == 1) return 1;
                return int_pow(Int(k), static_cast<unsigned>(i - 1)) -
                       int_pow(Int(k), static_cast<unsigned>(i - 2));
            case GapKind::linear_gap:
                return c * Int(i) + d;
            case GapKind::periodic_run:
                return b;
            default:
                throw std::logic_error("closed_gap on table-driven kind");
        }
    }

    void ensure_gaps(std::uint64_t upto) const {  // caller holds mu
        if (!table_driven()) return;
        if (gaps.empty()) {
            if (kind == GapKind::explicit_table) {
                gaps = table;
            } else {
                gaps.reserve(seed_runs.size());
                for (const Int& r : seed_runs) gaps.push_back(r + 1);
            }
        }
        while (gaps.size() < upto) {
            const std::size_t i = gaps.size() + 1;  // 1-based index being produced
            Int next;
            if (kind == GapKind::run_recurrence) {
                // runs: n_u = n_(u-a) + n_(u-a+1) + 1  =>  g(i) = g(i-a) + g(i-a+1)
                next = gaps[i - 1 - order] + gaps[i - order];
            } else {
                switch (tail->kind) {
                    case TailRule::Kind::linear_gap:
                        next = tail->c * Int(i) + tail->d;
                        break;
                    case TailRule::Kind::sum_prev_two:
                        next = gaps[i - 2] + gaps[i - 3];
                        break;
                    case TailRule::Kind::run_recurrence:
                        next = gaps[i - 1 - tail->order] + gaps[i - tail->order];
                        break;
                    case TailRule::Kind::constant:
                        next = tail->value ? *tail->value : table.back();
                        break;
                }
            }
            if (next < 1)
                throw spec_error("tail produces a non-positive gap at index " + std::to_string(i));
            gaps.push_back(std::move(next));
        }
    }

    Int gap_unlocked(std::uint64_t i) const {  // caller holds mu for table kinds
        if (!table_driven()) return closed_gap(i);
        ensure_gaps(i);
        return gaps[i - 1];
    }
};

GapKind GapSpec::kind() const { return state_->kind; }
Regularity GapSpec::declared_class() const { return state_->declared; }

Int GapSpec::gap(std::uint64_t i) const {
    if (i == 0) throw spec_error("gap index must be >= 1");
    if (!state_->table_driven()) return state_->closed_gap(i);
    std::lock_guard<std::mutex> lock(state_->mu);
    return state_->gap_unlocked(i);
}

Int GapSpec::one_distribution(std::uint64_t i) const {
    std::lock_guard<std::mutex> lock(state_->mu);
    auto& sums = state_->sums;
    if (sums.empty()) sums.push_back(0);
    while (sums.size() <= i)
        sums.push_back(sums.back() + state_->gap_unlocked(sums.size()));
    return sums[i];
}

std::uint64_t GapSpec::listed_length() const { return state_->listed_len(); }

bool GapSpec::bounded() const {
    if (state_->kind == GapKind::periodic_run) return true;
    if (state_->kind == GapKind::explicit_table &&
        state_->tail->kind == TailRule::Kind::constant)
        return true;
    return false;
}

Int GapSpec::min_gap_beyond(std::uint64_t pos) const {
    switch (state_->kind) {
        case GapKind::polynomial_g:
        case GapKind::linear_gap:
        case GapKind::exponential_g:
            // non-decreasing rules: the infimum sits at the first index
            return gap(pos + 1);
        case GapKind::periodic_run:
            return state_->b;
        default:
            break;
    }
    // Table-driven: scan the rest of the listed part plus one recurrence
    // window. Past that window every value has a smaller predecessor inside
    // it (each stride-a subsequence of a run recurrence is strictly
    // increasing; the other tails are non-decreasing past the table).
    const std::uint64_t L = state_->listed_len();
    const std::uint64_t hi = std::max<std::uint64_t>(pos, L) + state_->tail_span();
    Int best = gap(pos + 1);
    for (std::uint64_t i = pos + 2; i <= hi; ++i) best = std::min(best, gap(i));
    return best;
}

std::optional<std::uint64_t> GapSpec::all_gaps_exceed_after(const Int& x) const {
    if (bounded()) {
        const Int floor_forever =
            state_->kind == GapKind::periodic_run
                ? state_->b
                : (state_->tail->value ? *state_->tail->value : state_->table.back());
        if (floor_forever <= x) return std::nullopt;
    }
    if (min_gap_beyond(0) > x) return 1;
    std::uint64_t lo = 0, hi = 1;  // min_gap_beyond(lo) <= x
    while (min_gap_beyond(hi) <= x) {
        lo = hi;
        if (hi > (std::uint64_t{1} << 40))
            throw resource_guard_error("gap growth too slow to certify a horizon");
        hi *= 2;
    }
    while (hi - lo > 1) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        (min_gap_beyond(mid) <= x ? lo : hi) = mid;
    }
    return hi + 1;
}

bool GapSpec::gap_increasing_eligible() const {
    if (state_->declared == Regularity::strictly_increasing) return true;
    // Benign leading tie: g(1) == g(2) and strict growth from the second gap
    // on, so the gaps between actual ones are strictly increasing.
    if (gap(1) != gap(2)) return false;
    const std::uint64_t h =
        std::max<std::uint64_t>(64, state_->listed_len() + 2 * state_->tail_span() + 4);
    Int prev = gap(2);
    for (std::uint64_t i = 3; i <= h; ++i) {
        Int cur = gap(i);
        if (cur <= prev) return false;
        prev = std::move(cur);
    }
    return true;
}

ClassReport classify(const GapSpec& spec, std::uint64_t horizon) {
    if (horizon < 2) throw spec_error("classify horizon must be >= 2");
    ClassReport rep;
    rep.horizon = horizon;
    rep.declared = spec.declared_class();
    rep.bounded = spec.bounded();
    rep.strictly_increasing = rep.injective = rep.non_decreasing = rep.blockwise_injective = true;

    std::map<Int, std::uint64_t> last_seen;
    Int prev;
    for (std::uint64_t i = 1; i <= horizon; ++i) {
        Int cur = spec.gap(i);
        if (cur < 1) throw spec_error("gap below 1 at index " + std::to_string(i));
        if (i > 1) {
            if (cur <= prev) rep.strictly_increasing = false;
            if (cur < prev) rep.non_decreasing = false;
        }
        auto it = last_seen.find(cur);
        if (it != last_seen.end()) {
            rep.injective = false;
            if (it->second != i - 1) rep.blockwise_injective = false;
        }
        last_seen[cur] = i;
        prev = std::move(cur);
    }

    bool ok = true;
    switch (rep.declared) {
        case Regularity::strictly_increasing: ok = rep.strictly_increasing; break;
        case Regularity::injective: ok = rep.injective; break;
        case Regularity::non_decreasing: ok = rep.non_decreasing; break;
        case Regularity::blockwise_injective: ok = rep.blockwise_injective; break;
        case Regularity::none: break;
    }
    if (!ok)
        throw class_error("declared class " + to_string(rep.declared) +
                          " violated within horizon " + std::to_string(horizon));
    return rep;
}

namespace {

Regularity infer_declared(const GapSpec& spec, std::uint64_t horizon) {
    ClassReport rep = classify(spec, horizon);
    if (rep.strictly_increasing) return Regularity::strictly_increasing;
    if (rep.injective) return Regularity::injective;
    if (rep.non_decreasing) return Regularity::non_decreasing;
    if (rep.blockwise_injective) return Regularity::blockwise_injective;
    return Regularity::none;
}

}  // namespace

GapSpec GapSpec::polynomial_g(unsigned k) {
    if (k < 2) throw spec_error("polynomial_G requires k >= 2");
    GapSpec s;
    s.state_ = std::make_shared<State>();
    s.state_->kind = GapKind::polynomial_g;
    s.state_->k = k;
    s.state_->declared = Regularity::strictly_increasing;
    return s;
}

GapSpec GapSpec::exponential_g(unsigned k) {
    if (k < 2) throw spec_error("exponential_G requires k >= 2");
    GapSpec s;
    s.state_ = std::make_shared<State>();
    s.state_->kind = GapKind::exponential_g;
    s.state_->k = k;
    // k == 2 ties g(1) == g(2) == 1; the sequence is still non-decreasing and
    // strictly increasing from the second gap on.
    s.state_->declared = k == 2 ? Regularity::non_decreasing : Regularity::strictly_increasing;
    return s;
}

GapSpec GapSpec::linear(Int c, Int d) {
    if (c < 1 || c + d < 1) throw spec_error("linear_gap requires c >= 1 and c + d >= 1");
    GapSpec s;
    s.state_ = std::make_shared<State>();
    s.state_->kind = GapKind::linear_gap;
    s.state_->c = std::move(c);
    s.state_->d = std::move(d);
    s.state_->declared = Regularity::strictly_increasing;
    return s;
}

GapSpec GapSpec::periodic_run(Int b) {
    if (b < 1) throw spec_error("periodic_run requires b >= 1");
    GapSpec s;
    s.state_ = std::make_shared<State>();
    s.state_->kind = GapKind::periodic_run;
    s.state_->b = std::move(b);
    s.state_->declared = Regularity::non_decreasing;
    return s;
}

GapSpec GapSpec::explicit_table(std::vector<Int> gaps, TailRule tail,
                                std::optional<Regularity> declared) {
    if (gaps.empty()) throw spec_error("explicit_table requires at least one gap");
    for (std::size_t i = 0; i < gaps.size(); ++i)
        if (gaps[i] < 1) throw spec_error("gap " + std::to_string(i + 1) + " is below 1");
    switch (tail.kind) {
        case TailRule::Kind::linear_gap:
            if (tail.c < 1) throw spec_error("linear tail requires c >= 1");
            if (tail.c * Int(gaps.size() + 1) + tail.d < 1)
                throw spec_error("linear tail starts below 1");
            break;
        case TailRule::Kind::sum_prev_two:
            if (gaps.size() < 2) throw spec_error("sum_prev_two tail needs two listed gaps");
            break;
        case TailRule::Kind::run_recurrence:
            if (tail.order < 2) throw spec_error("run_recurrence tail requires order >= 2");
            if (gaps.size() < tail.order + 1)
                throw spec_error("run_recurrence tail needs order + 1 listed gaps");
            break;
        case TailRule::Kind::constant:
            if (tail.value && *tail.value < 1) throw spec_error("constant tail below 1");
            break;
    }
    GapSpec s;
    s.state_ = std::make_shared<State>();
    s.state_->kind = GapKind::explicit_table;
    s.state_->table = std::move(gaps);
    s.state_->tail = std::move(tail);
    const std::uint64_t spot =
        std::max<std::uint64_t>(64, s.state_->table.size() + 2 * s.state_->tail_span() + 4);
    if (declared) {
        s.state_->declared = *declared;
        classify(s, spot);  // spot-verify; trusted beyond the horizon
    } else {
        s.state_->declared = infer_declared(s, spot);
    }
    return s;
}

GapSpec GapSpec::run_recurrence(std::size_t order, std::vector<Int> seed_runs,
                                std::optional<Regularity> declared) {
    if (order < 2) throw spec_error("run_recurrence requires order >= 2");
    if (seed_runs.size() != 2 * order)
        throw spec_error("run_recurrence requires exactly 2 * order seed runs");
    for (const Int& r : seed_runs)
        if (r < 0) throw spec_error("seed runs must be non-negative");
    GapSpec s;
    s.state_ = std::make_shared<State>();
    s.state_->kind = GapKind::run_recurrence;
    s.state_->order = order;
    s.state_->seed_runs = std::move(seed_runs);
    const std::uint64_t spot = std::max<std::uint64_t>(64, 4 * order + 8);
    if (declared) {
        s.state_->declared = *declared;
        classify(s, spot);
    } else {
        s.state_->declared = infer_declared(s, spot);
    }
    return s;
}

namespace {

nlohmann::json int_to_json(const Int& v) {
    if (v >= Int(INT64_MIN) && v <= Int(INT64_MAX))
        return static_cast<std::int64_t>(v);
    return v.str();
}

Int int_from_json(const nlohmann::json& j, const std::string& field) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw spec_error("field '" + field + "' must be an integer");
}

void reject_unknown(const nlohmann::json& obj, std::initializer_list<const char*> allowed,
                    const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* a : allowed)
            if (it.key() == a) { ok = true; break; }
        if (!ok) throw spec_error("unknown field '" + it.key() + "' in " + where);
    }
}

Regularity regularity_from_string(const std::string& s) {
    if (s == "strictly_increasing") return Regularity::strictly_increasing;
    if (s == "injective") return Regularity::injective;
    if (s == "non_decreasing") return Regularity::non_decreasing;
    if (s == "blockwise_injective") return Regularity::blockwise_injective;
    if (s == "none") return Regularity::none;
    throw spec_error("unknown declared_class '" + s + "'");
}

}  // namespace

nlohmann::json GapSpec::to_json() const {
    nlohmann::json j;
    j["kind"] = to_string(state_->kind);
    switch (state_->kind) {
        case GapKind::polynomial_g:
        case GapKind::exponential_g:
            j["k"] = state_->k;
            break;
        case GapKind::linear_gap:
            j["c"] = int_to_json(state_->c);
            j["d"] = int_to_json(state_->d);
            break;
        case GapKind::periodic_run:
            j["b"] = int_to_json(state_->b);
            break;
        case GapKind::explicit_table: {
            nlohmann::json gaps = nlohmann::json::array();
            for (const Int& g : state_->table) gaps.push_back(int_to_json(g));
            j["gaps"] = std::move(gaps);
            nlohmann::json tail;
            switch (state_->tail->kind) {
                case TailRule::Kind::linear_gap:
                    tail["rule"] = "linear_gap";
                    tail["c"] = int_to_json(state_->tail->c);
                    tail["d"] = int_to_json(state_->tail->d);
                    break;
                case TailRule::Kind::sum_prev_two:
                    tail["rule"] = "sum_prev_two";
                    break;
                case TailRule::Kind::run_recurrence:
                    tail["rule"] = "run_recurrence";
                    tail["a"] = state_->tail->order;
                    break;
                case TailRule::Kind::constant:
                    tail["rule"] = "constant";
                    if (state_->tail->value) tail["value"] = int_to_json(*state_->tail->value);
                    break;
            }
            j["tail"] = std::move(tail);
            j["declared_class"] = to_string(state_->declared);
            break;
        }
        case GapKind::run_recurrence: {
            j["a"] = state_->order;
            nlohmann::json runs = nlohmann::json::array();
            for (const Int& r : state_->seed_runs) runs.push_back(int_to_json(r));
            j["seed_runs"] = std::move(runs);
            j["declared_class"] = to_string(state_->declared);
            break;
        }
    }
    return j;
}

GapSpec GapSpec::from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw spec_error("spec must be a JSON object");
    if (!j.contains("kind") || !j["kind"].is_string())
        throw spec_error("spec requires a string 'kind'");
    const std::string kind = j["kind"].get<std::string>();

    auto get_declared = [&]() -> std::optional<Regularity> {
        if (!j.contains("declared_class")) return std::nullopt;
        if (!j["declared_class"].is_string()) throw spec_error("declared_class must be a string");
        return regularity_from_string(j["declared_class"].get<std::string>());
    };

    if (kind == "polynomial_G" || kind == "exponential_G") {
        reject_unknown(j, {"kind", "k"}, kind);
        if (!j.contains("k")) throw spec_error(kind + " requires 'k'");
        const Int k = int_from_json(j["k"], "k");
        if (k < 2 || k > 64) throw spec_error(kind + " requires 2 <= k <= 64");
        return kind == "polynomial_G" ? polynomial_g(static_cast<unsigned>(k))
                                      : exponential_g(static_cast<unsigned>(k));
    }
    if (kind == "linear_gap") {
        reject_unknown(j, {"kind", "c", "d"}, kind);
        if (!j.contains("c") || !j.contains("d")) throw spec_error("linear_gap requires 'c' and 'd'");
        return linear(int_from_json(j["c"], "c"), int_from_json(j["d"], "d"));
    }
    if (kind == "periodic_run") {
        reject_unknown(j, {"kind", "b"}, kind);
        if (!j.contains("b")) throw spec_error("periodic_run requires 'b'");
        return periodic_run(int_from_json(j["b"], "b"));
    }
    if (kind == "explicit_table") {
        reject_unknown(j, {"kind", "gaps", "tail", "declared_class"}, kind);
        if (!j.contains("gaps") || !j["gaps"].is_array())
            throw spec_error("explicit_table requires a 'gaps' array");
        if (!j.contains("tail") || !j["tail"].is_object())
            throw spec_error("explicit_table requires a 'tail' object");
        std::vector<Int> gaps;
        for (const auto& g : j["gaps"]) gaps.push_back(int_from_json(g, "gaps[]"));
        const nlohmann::json& jt = j["tail"];
        if (!jt.contains("rule") || !jt["rule"].is_string())
            throw spec_error("tail requires a string 'rule'");
        const std::string rule = jt["rule"].get<std::string>();
        TailRule tail;
        if (rule == "linear_gap") {
            reject_unknown(jt, {"rule", "c", "d"}, "tail");
            if (!jt.contains("c") || !jt.contains("d"))
                throw spec_error("linear_gap tail requires 'c' and 'd'");
            tail = TailRule::linear(int_from_json(jt["c"], "c"), int_from_json(jt["d"], "d"));
        } else if (rule == "sum_prev_two") {
            reject_unknown(jt, {"rule"}, "tail");
            tail = TailRule::sum_prev_two();
        } else if (rule == "run_recurrence") {
            reject_unknown(jt, {"rule", "a"}, "tail");
            if (!jt.contains("a")) throw spec_error("run_recurrence tail requires 'a'");
            tail = TailRule::run_rec(to_u64(int_from_json(jt["a"], "a"), "a"));
        } else if (rule == "constant") {
            reject_unknown(jt, {"rule", "value"}, "tail");
            std::optional<Int> v;
            if (jt.contains("value")) v = int_from_json(jt["value"], "value");
            tail = TailRule::constant(std::move(v));
        } else {
            throw spec_error("unknown tail rule '" + rule + "'");
        }
        return explicit_table(std::move(gaps), std::move(tail), get_declared());
    }
    if (kind == "run_recurrence") {
        reject_unknown(j, {"kind", "a", "seed_runs", "declared_class"}, kind);
        if (!j.contains("a") || !j.contains("seed_runs") || !j["seed_runs"].is_array())
            throw spec_error("run_recurrence requires 'a' and a 'seed_runs' array");
        std::vector<Int> runs;
        for (const auto& r : j["seed_runs"]) runs.push_back(int_from_json(r, "seed_runs[]"));
        return run_recurrence(to_u64(int_from_json(j["a"], "a"), "a"), std::move(runs),
                              get_declared());
    }
    throw spec_error("unknown spec kind '" + kind + "'");
}

GapSpec GapSpec::from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw spec_error(std::string("invalid spec JSON: ") + e.what());
    }
    return from_json(j);
}

std::string GapSpec::digest() const {
    const std::string dump = to_json().dump();
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (unsigned char c : dump) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::uint64_t max_prefix_bits() {
    if (const char* env = std::getenv("GAPWORDS_MAX_PREFIX_BITS")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 100'000'000ull;
}

BinaryPrefix word_prefix(const GapSpec& spec, std::uint64_t length) {
    if (length < 1) throw spec_error("prefix length must be >= 1");
    if (length > max_prefix_bits())
        throw resource_guard_error("prefix of " + std::to_string(length) +
                                   " bits exceeds the configured cap of " +
                                   std::to_string(max_prefix_bits()));
    BinaryPrefix p;
    p.bits.assign(length, '0');
    Int pos = 0;
    for (std::uint64_t i = 1;; ++i) {
        const Int g = spec.gap(i);
        pos += g;
        if (pos > length) break;
        p.bits[to_u64(pos) - 1] = '1';
        p.runs.push_back(to_u64(g - 1, "run length"));
        ++p.ones;
    }
    const Int last_one = spec.one_distribution(p.ones);
    p.trailing_zeros = length - to_u64(last_one, "one position");
    return p;
}

BinaryPrefix prefix_from_bits(std::string bits) {
    BinaryPrefix p;
    p.bits = std::move(bits);
    std::uint64_t run = 0;
    for (char c : p.bits) {
        if (c == '1') {
            p.runs.push_back(run);
            ++p.ones;
            run = 0;
        } else if (c == '0') {
            ++run;
        } else {
            throw spec_error("prefix bits must be '0' or '1'");
        }
    }
    p.trailing_zeros = run;
    return p;
}

}  // namespace gapwords
