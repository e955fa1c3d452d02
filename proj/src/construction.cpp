#include "gapwords/construction.hpp"

#include <algorithm>
#include <sstream>

#include "gapwords/errors.hpp"
#include "gapwords/oracle.hpp"

namespace gapwords {

namespace {

// Pivot and shaded area of a part list inside the (n + 1) x rows rectangle.
void fill_diagram(PrefixDiagram& d) {
    const Int width(d.window + 1);
    d.pivot = 0;
    for (std::size_t l = 1; l < d.parts.size(); ++l) {
        if (d.parts[l - 1] < width - d.parts[l])
            d.pivot = l;
        else
            break;  // the inequality is monotone in the row index
    }
    d.shaded_area = 0;
    for (std::size_t i = 0; i < d.pivot; ++i) d.shaded_area += d.parts[i];
    for (std::size_t i = d.pivot + 1; i < d.parts.size(); ++i)
        d.shaded_area += width - d.parts[i];
    d.complexity_next = Int(d.window) + 2 + d.shaded_area;
}

}  // namespace

PrefixDiagram build_diagram(const GapSpec& spec, std::uint64_t n) {
    if (n < 1) throw spec_error("window must be >= 1");
    if (spec.declared_class() != Regularity::strictly_increasing)
        throw class_error("diagrams need a strictly increasing gap declaration, got " +
                          to_string(spec.declared_class()));
    PrefixDiagram d;
    d.window = n;
    for (std::uint64_t i = 1;; ++i) {
        const Int g = spec.gap(i);
        if (g > n) break;
        d.parts.push_back(g);
    }
    if (Int(n) < spec.gap(2)) {
        // window shorter than the second run: f(n+1) = n + 2 outright
        d.trivial = true;
        d.pivot = 0;
        d.shaded_area = 0;
        d.complexity_next = Int(n) + 2;
        return d;
    }
    fill_diagram(d);
    return d;
}

std::string render_diagram(const PrefixDiagram& d, DiagramFormat format) {
    const std::uint64_t cols = d.columns();
    if (format == DiagramFormat::ascii) {
        std::ostringstream out;
        out << "w=" << cols << " h=" << d.rows() << " pivot=" << d.pivot
            << " shaded=" << d.shaded_area << "\n";
        for (std::size_t i = 0; i < d.parts.size(); ++i) {
            const std::uint64_t part = to_u64(d.parts[i], "part");
            const bool shade_part = i < d.pivot;
            const bool shade_comp = i > d.pivot;
            out << std::string(part, shade_part ? '#' : '.') << '|'
                << std::string(cols - part, shade_comp ? '#' : '.') << "\n";
        }
        return out.str();
    }

    // svg, 16 px cells, integer coordinates only
    const int cs = 16;
    std::ostringstream out;
    const std::uint64_t rows = std::max<std::uint64_t>(d.rows(), 1);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << cols * cs << "\" height=\""
        << rows * cs << "\" viewBox=\"0 0 " << cols * cs << " " << rows * cs << "\">\n";
    out << "<style>.p{fill:#dbe4ff;stroke:#8892a6;}"
           ".ps{fill:#5b8def;stroke:#2f3e56;}"
           ".c{fill:#ffffff;stroke:#8892a6;}"
           ".cs{fill:#f2a154;stroke:#6b4a1b;}</style>\n";
    for (std::size_t i = 0; i < d.parts.size(); ++i) {
        const std::uint64_t part = to_u64(d.parts[i], "part");
        for (std::uint64_t x = 0; x < cols; ++x) {
            const bool in_part = x < part;
            const char* cls = in_part ? (i < d.pivot ? "ps" : "p")
                                      : (i > d.pivot ? "cs" : "c");
            out << "<rect x=\"" << x * cs << "\" y=\"" << i * cs << "\" width=\"" << cs
                << "\" height=\"" << cs << "\" class=\"" << cls << "\"/>\n";
        }
    }
    if (!d.parts.empty()) {
        out << "<polyline fill=\"none\" stroke=\"#000000\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < d.parts.size(); ++i) {
            const std::uint64_t x = to_u64(d.parts[i], "part") * cs;
            out << x << "," << i * cs << " " << x << "," << (i + 1) * cs;
            if (i + 1 < d.parts.size()) {
                const std::uint64_t nx = to_u64(d.parts[i + 1], "part") * cs;
                out << " " << nx << "," << (i + 1) * cs;
            }
            if (i + 1 < d.parts.size()) out << " ";
        }
        out << "\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

namespace {

Int seed_diagram_complexity(const std::vector<Int>& parts, const Int& width) {
    PrefixDiagram d;
    d.window = to_u64(width - 1, "width");
    d.parts = parts;
    fill_diagram(d);
    return d.complexity_next;
}

}  // namespace

AffineConstruction build_affine_word(std::int64_t a, std::int64_t b) {
    if (a < 2)
        throw spec_error("ultimately affine complexity with slope " + std::to_string(a) +
                         " is not achievable with strictly increasing gaps");
    const Int A(a), B(b);

    // smallest admissible seed width: k >= 2a + 4 and k + a^2 < a k + b
    Int k0 = 2 * A + 4;
    const Int strict = floor_div(A * A - B, A - 1) + 1;  // least k with k (a-1) > a^2 - b
    k0 = std::max(k0, strict);

    std::ostringstream log;
    Int pairs = -1;
    for (int attempt = 0; attempt < 8; ++attempt) {
        // seed parts 1..a, floor(k0 / 2), k0 - a + 1 .. k0 - 1
        std::vector<Int> parts;
        for (Int v = 1; v <= A; ++v) parts.push_back(v);
        parts.push_back(k0 / 2);
        for (Int v = k0 - A + 1; v <= k0 - 1; ++v) parts.push_back(v);
        if (!(A < k0 / 2 && k0 / 2 < k0 - A + 1))
            throw std::logic_error("seed parts not strictly increasing");

        if (pairs < 0) {
            const Int seed_f = seed_diagram_complexity(parts, k0);
            pairs = A * k0 + B - seed_f;  // each widen-and-grow pair adds 2a + 1
            if (pairs < 0) throw std::logic_error("seed width misses the target complexity");
            log << "seed width " << k0 << ", seed complexity " << seed_f << ", " << pairs
                << " step pairs";
        }

        const Int K = k0 + 2 * pairs;
        std::vector<Int> runs;
        runs.reserve(parts.size());
        for (const Int& p : parts) runs.push_back(p + pairs - 1);
        GapSpec spec = GapSpec::run_recurrence(static_cast<std::size_t>(a), runs,
                                               Regularity::strictly_increasing);

        const std::uint64_t Ku = to_u64(K, "threshold");
        const FactorCensus at_K = oracle_complexity(spec, Ku);
        const FactorCensus before_K = oracle_complexity(spec, Ku - 1);
        const Int want = A * K + B;
        if (at_K.distinct_count == want && before_K.special_count == A) {
            log << "; verified f(" << K << ") = " << want << " and s(" << K - 1 << ") = " << A;
            return AffineConstruction{std::move(spec), Ku, k0, pairs, log.str()};
        }
        // Off-target: every extra pair moves f(K) - (a K + b) by one, so
        // correct the pair count and retry against the brute-force count.
        const Int drift = at_K.distinct_count - want;
        log << "; drift " << drift << " at " << pairs << " pairs, adjusting";
        pairs -= drift;
        if (pairs < 0) break;
    }
    throw std::runtime_error("affine construction failed to meet the brute-force target");
}

GapSpec build_blockwise_affine(std::int64_t a, std::int64_t b) {
    if (a >= 2) return build_affine_word(a, b).spec;
    if (a == 0 && b >= 2) return GapSpec::periodic_run(b);
    if (a == 0 && b == 1) return GapSpec::periodic_run(1);  // the one-letter word
    throw spec_error("no blockwise-injective word has ultimately affine complexity " +
                     std::to_string(a) + " n + " + std::to_string(b));
}

}  // namespace gapwords
