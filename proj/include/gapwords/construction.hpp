#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gapwords/gapspec.hpp"

namespace gapwords {

// Partition view of a word prefix: for a window length n, the parts are the
// gap values (run length + 1) that are at most n, drawn inside an
// (n + 1) x rows rectangle, longest part at the bottom. f(n+1) equals n + 2
// plus the shaded area: the parts above the pivot row plus the complements
// below it.
struct PrefixDiagram {
    std::uint64_t window = 0;   // n
    std::vector<Int> parts;     // increasing; rows = parts.size()
    std::uint64_t pivot = 0;    // highest row whose predecessor part is shorter
                                // than the row's own complement
    Int shaded_area = 0;
    bool trivial = false;       // n at most the first run: f(n+1) = n + 2
    Int complexity_next = 0;    // f(n+1)

    std::uint64_t rows() const { return parts.size(); }
    std::uint64_t columns() const { return window + 1; }
};

PrefixDiagram build_diagram(const GapSpec& spec, std::uint64_t n);

enum class DiagramFormat { ascii, svg };

// ascii: '#' shaded, '.' unshaded, '|' the boundary between a part and its
// complement, one row per line, top row first. svg: one rect per cell with
// two fill classes and a polyline boundary; byte-deterministic.
std::string render_diagram(const PrefixDiagram& diagram, DiagramFormat format);

// A gap rule whose word has complexity a n + b for every n >= threshold,
// built by growing a seed partition until its diagram complexity meets the
// target and then extending the runs with the order-a sum recurrence.
struct AffineConstruction {
    GapSpec spec;
    std::uint64_t threshold = 0;  // f(n) = a n + b holds from here on
    Int seed_width = 0;
    Int step_pairs = 0;
    std::string log;
};

AffineConstruction build_affine_word(std::int64_t a, std::int64_t b);

// Blockwise-injective version: a >= 2 delegates to build_affine_word;
// a == 0, b >= 2 is the periodic word (0^(b-1) 1)^inf; a == 0, b == 1 the
// one-letter word. Everything else has no witness.
GapSpec build_blockwise_affine(std::int64_t a, std::int64_t b);

}  // namespace gapwords
