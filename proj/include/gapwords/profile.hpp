#pragma once

#include <cstdint>
#include <vector>

#include "gapwords/bigint.hpp"
#include "gapwords/errors.hpp"

namespace gapwords {

// A finite complexity table f(1..N) with derived first and second
// differences.
struct ComplexityProfile {
    std::vector<Int> f;  // f[k] holds the value at argument k + 1

    std::uint64_t max_n() const { return f.size(); }

    const Int& at(std::uint64_t n) const {
        if (n < 1 || n > f.size()) throw spec_error("profile index out of range");
        return f[n - 1];
    }

    // f(n+1) - f(n); needs n + 1 <= N.
    Int delta(std::uint64_t n) const { return at(n + 1) - at(n); }

    // delta(n+1) - delta(n); needs n + 2 <= N.
    Int delta2(std::uint64_t n) const { return at(n + 2) - 2 * at(n + 1) + at(n); }

    // Largest n whose second difference the table can evaluate.
    std::uint64_t max_delta2_n() const { return f.size() >= 3 ? f.size() - 2 : 0; }
};

}  // namespace gapwords
