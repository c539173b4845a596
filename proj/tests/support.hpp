#pragma once

#include "finf/braid.hpp"
#include "finf/rings.hpp"

#include <random>

namespace finf::testing {

// Random word on n strands whose closure is a knot, by rejection. An n-cycle needs
// len = n - 1 mod 2, so an odd gap grows the length by one.
inline BraidWord random_knot_word(std::mt19937& rng, int n, int len) {
    if ((len - n + 1) % 2) ++len;
    std::uniform_int_distribution<int> gen(1, n - 1), sign(0, 1);
    for (;;) {
        BraidWord b{n, {}};
        for (int i = 0; i < len; ++i) b.letters.push_back(gen(rng) * (sign(rng) ? 1 : -1));
        if (b.closure_is_knot()) return b;
    }
}

inline BivariateLaurent random_bivariate(std::mt19937& rng, int terms) {
    std::uniform_int_distribution<int> e(-4, 4), c(-5, 5);
    BivariateLaurent p;
    for (int i = 0; i < terms; ++i) p += BivariateLaurent::monomial({e(rng), e(rng)}, Int(c(rng)));
    return p;
}

}  // namespace finf::testing
