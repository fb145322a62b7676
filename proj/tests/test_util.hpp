#pragma once

#include "squint/quiver.hpp"
#include "squint/ring.hpp"

#include <random>

namespace squint::testutil {

// one vertex, one loop edge
inline Setup loop_setup(int even, int odd, int b = 0) {
    Setup s;
    s.quiver.add_vertex("a");
    s.quiver.add_edge("e", "a", "a");
    s.alpha = {SDim{even, odd}};
    s.parity = {static_cast<std::uint8_t>(b)};
    return s;
}

// a --e1--> b, a --e2--> b
inline Setup kronecker_setup(SDim da, SDim db, int ba = 0, int bb = 0) {
    Setup s;
    s.quiver.add_vertex("a");
    s.quiver.add_vertex("b");
    s.quiver.add_edge("e1", "a", "b");
    s.quiver.add_edge("e2", "a", "b");
    s.alpha = {da, db};
    s.parity = {static_cast<std::uint8_t>(ba), static_cast<std::uint8_t>(bb)};
    return s;
}

// a --e1--> b, b --e2--> a
inline Setup two_cycle_setup(SDim da, SDim db, int ba = 0, int bb = 0) {
    Setup s;
    s.quiver.add_vertex("a");
    s.quiver.add_vertex("b");
    s.quiver.add_edge("e1", "a", "b");
    s.quiver.add_edge("e2", "b", "a");
    s.alpha = {da, db};
    s.parity = {static_cast<std::uint8_t>(ba), static_cast<std::uint8_t>(bb)};
    return s;
}

// a -> b -> c -> a
inline Setup three_cycle_setup(SDim da, SDim db, SDim dc, int ba = 0, int bb = 0, int bc = 0) {
    Setup s;
    s.quiver.add_vertex("a");
    s.quiver.add_vertex("b");
    s.quiver.add_vertex("c");
    s.quiver.add_edge("e1", "a", "b");
    s.quiver.add_edge("e2", "b", "c");
    s.quiver.add_edge("e3", "c", "a");
    s.alpha = {da, db, dc};
    s.parity = {static_cast<std::uint8_t>(ba), static_cast<std::uint8_t>(bb),
                static_cast<std::uint8_t>(bc)};
    return s;
}

// a -> b -> c (path quiver)
inline Setup a3_setup(SDim da, SDim db, SDim dc) {
    Setup s;
    s.quiver.add_vertex("a");
    s.quiver.add_vertex("b");
    s.quiver.add_vertex("c");
    s.quiver.add_edge("e1", "a", "b");
    s.quiver.add_edge("e2", "b", "c");
    s.alpha = {da, db, dc};
    s.parity = {0, 0, 0};
    return s;
}

// deterministic random homogeneous polynomial: sum of `terms` random
// canonical monomials of total degree <= max_deg with coefficients in [-3,3]
inline Polynomial random_polynomial(const RingPtr& ctx, std::mt19937_64& rng, int terms,
                                    int max_deg) {
    std::uniform_int_distribution<int> var_dist(0, ctx->var_count() - 1);
    std::uniform_int_distribution<int> deg_dist(0, max_deg);
    std::uniform_int_distribution<int> coef_dist(-3, 3);
    Polynomial f = Polynomial::zero(ctx);
    for (int t = 0; t < terms; ++t) {
        int deg = deg_dist(rng);
        Polynomial m = Polynomial::constant(ctx, coef_dist(rng));
        for (int i = 0; i < deg; ++i) m = m * Polynomial::variable(ctx, var_dist(rng));
        f += m;
    }
    return f;
}

// random homogeneous polynomial of exact parity (drops terms of wrong parity)
inline Polynomial random_homogeneous(const RingPtr& ctx, std::mt19937_64& rng, int terms,
                                     int max_deg, std::uint8_t parity) {
    Polynomial f = random_polynomial(ctx, rng, terms, max_deg);
    Polynomial out = Polynomial::zero(ctx);
    for (const auto& [m, c] : f.terms())
        if (monomial_parity(*ctx, m) == parity) out += Polynomial::monomial(ctx, m, c);
    return out;
}

} // namespace squint::testutil
