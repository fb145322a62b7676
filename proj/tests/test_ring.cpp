#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "squint/ring.hpp"
#include "test_util.hpp"

#include <random>

using namespace squint;
using namespace squint::testutil;

namespace {
// loop with alpha = 1|1: x11, x22 even; x12, x21 odd
struct LoopRing {
    RingPtr ctx = RingContext::make(loop_setup(1, 1));
    Polynomial x11 = Polynomial::variable(ctx, ctx->var_index(0, 1, 1));
    Polynomial x12 = Polynomial::variable(ctx, ctx->var_index(0, 1, 2));
    Polynomial x21 = Polynomial::variable(ctx, ctx->var_index(0, 2, 1));
    Polynomial x22 = Polynomial::variable(ctx, ctx->var_index(0, 2, 2));
};
} // namespace

TEST_CASE("variable parities follow the generic-matrix rule") {
    LoopRing r;
    CHECK(*r.x11.parity() == 0);
    CHECK(*r.x22.parity() == 0);
    CHECK(*r.x12.parity() == 1);
    CHECK(*r.x21.parity() == 1);

    // parity vector twist flips every variable on a loop with b = 1
    RingPtr tctx = RingContext::make(loop_setup(1, 1, 1));
    for (int v = 0; v < tctx->var_count(); ++v)
        CHECK(tctx->var_parity(v) == RingContext::make(loop_setup(1, 1))->var_parity(v));

    // Kronecker twist at one endpoint flips all four parities of the edge
    RingPtr k0 = RingContext::make(kronecker_setup(SDim{1, 1}, SDim{1, 1}, 0, 0));
    RingPtr k1 = RingContext::make(kronecker_setup(SDim{1, 1}, SDim{1, 1}, 1, 0));
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            CHECK((k0->var_parity(k0->var_index(0, i, j)) ^ 1) ==
                  k1->var_parity(k1->var_index(0, i, j)));
}

TEST_CASE("odd variables anticommute and square to zero") {
    LoopRing r;
    CHECK(r.x12 * r.x21 == -(r.x21 * r.x12));
    CHECK((r.x12 * r.x12).is_zero());
    CHECK((r.x11 + r.x12) * (r.x11 - r.x12) == r.x11 * r.x11);
}

TEST_CASE("ring axioms on random elements") {
    LoopRing r;
    std::mt19937_64 rng(2024);
    for (int it = 0; it < 300; ++it) {
        Polynomial f = random_homogeneous(r.ctx, rng, 3, 3, static_cast<std::uint8_t>(it & 1));
        Polynomial g = random_homogeneous(r.ctx, rng, 3, 3, static_cast<std::uint8_t>((it >> 1) & 1));
        Polynomial h = random_polynomial(r.ctx, rng, 3, 3);
        // super-commutativity for homogeneous f, g
        Polynomial fg = f * g;
        Polynomial gf = g * f;
        if ((it & 1) && ((it >> 1) & 1))
            CHECK(fg == -gf);
        else
            CHECK(fg == gf);
        // associativity + distributivity
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
    }
}

TEST_CASE("multigrading is additive") {
    LoopRing r;
    std::mt19937_64 rng(99);
    for (int it = 0; it < 100; ++it) {
        Polynomial f = random_polynomial(r.ctx, rng, 2, 2);
        Polynomial g = random_polynomial(r.ctx, rng, 2, 2);
        for (const auto& [nf, cf] : f.components_by_multidegree())
            for (const auto& [ng, cg] : g.components_by_multidegree()) {
                Polynomial prod = cf * cg;
                if (prod.is_zero()) continue;
                MultiDegree expect(nf.size());
                for (std::size_t i = 0; i < nf.size(); ++i) expect[i] = nf[i] + ng[i];
                CHECK(*prod.multidegree() == expect);
            }
    }
}

TEST_CASE("derivations") {
    LoopRing r;
    SUBCASE("even d/dx on x^2") {
        std::map<int, Polynomial> images;
        images[r.ctx->var_index(0, 1, 1)] = Polynomial::constant(r.ctx, 1);
        Polynomial d = derivation_apply(images, 0, r.x11 * r.x11);
        CHECK(d == r.x11 * Rational(2));
    }
    SUBCASE("odd derivation with the displayed sign rule") {
        // D(u) = x, D(x) = 0 with u = x12, v = x21 odd, x = x11 even
        std::map<int, Polynomial> images;
        images[r.ctx->var_index(0, 1, 2)] = r.x11;
        Polynomial uv = r.x12 * r.x21;
        Polynomial d = derivation_apply(images, 1, uv);
        CHECK(d == r.x11 * r.x21);
        // linearity: same derivation on v*u = -u*v
        Polynomial vu = r.x21 * r.x12;
        CHECK(derivation_apply(images, 1, vu) == -(r.x11 * r.x21));
    }
    SUBCASE("parity-inconsistent image is rejected") {
        std::map<int, Polynomial> images;
        images[r.ctx->var_index(0, 1, 2)] = r.x11; // odd var -> even image
        CHECK_THROWS(derivation_apply(images, 0, r.x12));
    }
    SUBCASE("super-Leibniz on random homogeneous pairs") {
        std::mt19937_64 rng(5);
        for (int dp = 0; dp <= 1; ++dp) {
            // build a parity-dp derivation with consistent images on all vars
            std::map<int, Polynomial> images;
            for (int v = 0; v < r.ctx->var_count(); ++v) {
                std::uint8_t want = static_cast<std::uint8_t>((r.ctx->var_parity(v) + dp) & 1);
                images[v] = random_homogeneous(r.ctx, rng, 2, 2, want);
            }
            for (int it = 0; it < 150; ++it) {
                std::uint8_t pf = static_cast<std::uint8_t>(it & 1);
                Polynomial f = random_homogeneous(r.ctx, rng, 2, 2, pf);
                Polynomial g = random_polynomial(r.ctx, rng, 2, 2);
                Polynomial lhs = derivation_apply(images, dp, f * g);
                Polynomial rhs = derivation_apply(images, dp, f) * g +
                                 ((dp && pf) ? -(f * derivation_apply(images, dp, g))
                                             : f * derivation_apply(images, dp, g));
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("substitution is a parity-checked homomorphism") {
    LoopRing r;
    std::map<int, Polynomial> bad;
    bad[r.ctx->var_index(0, 1, 2)] = r.x11; // odd -> even
    CHECK_THROWS(substitute(r.x12, bad, r.ctx));

    std::map<int, Polynomial> swap_odd;
    swap_odd[r.ctx->var_index(0, 1, 2)] = r.x21;
    swap_odd[r.ctx->var_index(0, 2, 1)] = -r.x12;
    Polynomial f = r.x12 * r.x21;
    CHECK(substitute(f, swap_odd, r.ctx) == r.x21 * (-r.x12));
}

TEST_CASE("Grassmann evaluation") {
    LoopRing r;
    const int k = 2;
    SUBCASE("spec examples") {
        std::map<int, Grassmann> pt;
        pt[r.ctx->var_index(0, 1, 2)] = Grassmann::theta(k, 1);
        pt[r.ctx->var_index(0, 2, 1)] = Grassmann::theta(k, 2);
        Grassmann uv = evaluate_grassmann(r.x12 * r.x21, pt, k);
        CHECK(uv.coefficient(0b11) == 1);

        std::map<int, Grassmann> swapped;
        swapped[r.ctx->var_index(0, 1, 2)] = Grassmann::theta(k, 2);
        swapped[r.ctx->var_index(0, 2, 1)] = Grassmann::theta(k, 1);
        CHECK(evaluate_grassmann(r.x12 * r.x21, swapped, k).coefficient(0b11) == -1);

        std::map<int, Grassmann> sq;
        sq[r.ctx->var_index(0, 1, 1)] =
            Grassmann::constant(k, 1) + Grassmann::theta(k, 1) * Grassmann::theta(k, 2);
        Grassmann x2 = evaluate_grassmann(r.x11 * r.x11, sq, k);
        CHECK(x2.coefficient(0) == 1);
        CHECK(x2.coefficient(0b11) == 2);
    }
    SUBCASE("parity mismatch is an error") {
        std::map<int, Grassmann> pt;
        pt[r.ctx->var_index(0, 1, 2)] = Grassmann::constant(k, 1); // odd var, even value
        CHECK_THROWS(evaluate_grassmann(r.x12, pt, k));
    }
    SUBCASE("ring homomorphism on random pairs") {
        std::mt19937_64 rng(11);
        std::uniform_int_distribution<int> cd(-2, 2);
        const int kk = 4;
        for (int it = 0; it < 100; ++it) {
            std::map<int, Grassmann> pt;
            for (int v = 0; v < r.ctx->var_count(); ++v) {
                Grassmann g(kk);
                for (std::uint32_t mask = 0; mask < 16u; ++mask) {
                    int bits = __builtin_popcount(mask);
                    if ((bits & 1) != r.ctx->var_parity(v)) continue;
                    int c = cd(rng);
                    if (c) g += Grassmann::constant(kk, c) *
                                [&] {
                                    Grassmann t = Grassmann::constant(kk, 1);
                                    for (int b = 0; b < 4; ++b)
                                        if (mask & (1u << b)) t = t * Grassmann::theta(kk, b + 1);
                                    return t;
                                }();
                }
                pt[v] = g;
            }
            Polynomial f = random_polynomial(r.ctx, rng, 3, 2);
            Polynomial g = random_polynomial(r.ctx, rng, 3, 2);
            CHECK(evaluate_grassmann(f * g, pt, kk) ==
                  evaluate_grassmann(f, pt, kk) * evaluate_grassmann(g, pt, kk));
            CHECK(evaluate_grassmann(f + g, pt, kk) ==
                  evaluate_grassmann(f, pt, kk) + evaluate_grassmann(g, pt, kk));
        }
    }
}
