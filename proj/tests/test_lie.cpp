#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "squint/lie.hpp"
#include "squint/semi_invariants.hpp"
#include "test_util.hpp"

#include <random>

using namespace squint;
using namespace squint::testutil;

TEST_CASE("basis bookkeeping") {
    Setup s = loop_setup(2, 1);
    CHECK(lie_parity(s, {0, 1, 2}) == 0);
    CHECK(lie_parity(s, {0, 1, 3}) == 1);
    CHECK(supertrace_sign(s, {0, 1, 1}) == 1);
    CHECK(supertrace_sign(s, {0, 3, 3}) == -1);
    CHECK(supertrace_sign(s, {0, 1, 2}) == 0);

    CHECK(gl_basis(s, 0).size() == 9);
    auto sl = sl_basis(s, 0);
    CHECK(sl.size() == 8); // d^2 - 1
    // every sl combo has supertrace zero
    for (const LieCombo& g : sl) {
        int str = 0;
        for (const auto& [e, c] : g.terms) str += c * supertrace_sign(s, e);
        CHECK(str == 0);
    }
}

TEST_CASE("action on coordinates") {
    SUBCASE("head-side action is classical row scaling on the even Kronecker") {
        RingPtr ctx = RingContext::make(kronecker_setup(SDim{2, 0}, SDim{2, 0}));
        auto images = action_images(ctx, LieBasisElement{1, 1, 1});
        for (int j = 1; j <= 2; ++j) {
            auto it = images.find(ctx->var_index(0, 1, j));
            REQUIRE(it != images.end());
            CHECK(it->second == Polynomial::variable(ctx, ctx->var_index(0, 1, j)));
            CHECK(images.find(ctx->var_index(0, 2, j)) == images.end());
        }
    }
    SUBCASE("loop head and tail contributions cancel on x11 for E11") {
        RingPtr ctx = RingContext::make(loop_setup(1, 1));
        auto images = action_images(ctx, LieBasisElement{0, 1, 1});
        CHECK(images.find(ctx->var_index(0, 1, 1)) == images.end());
    }
    SUBCASE("isolated vertex gives the zero derivation") {
        Setup s;
        s.quiver.add_vertex("a");
        s.quiver.add_vertex("b");
        s.quiver.add_edge("e", "a", "a");
        s.alpha = {SDim{1, 1}, SDim{2, 1}};
        s.parity = {0, 0};
        RingPtr ctx = RingContext::make(s);
        CHECK(action_images(ctx, LieBasisElement{1, 1, 2}).empty());
    }
}

TEST_CASE("supertrace annihilation pins the sign convention") {
    // every gl derivation kills str(X(p)) for all closed paths and parities
    std::vector<Setup> setups;
    for (int b = 0; b <= 1; ++b) {
        setups.push_back(loop_setup(1, 1, b));
        setups.push_back(loop_setup(2, 1, b));
    }
    for (int mask = 0; mask < 4; ++mask)
        setups.push_back(two_cycle_setup(SDim{1, 1}, SDim{2, 1}, mask & 1, (mask >> 1) & 1));
    for (const Setup& s : setups) {
        RingPtr ctx = RingContext::make(s);
        for (const Path& p : enumerate_closed_paths(s.quiver, 3)) {
            Polynomial f = strace_invariant(ctx, p);
            if (f.is_zero()) continue;
            for (int v = 0; v < s.quiver.vertex_count(); ++v)
                for (const LieCombo& g : gl_basis(s, v))
                    CHECK(apply_lie(ctx, g, f).is_zero());
        }
    }
}

TEST_CASE("sl invariance verdicts") {
    RingPtr kctx = RingContext::make(kronecker_setup(SDim{2, 0}, SDim{2, 0}));
    SUBCASE("a bare coordinate is not invariant") {
        Polynomial x11 = Polynomial::variable(kctx, kctx->var_index(0, 1, 1));
        LieVerdict v = is_sl_invariant(kctx, x11);
        CHECK_FALSE(v.ok);
        CHECK_FALSE(v.failing_gen.empty());
        CHECK_FALSE(v.residual.is_zero());
    }
    SUBCASE("constants are invariant") {
        CHECK(is_sl_invariant(kctx, Polynomial::constant(kctx, 5)).ok);
    }
    SUBCASE("str generators are invariant for every parity vector") {
        for (int b = 0; b <= 1; ++b) {
            RingPtr ctx = RingContext::make(loop_setup(1, 1, b));
            for (const Path& p : enumerate_closed_paths(ctx->quiver(), 3)) {
                Polynomial f = strace_invariant(ctx, p);
                if (!f.is_zero()) CHECK(is_sl_invariant(ctx, f).ok);
            }
        }
    }
}

namespace {
Polynomial kronecker_det(const RingPtr& ctx, int edge) {
    auto v = [&](int i, int j) { return Polynomial::variable(ctx, ctx->var_index(edge, i, j)); };
    return v(1, 1) * v(2, 2) - v(1, 2) * v(2, 1);
}
} // namespace

TEST_CASE("weights") {
    RingPtr ctx = RingContext::make(kronecker_setup(SDim{2, 0}, SDim{2, 0}));
    Polynomial det = kronecker_det(ctx, 0);
    SUBCASE("det X(e1) has weight (-1, +1)") {
        CHECK(check_weight(ctx, det, {-1, 1}).ok);
        CHECK_FALSE(check_weight(ctx, det, {0, 0}).ok);
        // explicit diagonal derivation check: E11@b scales det by +1
        Polynomial d = apply_lie(ctx, LieBasisElement{1, 1, 1}, det);
        CHECK(d == det);
    }
    SUBCASE("supertraces have weight zero") {
        RingPtr lctx = RingContext::make(loop_setup(1, 1));
        Polynomial f = strace_invariant(lctx, Path{{0}});
        CHECK(check_weight(lctx, f, {0}).ok);
    }
    SUBCASE("verdict lines") {
        Weight w = {-1, 1};
        LieVerdict ok{true, "", Polynomial::zero(ctx)};
        CHECK(verdict_line(ctx->setup(), ok, &w) == "WEIGHT a=-1 b=+1");
        CHECK(verdict_line(ctx->setup(), ok) == "INVARIANT");
        LieVerdict fail{false, "E[1,2]@b", Polynomial::zero(ctx)};
        CHECK(verdict_line(ctx->setup(), fail) == "FAIL gen=E[1,2]@b");
    }
}

TEST_CASE("derivation commutator closure on random even pairs") {
    // the point-transformation convention makes E -> D_E an anti-homomorphism:
    // [D_{E_kl}, D_{E_mn}] acting on each variable equals the action of the
    // reversed matrix commutator [E_mn, E_kl] (even elements only here)
    Setup s = loop_setup(2, 1);
    RingPtr ctx = RingContext::make(s);
    std::mt19937_64 rng(71);
    std::uniform_int_distribution<int> idx(1, 2); // stay in the even block
    for (int it = 0; it < 20; ++it) {
        LieBasisElement g1{0, idx(rng), idx(rng)};
        LieBasisElement g2{0, idx(rng), idx(rng)};
        for (int v = 0; v < ctx->var_count(); ++v) {
            Polynomial xv = Polynomial::variable(ctx, v);
            Polynomial lhs = apply_lie(ctx, g1, apply_lie(ctx, g2, xv)) -
                             apply_lie(ctx, g2, apply_lie(ctx, g1, xv));
            // [E_mn, E_kl] = delta_{nk} E_ml - delta_{lm} E_kn
            Polynomial rhs = Polynomial::zero(ctx);
            if (g2.l == g1.k) rhs += apply_lie(ctx, LieBasisElement{0, g2.k, g1.l}, xv);
            if (g1.l == g2.k) rhs -= apply_lie(ctx, LieBasisElement{0, g1.k, g2.l}, xv);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("group point test") {
    const int k = 4;
    RingPtr ctx = RingContext::make(kronecker_setup(SDim{2, 0}, SDim{2, 0}));
    const Setup& s = ctx->setup();
    Polynomial det = kronecker_det(ctx, 0);

    std::map<int, Grassmann> point;
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> cd(-2, 2);
    for (int v = 0; v < ctx->var_count(); ++v) point[v] = Grassmann::constant(k, cd(rng));

    SUBCASE("identities act trivially") {
        std::vector<SuperMatrix<Grassmann>> g;
        for (int a = 0; a < 2; ++a) g.push_back(grassmann_identity(vertex_format(s, a), k));
        CHECK(group_point_test(ctx, det, {-1, 1}, g, point, k));
    }
    SUBCASE("diagonal scaling at the sink matches the det weight") {
        std::vector<SuperMatrix<Grassmann>> g;
        g.push_back(grassmann_identity(vertex_format(s, 0), k));
        SuperMatrix<Grassmann> gb = grassmann_identity(vertex_format(s, 1), k);
        gb.set(0, 0, Grassmann::constant(k, 2));
        g.push_back(gb);
        CHECK(group_point_test(ctx, det, {-1, 1}, g, point, k));
        CHECK_FALSE(group_point_test(ctx, det, {0, 0}, g, point, k));
    }
    SUBCASE("supertrace invariants pass at weight zero under any point") {
        RingPtr lctx = RingContext::make(loop_setup(1, 1));
        Polynomial f = strace_invariant(lctx, Path{{0, 0}});
        std::map<int, Grassmann> pt;
        for (int v = 0; v < lctx->var_count(); ++v) {
            Grassmann val(k);
            if (lctx->var_parity(v)) {
                val += Grassmann::theta(k, 1) * Rational(cd(rng));
                val += Grassmann::theta(k, 3) * Rational(cd(rng));
            } else {
                val += Grassmann::constant(k, cd(rng));
                val += Grassmann::theta(k, 1) * Grassmann::theta(k, 2) * Rational(cd(rng));
            }
            pt[v] = val;
        }
        SuperMatrix<Grassmann> g = grassmann_identity(vertex_format(lctx->setup(), 0), k);
        g.set(0, 0, Grassmann::constant(k, 3) + Grassmann::theta(k, 1) * Grassmann::theta(k, 2));
        g.set(1, 1, Grassmann::constant(k, 1));
        g.set(0, 1, Grassmann::theta(k, 2));
        g.set(1, 0, Grassmann::theta(k, 4) * Rational(2));
        CHECK(group_point_test(lctx, f, {0}, {g}, pt, k));
    }
}

TEST_CASE("group point test agrees with the infinitesimal weight check") {
    const int k = 4;
    RingPtr ctx = RingContext::make(kronecker_setup(SDim{2, 0}, SDim{2, 0}));
    Polynomial det = kronecker_det(ctx, 0);
    Polynomial x11 = Polynomial::variable(ctx, ctx->var_index(0, 1, 1));
    // a generic point: X(e1) = [[1,2],[3,5]] (det -1), X(e2) = [[2,1],[1,1]]
    std::map<int, Grassmann> point;
    const int vals[2][2][2] = {{{1, 2}, {3, 5}}, {{2, 1}, {1, 1}}};
    for (int e = 0; e < 2; ++e)
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j)
                point[ctx->var_index(e, i, j)] = Grassmann::constant(k, vals[e][i - 1][j - 1]);
    std::vector<SuperMatrix<Grassmann>> g;
    g.push_back(grassmann_identity(vertex_format(ctx->setup(), 0), k));
    SuperMatrix<Grassmann> gb = grassmann_identity(vertex_format(ctx->setup(), 1), k);
    gb.set(0, 0, Grassmann::constant(k, 2));
    gb.set(0, 1, Grassmann::constant(k, 1));
    g.push_back(gb);

    for (const auto& [f, w] : {std::pair<Polynomial, Weight>{det, {-1, 1}},
                               std::pair<Polynomial, Weight>{det, {0, 0}},
                               std::pair<Polynomial, Weight>{x11 * x11, {0, 0}}}) {
        bool infinitesimal = check_weight(ctx, f, w).ok;
        bool finite = group_point_test(ctx, f, w, g, point, k);
        CHECK(infinitesimal == finite);
    }
}
