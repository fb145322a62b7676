#include "squint/lie.hpp"

#include <sstream>
#include <stdexcept>

namespace squint {

namespace {
std::uint8_t blockpar(const SDim& d, int i) { return i <= d.even ? 0 : 1; }
} // namespace

std::uint8_t lie_parity(const Setup& s, const LieBasisElement& g) {
    const SDim& d = s.alpha.at(g.vertex);
    if (g.k < 1 || g.k > d.total() || g.l < 1 || g.l > d.total())
        throw std::invalid_argument("Lie basis index out of range");
    return static_cast<std::uint8_t>((blockpar(d, g.k) + blockpar(d, g.l)) & 1);
}

int supertrace_sign(const Setup& s, const LieBasisElement& g) {
    if (g.k != g.l) return 0;
    return blockpar(s.alpha.at(g.vertex), g.k) == 0 ? 1 : -1;
}

std::string lie_name(const Setup& s, const LieBasisElement& g) {
    std::ostringstream os;
    os << "E[" << g.k << "," << g.l << "]@" << s.quiver.vertex_id(g.vertex);
    return os.str();
}

std::vector<LieCombo> gl_basis(const Setup& s, int vertex) {
    std::vector<LieCombo> out;
    int d = s.alpha.at(vertex).total();
    for (int k = 1; k <= d; ++k)
        for (int l = 1; l <= d; ++l) {
            LieBasisElement g{vertex, k, l};
            out.push_back(LieCombo{{{g, 1}}, lie_parity(s, g), lie_name(s, g)});
        }
    return out;
}

std::vector<LieCombo> sl_basis(const Setup& s, int vertex) {
    std::vector<LieCombo> out;
    int d = s.alpha.at(vertex).total();
    for (int k = 1; k <= d; ++k)
        for (int l = 1; l <= d; ++l) {
            if (k == l) continue;
            LieBasisElement g{vertex, k, l};
            out.push_back(LieCombo{{{g, 1}}, lie_parity(s, g), lie_name(s, g)});
        }
    for (int k = 1; k + 1 <= d; ++k) {
        LieBasisElement a{vertex, k, k};
        LieBasisElement b{vertex, k + 1, k + 1};
        int eps = supertrace_sign(s, a) * supertrace_sign(s, b);
        LieCombo combo;
        combo.terms = {{a, 1}, {b, -eps}};
        combo.parity = 0;
        combo.name = lie_name(s, a) + (eps > 0 ? "-" : "+") + lie_name(s, b);
        out.push_back(std::move(combo));
    }
    return out;
}

std::map<int, Polynomial> action_images(const RingPtr& ctx, const LieBasisElement& g) {
    const Setup& s = ctx->setup();
    std::uint8_t gp = lie_parity(s, g);
    std::map<int, Polynomial> images;
    auto add = [&](int var, const Polynomial& p) {
        auto it = images.find(var);
        if (it == images.end())
            images.emplace(var, p);
        else
            it->second += p;
    };
    const Quiver& q = s.quiver;
    for (int e = 0; e < q.edge_count(); ++e) {
        int dh = s.alpha[q.head(e)].total();
        int dt = s.alpha[q.tail(e)].total();
        if (q.head(e) == g.vertex) {
            // row action: x[e,k,j] -> x[e,l,j]
            for (int j = 1; j <= dt; ++j)
                add(ctx->var_index(e, g.k, j),
                    Polynomial::variable(ctx, ctx->var_index(e, g.l, j)));
        }
        if (q.tail(e) == g.vertex) {
            // column action: x[e,i,l] -> -(-1)^{|E| |x[e,i,k]|} x[e,i,k]
            for (int i = 1; i <= dh; ++i) {
                int src = ctx->var_index(e, i, g.l);
                int img = ctx->var_index(e, i, g.k);
                Rational c(-1);
                if (gp && ctx->var_parity(img)) c = 1;
                add(src, Polynomial::variable(ctx, img) * c);
            }
        }
    }
    // normalize: drop zero images
    for (auto it = images.begin(); it != images.end();)
        it = it->second.is_zero() ? images.erase(it) : std::next(it);
    return images;
}

std::map<int, Polynomial> action_images(const RingPtr& ctx, const LieCombo& g) {
    std::map<int, Polynomial> images;
    for (const auto& [elem, coef] : g.terms) {
        for (auto& [var, img] : action_images(ctx, elem)) {
            Polynomial scaled = img * Rational(coef);
            auto it = images.find(var);
            if (it == images.end())
                images.emplace(var, std::move(scaled));
            else
                it->second += scaled;
        }
    }
    for (auto it = images.begin(); it != images.end();)
        it = it->second.is_zero() ? images.erase(it) : std::next(it);
    return images;
}

Polynomial apply_lie(const RingPtr& ctx, const LieCombo& g, const Polynomial& f) {
    return derivation_apply(action_images(ctx, g), g.parity, f);
}

Polynomial apply_lie(const RingPtr& ctx, const LieBasisElement& g, const Polynomial& f) {
    return derivation_apply(action_images(ctx, g), lie_parity(ctx->setup(), g), f);
}

LieVerdict is_sl_invariant(const RingPtr& ctx, const Polynomial& f) {
    const Setup& s = ctx->setup();
    for (int v = 0; v < s.quiver.vertex_count(); ++v)
        for (const LieCombo& g : sl_basis(s, v)) {
            Polynomial d = apply_lie(ctx, g, f);
            if (!d.is_zero()) return LieVerdict{false, g.name, std::move(d)};
        }
    return LieVerdict{true, "", Polynomial::zero(ctx)};
}

LieVerdict check_weight(const RingPtr& ctx, const Polynomial& f, const Weight& w) {
    if (f.is_zero()) throw std::invalid_argument("check_weight on the zero polynomial");
    const Setup& s = ctx->setup();
    if (w.size() != static_cast<std::size_t>(s.quiver.vertex_count()))
        throw std::invalid_argument("weight on wrong quiver");
    for (int v = 0; v < s.quiver.vertex_count(); ++v)
        for (const LieCombo& g : gl_basis(s, v)) {
            Polynomial d = apply_lie(ctx, g, f);
            long expected = w[v] * supertrace_sign(s, g.terms[0].first);
            Polynomial residual = d - f * Rational(expected);
            if (!residual.is_zero()) return LieVerdict{false, g.name, std::move(residual)};
        }
    return LieVerdict{true, "", Polynomial::zero(ctx)};
}

std::string verdict_line(const Setup& s, const LieVerdict& v, const Weight* w) {
    std::ostringstream os;
    if (!v.ok) {
        os << "FAIL gen=" << v.failing_gen;
        return os.str();
    }
    if (!w) return "INVARIANT";
    os << "WEIGHT";
    for (int a = 0; a < s.quiver.vertex_count(); ++a)
        os << " " << s.quiver.vertex_id(a) << "=" << ((*w)[a] >= 0 ? "+" : "") << (*w)[a];
    return os.str();
}

SuperFormat vertex_format(const Setup& s, int vertex) {
    const SDim& d = s.alpha.at(vertex);
    SuperFormat f;
    for (int i = 1; i <= d.total(); ++i) {
        std::uint8_t p = static_cast<std::uint8_t>((blockpar(d, i) + s.parity[vertex]) & 1);
        f.row_par.push_back(p);
        f.col_par.push_back(p);
    }
    return f;
}

bool group_point_test(const RingPtr& ctx, const Polynomial& f, const Weight& w,
                      const std::vector<SuperMatrix<Grassmann>>& g,
                      const std::map<int, Grassmann>& point, int k) {
    const Setup& s = ctx->setup();
    const Quiver& q = s.quiver;
    if (g.size() != static_cast<std::size_t>(q.vertex_count()))
        throw std::invalid_argument("group point needs one matrix per vertex");
    if (w.size() != static_cast<std::size_t>(q.vertex_count()))
        throw std::invalid_argument("weight on wrong quiver");

    std::vector<SuperMatrix<Grassmann>> g_inv;
    for (const auto& m : g) g_inv.push_back(inverse(m));

    std::map<int, Grassmann> transformed;
    for (int e = 0; e < q.edge_count(); ++e) {
        SuperMatrix<Grassmann> x = evaluate_matrix(generic_matrix(ctx, e), point, k);
        SuperMatrix<Grassmann> y = g[q.head(e)] * x * g_inv[q.tail(e)];
        int dh = s.alpha[q.head(e)].total();
        int dt = s.alpha[q.tail(e)].total();
        for (int i = 1; i <= dh; ++i)
            for (int j = 1; j <= dt; ++j)
                transformed.emplace(ctx->var_index(e, i, j), y.at(i - 1, j - 1));
    }

    Grassmann lhs = evaluate_grassmann(f, transformed, k);
    Grassmann rhs = evaluate_grassmann(f, point, k);
    for (int a = 0; a < q.vertex_count(); ++a)
        rhs = rhs * berezinian(g[a]).power(w[a]);
    return lhs == rhs;
}

} // namespace squint
