#include "squint/semi_invariants.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace squint {

Polynomial strace_invariant(const RingPtr& ctx, const Path& p) {
    if (!is_closed(ctx->quiver(), p)) throw std::invalid_argument("supertrace of an open path");
    return supertrace(path_product(ctx, p));
}

namespace {

bool shifted_purely_even(const Setup& s, int vertex) {
    return s.parity[vertex] ? s.alpha[vertex].even == 0 : s.alpha[vertex].odd == 0;
}

void validate_detlike(const RingPtr& ctx, const DetLikeSpec& spec, int& t_out) {
    const Setup& s = ctx->setup();
    const Quiver& q = s.quiver;
    if (spec.sinks.empty() || spec.sources.empty())
        throw std::invalid_argument("det-like spec needs sinks and sources");
    long t_rows = 0, t_cols = 0;
    for (auto [a, mult] : spec.sinks) {
        VertexClass c = classify_vertex(q, s.alpha, a);
        if (!c.sink) throw std::invalid_argument(q.vertex_id(a) + " is not a sink");
        if (!c.extremal || !shifted_purely_even(s, a))
            throw std::invalid_argument(q.vertex_id(a) + " is not extremal with purely even shifted space");
        if (mult < 1) throw std::invalid_argument("multiplicities must be positive");
        t_rows += static_cast<long>(s.alpha[a].total()) * mult;
    }
    for (auto [c, mult] : spec.sources) {
        VertexClass vc = classify_vertex(q, s.alpha, c);
        if (!vc.source) throw std::invalid_argument(q.vertex_id(c) + " is not a source");
        if (!vc.extremal || !shifted_purely_even(s, c))
            throw std::invalid_argument(q.vertex_id(c) + " is not extremal with purely even shifted space");
        if (mult < 1) throw std::invalid_argument("multiplicities must be positive");
        t_cols += static_cast<long>(s.alpha[c].total()) * mult;
    }
    if (t_rows != t_cols)
        throw std::invalid_argument("unbalanced det-like spec: " + std::to_string(t_rows) +
                                    " rows vs " + std::to_string(t_cols) + " columns");
    if (t_rows == 0) throw std::invalid_argument("det-like spec of size zero");
    t_out = static_cast<int>(t_rows);
}

} // namespace

DetLikeResult detlike_semi_invariant(const RingPtr& ctx, const DetLikeSpec& spec) {
    const Setup& s = ctx->setup();
    const Quiver& q = s.quiver;
    int t = 0;
    validate_detlike(ctx, spec, t);

    // block layout
    int total_q = 0, total_r = 0;
    for (auto [a, mult] : spec.sinks) total_q += mult;
    for (auto [c, mult] : spec.sources) total_r += mult;
    auto sink_of_block = [&](int u) {
        for (auto [a, mult] : spec.sinks) {
            if (u < mult) return a;
            u -= mult;
        }
        throw std::out_of_range("block row");
    };
    auto source_of_block = [&](int v) {
        for (auto [c, mult] : spec.sources) {
            if (v < mult) return c;
            v -= mult;
        }
        throw std::out_of_range("block column");
    };

    SuperMatrix<Polynomial> x(SuperFormat::standard(t, 0, t, 0), Polynomial::zero(ctx));
    int row0 = 0;
    for (int u = 0; u < total_q; ++u) {
        int a = sink_of_block(u);
        int da = s.alpha[a].total();
        int col0 = 0;
        for (int v = 0; v < total_r; ++v) {
            int c = source_of_block(v);
            int dc = s.alpha[c].total();
            auto it = spec.blocks.find({u, v});
            if (it != spec.blocks.end()) {
                SuperMatrix<Polynomial> blk(SuperFormat::standard(da, 0, dc, 0),
                                            Polynomial::zero(ctx));
                for (const auto& [coef, p] : it->second) {
                    if (!path_ok(q, p) || path_start(q, p) != c || path_end(q, p) != a)
                        throw std::invalid_argument("block path does not run source -> sink");
                    blk = blk + path_product(ctx, p).scaled(coef);
                }
                for (int i = 0; i < da; ++i)
                    for (int j = 0; j < dc; ++j) {
                        if (!blk.at(i, j).parity_compatible(0))
                            throw std::invalid_argument("odd entry in det-like block");
                        x.set(row0 + i, col0 + j, blk.at(i, j));
                    }
            }
            col0 += dc;
        }
        row0 += da;
    }

    DetLikeResult r{determinant(x), {}, Weight(q.vertex_count(), 0)};
    for (auto& [n, f] : r.det.components_by_multidegree()) r.components.emplace_back(n, f);
    for (auto [a, mult] : spec.sinks)
        r.weight[a] += (s.parity[a] ? -1 : 1) * static_cast<long>(mult);
    for (auto [c, mult] : spec.sources)
        r.weight[c] -= (s.parity[c] ? -1 : 1) * static_cast<long>(mult);
    return r;
}

RingPtr polarized_context(const RingPtr& ctx, const MultiDegree& n) {
    Setup s;
    s.quiver = polarize_quiver(ctx->quiver(), n);
    s.alpha = ctx->alpha();
    s.parity = ctx->parity_vector();
    return RingContext::make(std::move(s));
}

namespace {

// flattened polarized multidegree from per-original-edge split lists
MultiDegree flatten_split(const Quiver& polarized, const Quiver& original,
                          const std::vector<std::vector<int>>& split) {
    MultiDegree s_flat(polarized.edge_count(), 0);
    int pe = 0;
    for (int e = 0; e < original.edge_count(); ++e)
        for (int c = 0; c < static_cast<int>(split[e].size()); ++c) s_flat[pe++] = split[e][c];
    if (pe != polarized.edge_count()) throw std::logic_error("split does not match polarization");
    return s_flat;
}

} // namespace

PolarizeResult polarize(const Polynomial& f, const std::vector<std::vector<int>>& split) {
    const RingPtr& ctx = f.context();
    const Quiver& q = ctx->quiver();
    auto n_opt = f.multidegree();
    if (!n_opt) throw std::invalid_argument("polarize needs a multihomogeneous polynomial");
    const MultiDegree n = *n_opt;
    if (static_cast<int>(split.size()) != q.edge_count())
        throw std::invalid_argument("split does not cover the edge set");
    for (int e = 0; e < q.edge_count(); ++e) {
        int sum = std::accumulate(split[e].begin(), split[e].end(), 0);
        if (static_cast<int>(split[e].size()) != n[e] || sum != n[e])
            throw std::invalid_argument("split incompatible with the multidegree at edge " +
                                        q.edge_id(e));
        for (int x : split[e])
            if (x < 0) throw std::invalid_argument("negative split entry");
    }

    RingPtr target = polarized_context(ctx, n);
    const Quiver& pq = target->quiver();

    std::map<int, Polynomial> images;
    int pe = 0;
    for (int e = 0; e < q.edge_count(); ++e) {
        int dh = ctx->alpha()[q.head(e)].total();
        int dt = ctx->alpha()[q.tail(e)].total();
        for (int i = 1; i <= dh; ++i)
            for (int j = 1; j <= dt; ++j) {
                Polynomial img = Polynomial::zero(target);
                for (int c = 0; c < n[e]; ++c)
                    img += Polynomial::variable(target, target->var_index(pe + c, i, j));
                images.emplace(ctx->var_index(e, i, j), std::move(img));
            }
        pe += n[e];
    }

    Polynomial full = substitute(f, images, target);
    MultiDegree want = flatten_split(pq, q, split);
    Polynomial piece = Polynomial::zero(target);
    for (auto& [deg, comp] : full.components_by_multidegree())
        if (deg == want) piece = comp;
    return PolarizeResult{target, std::move(piece)};
}

bool linearize_and_restitute_check(const Polynomial& f, const std::set<int>& t_edges) {
    const RingPtr& ctx = f.context();
    const Quiver& q = ctx->quiver();
    auto n_opt = f.multidegree();
    if (!n_opt) throw std::invalid_argument("check needs a multihomogeneous polynomial");
    const MultiDegree n = *n_opt;

    std::vector<std::vector<int>> split(q.edge_count());
    for (int e = 0; e < q.edge_count(); ++e) {
        split[e].assign(n[e], 0);
        if (t_edges.count(e)) {
            for (int c = 0; c < n[e]; ++c) split[e][c] = 1;
        } else if (n[e] > 0) {
            split[e][0] = n[e];
        }
    }
    PolarizeResult pt = polarize(f, split);

    // restitution X(e_i) -> X(e)
    std::map<int, Polynomial> back;
    int pe = 0;
    for (int e = 0; e < q.edge_count(); ++e) {
        int dh = ctx->alpha()[q.head(e)].total();
        int dt = ctx->alpha()[q.tail(e)].total();
        for (int c = 0; c < n[e]; ++c)
            for (int i = 1; i <= dh; ++i)
                for (int j = 1; j <= dt; ++j)
                    back.emplace(pt.ctx->var_index(pe + c, i, j),
                                 Polynomial::variable(ctx, ctx->var_index(e, i, j)));
        pe += n[e];
    }
    Polynomial restituted = substitute(pt.value, back, ctx);

    Rational factor(1);
    for (int e : t_edges)
        for (int c = 2; c <= n[e]; ++c) factor *= c;
    return restituted == f * factor;
}

Polynomial reduce_normalized(const Polynomial& f, const Normalized& norm, const RingPtr& base) {
    const RingPtr& src = f.context();
    const Quiver& nq = src->quiver();
    const Quiver& bq = base->quiver();
    if (!(norm.setup.quiver == nq))
        throw std::invalid_argument("polynomial is not over the normalized quiver");
    if (bq.edge_count() != nq.edge_count() - 1 || bq.vertex_count() != nq.vertex_count() - 1)
        throw std::invalid_argument("base ring does not match the normalization");
    int e_a = norm.new_edge;
    int d = src->alpha()[nq.head(e_a)].total();
    if (d != src->alpha()[nq.tail(e_a)].total())
        throw std::invalid_argument("size mismatch on the normalization edge");

    std::map<int, Polynomial> images;
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j)
            images.emplace(src->var_index(e_a, i, j),
                           Polynomial::constant(base, i == j ? 1 : 0));
    for (int e = 0; e < bq.edge_count(); ++e) {
        if (nq.edge_id(e) != bq.edge_id(e))
            throw std::invalid_argument("edge mismatch between normalized and base quivers");
        int dh = src->alpha()[nq.head(e)].total();
        int dt = src->alpha()[nq.tail(e)].total();
        for (int i = 1; i <= dh; ++i)
            for (int j = 1; j <= dt; ++j)
                images.emplace(src->var_index(e, i, j),
                               Polynomial::variable(base, base->var_index(e, i, j)));
    }
    return substitute(f, images, base);
}

std::optional<Weight> weight_of(const RingPtr& ctx, const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("weight_of on the zero polynomial");
    const Setup& s = ctx->setup();
    Weight w(s.quiver.vertex_count(), 0);
    const Monomial& lead = f.terms().begin()->first;
    Rational lead_c = f.terms().begin()->second;
    for (int a = 0; a < s.quiver.vertex_count(); ++a) {
        int d = s.alpha[a].total();
        std::optional<long> c_a;
        for (int k = 1; k <= d; ++k) {
            LieBasisElement g{a, k, k};
            Polynomial df = apply_lie(ctx, g, f);
            Rational lambda = df.coefficient(lead) / lead_c;
            if (df != f * lambda) return std::nullopt;
            // lambda must equal str(E_kk) * c_a with integer c_a
            Rational c = lambda * supertrace_sign(s, g);
            if (c.get_den() != 1) return std::nullopt;
            long ci = static_cast<long>(c.get_num().get_si());
            if (!c_a)
                c_a = ci;
            else if (*c_a != ci)
                return std::nullopt;
        }
        if (c_a) w[a] = *c_a;
    }
    return w;
}

} // namespace squint
