#include "squint/oracle.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace squint {

namespace {

// monomials of total degree d in the variables of one edge, appended to each
// partial factor list in `prefixes`
void extend_by_edge(const RingPtr& ctx, int edge, int degree,
                    std::vector<std::vector<std::pair<int, int>>>& prefixes) {
    const Quiver& q = ctx->quiver();
    const SDim& dh = ctx->alpha()[q.head(edge)];
    const SDim& dt = ctx->alpha()[q.tail(edge)];
    std::vector<int> vars;
    for (int i = 1; i <= dh.total(); ++i)
        for (int j = 1; j <= dt.total(); ++j) vars.push_back(ctx->var_index(edge, i, j));

    std::vector<std::vector<std::pair<int, int>>> local;
    std::vector<std::pair<int, int>> cur;
    // choose exponents over vars in ascending order; odd vars at most 1
    auto rec = [&](auto&& self, std::size_t idx, int rem) -> void {
        if (rem == 0) {
            local.push_back(cur);
            return;
        }
        if (idx == vars.size()) return;
        int v = vars[idx];
        int maxe = ctx->var_parity(v) ? 1 : rem;
        self(self, idx + 1, rem); // exponent 0
        for (int e = 1; e <= maxe; ++e) {
            cur.emplace_back(v, e);
            self(self, idx + 1, rem - e);
            cur.pop_back();
        }
    };
    rec(rec, 0, degree);

    std::vector<std::vector<std::pair<int, int>>> out;
    out.reserve(prefixes.size() * local.size());
    for (const auto& p : prefixes)
        for (const auto& l : local) {
            auto combined = p;
            combined.insert(combined.end(), l.begin(), l.end());
            out.push_back(std::move(combined));
        }
    prefixes = std::move(out);
}

Integer binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

} // namespace

std::vector<Monomial> component_basis(const RingPtr& ctx, const MultiDegree& n) {
    const Quiver& q = ctx->quiver();
    if (static_cast<int>(n.size()) != q.edge_count())
        throw std::invalid_argument("multidegree on wrong quiver");
    std::vector<std::vector<std::pair<int, int>>> lists{{}};
    for (int e = 0; e < q.edge_count(); ++e) {
        if (n[e] < 0) throw std::invalid_argument("negative multidegree");
        if (n[e] > 0) extend_by_edge(ctx, e, n[e], lists);
        if (lists.empty()) break;
    }
    std::vector<Monomial> basis;
    basis.reserve(lists.size());
    for (auto& f : lists) {
        std::sort(f.begin(), f.end());
        basis.push_back(Monomial{std::move(f)});
    }
    std::sort(basis.begin(), basis.end());
    return basis;
}

Integer component_basis_size(const RingPtr& ctx, const MultiDegree& n) {
    const Quiver& q = ctx->quiver();
    Integer total(1);
    for (int e = 0; e < q.edge_count(); ++e) {
        const SDim& dh = ctx->alpha()[q.head(e)];
        const SDim& dt = ctx->alpha()[q.tail(e)];
        long evens = 0, odds = 0;
        for (int i = 1; i <= dh.total(); ++i)
            for (int j = 1; j <= dt.total(); ++j)
                (ctx->var_parity(ctx->var_index(e, i, j)) ? odds : evens)++;
        Integer per_edge(0);
        for (long s = 0; s <= std::min<long>(odds, n[e]); ++s)
            per_edge += binomial(odds, s) * binomial(evens + n[e] - s - 1, n[e] - s);
        total *= per_edge;
    }
    return total;
}

namespace {

// per-vertex eigenvalue vector of the diagonal torus on a monomial:
// lambda_k(a) = (row occurrences of k at a) - (column occurrences of k at a)
std::vector<std::vector<long>> torus_weight(const RingPtr& ctx, const Monomial& m) {
    const Setup& s = ctx->setup();
    std::vector<std::vector<long>> lambda(s.quiver.vertex_count());
    for (int a = 0; a < s.quiver.vertex_count(); ++a)
        lambda[a].assign(s.alpha[a].total(), 0);
    for (const auto& [v, e] : m.factors) {
        const VarInfo& info = ctx->var(v);
        if (info.edge < 0) continue;
        lambda[s.quiver.head(info.edge)][info.row - 1] += e;
        lambda[s.quiver.tail(info.edge)][info.col - 1] -= e;
    }
    return lambda;
}

// the supertrace-zero part of the diagonal annihilates the monomial iff
// lambda(a) is proportional to the sign vector (str(E_kk))_k at each vertex
bool torus_ok_sl(const Setup& s, const std::vector<std::vector<long>>& lambda) {
    for (int a = 0; a < s.quiver.vertex_count(); ++a) {
        const SDim& d = s.alpha[a];
        bool have = false;
        long c = 0;
        for (int k = 1; k <= d.total(); ++k) {
            long v = lambda[a][k - 1] * (k <= d.even ? 1 : -1);
            if (!have) {
                c = v;
                have = true;
            } else if (v != c)
                return false;
        }
    }
    return true;
}

bool torus_ok_gl(const Setup&, const std::vector<std::vector<long>>& lambda) {
    for (const auto& la : lambda)
        for (long v : la)
            if (v != 0) return false;
    return true;
}

DimResult kernel_dim(const RingPtr& ctx, const MultiDegree& n, bool full_gl,
                     const OracleOptions& opts) {
    const Setup& s = ctx->setup();
    DimResult res;
    Integer expected = component_basis_size(ctx, n);
    if (expected > opts.monomial_cap) {
        res.capped = true;
        res.basis_size = -1;
        return res;
    }
    std::vector<Monomial> basis = component_basis(ctx, n);
    res.basis_size = static_cast<long>(basis.size());
    if (Integer(res.basis_size) != expected)
        throw std::logic_error("component basis size disagrees with the product formula");

    std::vector<Monomial> kept;
    for (const Monomial& m : basis) {
        auto lambda = torus_weight(ctx, m);
        if (full_gl ? torus_ok_gl(s, lambda) : torus_ok_sl(s, lambda)) kept.push_back(m);
    }
    if (kept.empty()) {
        res.dim = 0;
        return res;
    }

    // stack the off-diagonal derivation constraints on the filtered span
    std::map<std::pair<int, Monomial>, int> row_of;
    IntMatrix a;
    int gen_id = 0;
    for (int v = 0; v < s.quiver.vertex_count(); ++v) {
        int d = s.alpha[v].total();
        for (int k = 1; k <= d; ++k)
            for (int l = 1; l <= d; ++l) {
                if (k == l) continue;
                LieBasisElement gen{v, k, l};
                auto images = action_images(ctx, gen);
                std::uint8_t gp = lie_parity(s, gen);
                for (std::size_t j = 0; j < kept.size(); ++j) {
                    Polynomial df =
                        derivation_apply(images, gp, Polynomial::monomial(ctx, kept[j], 1));
                    for (const auto& [m2, c] : df.terms()) {
                        if (c.get_den() != 1)
                            throw std::logic_error("non-integer derivation coefficient");
                        auto key = std::make_pair(gen_id, m2);
                        auto it = row_of.find(key);
                        if (it == row_of.end()) {
                            it = row_of.emplace(key, static_cast<int>(a.size())).first;
                            a.emplace_back(kept.size(), Integer(0));
                        }
                        a[it->second][j] += c.get_num();
                    }
                }
                ++gen_id;
            }
    }
    int rank = bareiss_rank(std::move(a));
    res.dim = static_cast<long>(kept.size()) - rank;
    return res;
}

} // namespace

DimResult semi_invariant_dim(const RingPtr& ctx, const MultiDegree& n, const OracleOptions& opts) {
    return kernel_dim(ctx, n, /*full_gl=*/false, opts);
}

DimResult invariant_dim(const RingPtr& ctx, const MultiDegree& n, const OracleOptions& opts) {
    return kernel_dim(ctx, n, /*full_gl=*/true, opts);
}

namespace {

bool leq_componentwise(const MultiDegree& a, const MultiDegree& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

MultiDegree subtract(const MultiDegree& a, const MultiDegree& b) {
    MultiDegree r = a;
    for (std::size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
    return r;
}

bool all_zero(const MultiDegree& a) {
    for (int x : a)
        if (x != 0) return false;
    return true;
}

struct DetLikeGenerators {
    std::vector<Polynomial> gens;
    bool capped = false;
};

// Determinant-like generators landing at multidegree <= n, pulled back to the
// base ring through one round of sink/source normalizing.
DetLikeGenerators detlike_generators(const RingPtr& base, const MultiDegree& n, int max_path_len,
                                     const OracleOptions& opts) {
    DetLikeGenerators out;
    const Setup& s0 = base->setup();
    const int base_edges = s0.quiver.edge_count();
    const int budget = total_degree(n);
    if (budget <= 0) return out;

    // normalize every extremal vertex that is neither source nor sink, once
    std::vector<Normalized> chain;
    Setup current = s0;
    for (int a = 0; a < s0.quiver.vertex_count(); ++a) {
        VertexClass c = classify_vertex(s0.quiver, s0.alpha, a);
        if (c.extremal && !c.source && !c.sink && s0.alpha[a].total() > 0) {
            Normalized nrm = normalize_at(current, a);
            current = nrm.setup;
            chain.push_back(std::move(nrm));
        }
    }
    std::vector<RingPtr> ctx_chain{base};
    for (std::size_t i = 0; i < chain.size(); ++i) ctx_chain.push_back(RingContext::make(chain[i].setup));
    RingPtr work = ctx_chain.back();
    const Setup& sw = work->setup();
    const Quiver& qw = sw.quiver;

    std::vector<int> sink_cand, source_cand;
    for (int a = 0; a < qw.vertex_count(); ++a) {
        VertexClass c = classify_vertex(qw, sw.alpha, a);
        if (sw.alpha[a].total() == 0 || !c.extremal) continue;
        bool pure = sw.parity[a] ? sw.alpha[a].even == 0 : sw.alpha[a].odd == 0;
        if (!pure) continue;
        if (c.sink) sink_cand.push_back(a);
        if (c.source) source_cand.push_back(a);
    }
    if (sink_cand.empty() || source_cand.empty()) return out;

    const int path_cap = 2 * max_path_len + 1;
    std::map<std::pair<int, int>, std::vector<Path>> paths; // (source, sink) -> paths
    for (int c : source_cand)
        for (int a : sink_cand) {
            std::vector<Path> all = enumerate_paths_between(qw, c, a, path_cap);
            std::vector<Path>& keep = paths[{c, a}];
            for (const Path& p : all) {
                int original = 0;
                for (int e : p.edges)
                    if (e < base_edges) ++original;
                if (original >= 1 && original <= budget) keep.push_back(p);
            }
        }

    // multiplicity assignments q : sink_cand -> {0,1,2}, r likewise
    std::vector<std::vector<int>> sink_assignments, source_assignments;
    auto enumerate_assignments = [](std::size_t count, std::vector<std::vector<int>>& out_list) {
        std::vector<int> cur(count, 0);
        auto rec = [&](auto&& self, std::size_t i) -> void {
            if (i == count) {
                out_list.push_back(cur);
                return;
            }
            for (int m = 0; m <= 2; ++m) {
                cur[i] = m;
                self(self, i + 1);
            }
        };
        rec(rec, 0);
    };
    enumerate_assignments(sink_cand.size(), sink_assignments);
    enumerate_assignments(source_cand.size(), source_assignments);

    std::set<std::map<Monomial, Rational>> seen;
    for (const auto& qa : sink_assignments) {
        long t_rows = 0;
        for (std::size_t i = 0; i < sink_cand.size(); ++i)
            t_rows += static_cast<long>(qa[i]) * sw.alpha[sink_cand[i]].total();
        if (t_rows == 0 || t_rows > budget) continue;
        for (const auto& ra : source_assignments) {
            long t_cols = 0;
            for (std::size_t j = 0; j < source_cand.size(); ++j)
                t_cols += static_cast<long>(ra[j]) * sw.alpha[source_cand[j]].total();
            if (t_cols != t_rows) continue;

            // expanded block rows/cols
            std::vector<int> row_vertex, col_vertex;
            for (std::size_t i = 0; i < sink_cand.size(); ++i)
                for (int m = 0; m < qa[i]; ++m) row_vertex.push_back(sink_cand[i]);
            for (std::size_t j = 0; j < source_cand.size(); ++j)
                for (int m = 0; m < ra[j]; ++m) col_vertex.push_back(source_cand[j]);

            // symbolic coefficient per (block position, path)
            long param_count = 0;
            for (int u = 0; u < static_cast<int>(row_vertex.size()); ++u)
                for (int v = 0; v < static_cast<int>(col_vertex.size()); ++v)
                    param_count += static_cast<long>(paths[{col_vertex[v], row_vertex[u]}].size());
            if (param_count == 0) continue;
            if (param_count > opts.detlike_param_cap) {
                out.capped = true;
                continue;
            }

            std::vector<std::string> names;
            for (long i = 0; i < param_count; ++i) names.push_back("c" + std::to_string(i));
            RingPtr pctx = RingContext::make(sw, names);

            int t = static_cast<int>(t_rows);
            SuperMatrix<Polynomial> x(SuperFormat::standard(t, 0, t, 0), Polynomial::zero(pctx));
            int param = 0;
            int row0 = 0;
            for (int u = 0; u < static_cast<int>(row_vertex.size()); ++u) {
                int da = sw.alpha[row_vertex[u]].total();
                int col0 = 0;
                for (int v = 0; v < static_cast<int>(col_vertex.size()); ++v) {
                    int dc = sw.alpha[col_vertex[v]].total();
                    for (const Path& p : paths[{col_vertex[v], row_vertex[u]}]) {
                        SuperMatrix<Polynomial> xp = path_product(pctx, p);
                        Polynomial coef =
                            Polynomial::variable(pctx, pctx->param_index(param++));
                        for (int i = 0; i < da; ++i)
                            for (int j = 0; j < dc; ++j)
                                x.set(row0 + i, col0 + j,
                                      x.at(row0 + i, col0 + j) + coef * xp.at(i, j));
                    }
                    col0 += dc;
                }
                row0 += da;
            }

            Polynomial det = determinant(x);
            for (auto& [pm, fx] : det.components_by_param_monomial()) {
                if (fx.is_zero()) continue;
                // re-read over the parameter-free ring (edge variables share indices)
                Polynomial plain = Polynomial::zero(work);
                for (const auto& [m, c] : fx.terms()) plain += Polynomial::monomial(work, m, c);
                // pull back through the normalization chain
                Polynomial reduced = plain;
                for (int i = static_cast<int>(chain.size()) - 1; i >= 0; --i)
                    reduced = reduce_normalized(reduced, chain[i], ctx_chain[i]);
                for (auto& [deg, comp] : reduced.components_by_multidegree()) {
                    if (comp.is_zero() || !leq_componentwise(deg, n) || total_degree(deg) == 0)
                        continue;
                    if (seen.insert(comp.terms()).second) out.gens.push_back(comp);
                }
            }
        }
    }
    return out;
}

} // namespace

DimResult generator_span_dim(const RingPtr& ctx, const MultiDegree& n, int max_path_len,
                             const OracleOptions& opts) {
    DimResult res;
    Integer expected = component_basis_size(ctx, n);
    if (expected > opts.monomial_cap) {
        res.capped = true;
        res.basis_size = -1;
        return res;
    }
    std::vector<Monomial> basis = component_basis(ctx, n);
    res.basis_size = static_cast<long>(basis.size());
    if (all_zero(n)) {
        res.dim = 1; // constants
        return res;
    }
    if (max_path_len < 1) throw std::invalid_argument("max_path_len must be >= 1");

    std::vector<std::pair<MultiDegree, Polynomial>> gens;
    for (const Path& p : enumerate_closed_paths(ctx->quiver(), max_path_len)) {
        Polynomial f = strace_invariant(ctx, p);
        if (f.is_zero()) continue;
        MultiDegree d = *f.multidegree();
        if (leq_componentwise(d, n)) gens.emplace_back(std::move(d), std::move(f));
    }
    DetLikeGenerators dl = detlike_generators(ctx, n, max_path_len, opts);
    res.capped = res.capped || dl.capped;
    for (Polynomial& f : dl.gens) {
        MultiDegree d = *f.multidegree();
        if (leq_componentwise(d, n)) gens.emplace_back(std::move(d), std::move(f));
    }

    // all products of generators of total multidegree exactly n
    std::map<Monomial, int> col_of;
    for (std::size_t i = 0; i < basis.size(); ++i) col_of[basis[i]] = static_cast<int>(i);
    RatMatrix rows;
    auto emit = [&](const Polynomial& f) {
        if (f.is_zero()) return;
        std::vector<Rational> row(basis.size(), Rational(0));
        for (const auto& [m, c] : f.terms()) {
            auto it = col_of.find(m);
            if (it == col_of.end())
                throw std::logic_error("generator product escapes the component basis");
            row[it->second] = c;
        }
        rows.push_back(std::move(row));
    };
    Polynomial unit = Polynomial::constant(ctx, 1);
    auto rec = [&](auto&& self, std::size_t idx, const MultiDegree& remaining,
                   const Polynomial& acc) -> void {
        if (all_zero(remaining)) {
            emit(acc);
            return;
        }
        for (std::size_t i = idx; i < gens.size(); ++i) {
            if (!leq_componentwise(gens[i].first, remaining)) continue;
            Polynomial next = acc * gens[i].second;
            if (next.is_zero()) continue;
            self(self, i, subtract(remaining, gens[i].first), next);
        }
    };
    rec(rec, 0, n, unit);

    res.dim = rows.empty() ? 0 : rational_rank(rows);
    return res;
}

ComponentReport oracle_component(const RingPtr& ctx, const MultiDegree& n,
                                 std::optional<int> compare_maxlen, const OracleOptions& opts) {
    ComponentReport r;
    r.n = n;
    DimResult ssi = semi_invariant_dim(ctx, n, opts);
    DimResult si = invariant_dim(ctx, n, opts);
    r.capped = ssi.capped || si.capped;
    r.basis_size = ssi.basis_size;
    r.ssi_dim = ssi.dim;
    r.si_dim = si.dim;
    if (compare_maxlen) {
        DimResult span = generator_span_dim(ctx, n, *compare_maxlen, opts);
        r.capped = r.capped || span.capped;
        r.span_dim = span.dim;
        if (r.capped)
            r.verdict = "INCONCLUSIVE";
        else
            r.verdict = (r.span_dim == r.ssi_dim) ? "PASS" : "FAIL";
    } else {
        r.verdict = r.capped ? "INCONCLUSIVE" : "NA";
    }
    return r;
}

namespace {
std::string degree_string(const Quiver& q, const MultiDegree& n) {
    std::ostringstream os;
    os << "(";
    for (int e = 0; e < q.edge_count(); ++e) {
        if (e) os << ",";
        os << q.edge_id(e) << "=" << n[e];
    }
    os << ")";
    return os.str();
}
} // namespace

std::string report_line(const Quiver& q, const ComponentReport& r) {
    std::ostringstream os;
    os << "degree " << degree_string(q, r.n) << " basis " << r.basis_size << " ssi " << r.ssi_dim
       << " si " << r.si_dim;
    if (r.span_dim >= 0) os << " span " << r.span_dim;
    os << " " << r.verdict;
    return os.str();
}

std::string report_csv_header() { return "multidegree,basis_size,ssi_dim,si_dim,span_dim,verdict"; }

std::string report_csv_row(const Quiver& q, const ComponentReport& r) {
    std::ostringstream os;
    os << "\"";
    for (int e = 0; e < q.edge_count(); ++e) {
        if (e) os << " ";
        os << r.n[e];
    }
    os << "\"," << r.basis_size << "," << r.ssi_dim << "," << r.si_dim << ",";
    if (r.span_dim >= 0) os << r.span_dim;
    os << "," << r.verdict;
    return os.str();
}

void validate_rep(const Quiver& q, const ConcreteSuperRep& v) {
    if (static_cast<int>(v.sdim.size()) != q.vertex_count())
        throw std::invalid_argument("representation dimension vector on wrong quiver");
    if (static_cast<int>(v.mats.size()) != q.edge_count())
        throw std::invalid_argument("representation must assign a matrix to every edge");
    for (int e = 0; e < q.edge_count(); ++e) {
        int rows = v.sdim[q.head(e)].total();
        int cols = v.sdim[q.tail(e)].total();
        if (static_cast<int>(v.mats[e].size()) != rows)
            throw std::invalid_argument("matrix row count mismatch on " + q.edge_id(e));
        for (const auto& row : v.mats[e])
            if (static_cast<int>(row.size()) != cols)
                throw std::invalid_argument("matrix column count mismatch on " + q.edge_id(e));
    }
}

namespace {

struct BlockLayout {
    // unknowns: phi(a) entries restricted to the diagonal blocks
    std::vector<int> offset; // per vertex
    int total = 0;
    std::vector<std::vector<int>> index; // per vertex: dB x dA, -1 outside blocks
};

BlockLayout graded_layout(const Quiver& q, const SuperDimVector& av, const SuperDimVector& aw) {
    BlockLayout lay;
    lay.offset.resize(q.vertex_count());
    lay.index.resize(q.vertex_count());
    for (int a = 0; a < q.vertex_count(); ++a) {
        lay.offset[a] = lay.total;
        int rows = aw[a].total(), cols = av[a].total();
        lay.index[a].assign(static_cast<std::size_t>(rows) * cols, -1);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) {
                bool r_even = r < aw[a].even;
                bool c_even = c < av[a].even;
                if (r_even == c_even)
                    lay.index[a][static_cast<std::size_t>(r) * cols + c] = lay.total++;
            }
    }
    return lay;
}

} // namespace

HomExt hom_ext_dims(const Quiver& q, const ConcreteSuperRep& v, const ConcreteSuperRep& w) {
    validate_rep(q, v);
    validate_rep(q, w);
    BlockLayout lay = graded_layout(q, v.sdim, w.sdim);
    RatMatrix system;
    for (int e = 0; e < q.edge_count(); ++e) {
        int h = q.head(e), t = q.tail(e);
        int rows = w.sdim[h].total();
        int cols = v.sdim[t].total();
        int mid_w = w.sdim[t].total();
        int mid_v = v.sdim[h].total();
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) {
                std::vector<Rational> eq(lay.total, Rational(0));
                // (W(e) phi(t))_{rc} = sum_m W(e)[r][m] phi(t)[m][c]
                for (int m = 0; m < mid_w; ++m) {
                    int u = lay.index[t][static_cast<std::size_t>(m) * cols + c];
                    if (u >= 0) eq[u] += w.mats[e][r][m];
                }
                // -(phi(h) V(e))_{rc} = -sum_m phi(h)[r][m] V(e)[m][c]
                for (int m = 0; m < mid_v; ++m) {
                    int u = lay.index[h][static_cast<std::size_t>(r) * mid_v + m];
                    if (u >= 0) eq[u] -= v.mats[e][m][c];
                }
                system.push_back(std::move(eq));
            }
    }
    long hom = lay.total - (system.empty() ? 0 : rational_rank(system));
    long long form = ringel_form(q, v.sdim, w.sdim);
    long ext = static_cast<long>(hom - form);
    if (ext < 0)
        throw std::logic_error("negative Ext dimension: Ringel form or solver inconsistency");
    return HomExt{hom, ext};
}

long ordinary_hom_dim(const Quiver& q, const std::vector<int>& dims_v,
                      const std::vector<int>& dims_w, const std::vector<RatMatrix>& mats_v,
                      const std::vector<RatMatrix>& mats_w) {
    std::vector<int> offset(q.vertex_count());
    int total = 0;
    for (int a = 0; a < q.vertex_count(); ++a) {
        offset[a] = total;
        total += dims_w[a] * dims_v[a];
    }
    RatMatrix system;
    for (int e = 0; e < q.edge_count(); ++e) {
        int h = q.head(e), t = q.tail(e);
        for (int r = 0; r < dims_w[h]; ++r)
            for (int c = 0; c < dims_v[t]; ++c) {
                std::vector<Rational> eq(total, Rational(0));
                for (int m = 0; m < dims_w[t]; ++m)
                    eq[offset[t] + m * dims_v[t] + c] += mats_w[e][r][m];
                for (int m = 0; m < dims_v[h]; ++m)
                    eq[offset[h] + r * dims_v[h] + m] -= mats_v[e][m][c];
                system.push_back(std::move(eq));
            }
    }
    return total - (system.empty() ? 0 : rational_rank(system));
}

namespace {

std::vector<RatMatrix> doubled_mats(const Quiver& q, const ConcreteSuperRep& rep) {
    std::vector<RatMatrix> out;
    for (int e = 0; e < q.edge_count(); ++e) {
        int h = q.head(e), t = q.tail(e);
        for (int i = 0; i <= 1; ++i)
            for (int j = 0; j <= 1; ++j) {
                int row_lo = (j == 0) ? 0 : rep.sdim[h].even;
                int row_hi = (j == 0) ? rep.sdim[h].even : rep.sdim[h].total();
                int col_lo = (i == 0) ? 0 : rep.sdim[t].even;
                int col_hi = (i == 0) ? rep.sdim[t].even : rep.sdim[t].total();
                RatMatrix blk;
                for (int r = row_lo; r < row_hi; ++r)
                    blk.emplace_back(rep.mats[e][r].begin() + col_lo,
                                     rep.mats[e][r].begin() + col_hi);
                out.push_back(std::move(blk));
            }
    }
    return out;
}

} // namespace

long hom_dim_via_doubling(const Quiver& q, const ConcreteSuperRep& v, const ConcreteSuperRep& w) {
    validate_rep(q, v);
    validate_rep(q, w);
    VertexDoubled dv = double_all(q, v.sdim);
    VertexDoubled dw = double_all(q, w.sdim);
    return ordinary_hom_dim(dv.quiver, dv.dims, dw.dims, doubled_mats(q, v), doubled_mats(q, w));
}

} // namespace squint
