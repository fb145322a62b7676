#include "squint/supermatrix.hpp"

#include <stdexcept>

namespace squint {

namespace {

SuperFormat shifted_format(const Setup& s, int head, int tail) {
    SuperFormat f;
    const SDim& dh = s.alpha[head];
    const SDim& dt = s.alpha[tail];
    for (int i = 1; i <= dh.total(); ++i)
        f.row_par.push_back(static_cast<std::uint8_t>(((i <= dh.even ? 0 : 1) + s.parity[head]) & 1));
    for (int j = 1; j <= dt.total(); ++j)
        f.col_par.push_back(static_cast<std::uint8_t>(((j <= dt.even ? 0 : 1) + s.parity[tail]) & 1));
    return f;
}

std::vector<int> parity_positions(const std::vector<std::uint8_t>& par, std::uint8_t p) {
    std::vector<int> idx;
    for (int i = 0; i < static_cast<int>(par.size()); ++i)
        if (par[i] == p) idx.push_back(i);
    return idx;
}

template <class T>
SuperMatrix<T> submatrix(const SuperMatrix<T>& m, const std::vector<int>& ri,
                         const std::vector<int>& ci) {
    SuperFormat f;
    for (int i : ri) f.row_par.push_back(m.format().row_par[i]);
    for (int j : ci) f.col_par.push_back(m.format().col_par[j]);
    SuperMatrix<T> r(f, m.zero_element());
    for (std::size_t i = 0; i < ri.size(); ++i)
        for (std::size_t j = 0; j < ci.size(); ++j)
            r.set_unchecked(static_cast<int>(i), static_cast<int>(j), m.at(ri[i], ci[j]));
    return r;
}

// adjugate over commuting even entries: adj(M)_{ij} = (-1)^{i+j} minor_{ji}
template <class T>
SuperMatrix<T> adjugate(const SuperMatrix<T>& m) {
    const int n = m.rows();
    SuperMatrix<T> r(m.format(), m.zero_element());
    if (n == 0) return r;
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<int> ri, ci;
            for (int x : all)
                if (x != j) ri.push_back(x);
            for (int x : all)
                if (x != i) ci.push_back(x);
            T minor = determinant(submatrix(m, ri, ci));
            if ((i + j) & 1) minor = m.zero_element() - minor;
            r.set_unchecked(i, j, std::move(minor));
        }
    return r;
}

} // namespace

SuperMatrix<Polynomial> generic_matrix(const RingPtr& ctx, int edge) {
    const Setup& s = ctx->setup();
    if (edge < 0 || edge >= s.quiver.edge_count()) throw std::invalid_argument("unknown edge");
    SuperFormat f = shifted_format(s, s.quiver.head(edge), s.quiver.tail(edge));
    SuperMatrix<Polynomial> m(f, Polynomial::zero(ctx));
    for (int i = 0; i < f.rows(); ++i)
        for (int j = 0; j < f.cols(); ++j)
            m.set(i, j, Polynomial::variable(ctx, ctx->var_index(edge, i + 1, j + 1)));
    return m;
}

SuperMatrix<Polynomial> path_product(const RingPtr& ctx, const Path& p) {
    if (!path_ok(ctx->quiver(), p)) throw std::invalid_argument("incompatible path");
    SuperMatrix<Polynomial> m = generic_matrix(ctx, p.edges[0]);
    for (std::size_t s = 1; s < p.edges.size(); ++s) m = m * generic_matrix(ctx, p.edges[s]);
    return m;
}

SuperMatrix<Grassmann> evaluate_matrix(const SuperMatrix<Polynomial>& m,
                                       const std::map<int, Grassmann>& point, int k) {
    SuperMatrix<Grassmann> r(m.format(), Grassmann(k));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            r.set(i, j, evaluate_grassmann(m.at(i, j), point, k));
    return r;
}

EvenFraction berezinian(const SuperMatrix<Polynomial>& m, const DenomTablePtr& table) {
    if (!m.format().square_super())
        throw std::invalid_argument("Berezinian needs a square super-format");
    RingPtr ctx = m.zero_element().context();
    auto ev = parity_positions(m.format().row_par, 0);
    auto od = parity_positions(m.format().row_par, 1);
    if (od.empty()) // Ber = det
        return EvenFraction::from_polynomial(table, determinant(m));
    auto x11 = submatrix(m, od, od);
    Polynomial d11 = determinant(x11);
    if (d11.is_zero()) throw std::domain_error("odd-odd block is singular");
    int denom_id = table->register_denominator(d11); // throws when not even-variable
    if (ev.empty()) // Ber = det(X11)^{-1}
        return EvenFraction::over(table, Polynomial::constant(ctx, 1), {{denom_id, 1}});

    auto x00 = submatrix(m, ev, ev);
    auto x01 = submatrix(m, ev, od);
    auto x10 = submatrix(m, od, ev);
    // det(X00 - X01 X11^{-1} X10) = det(X00*det11 - X01*adj(X11)*X10) / det11^m
    SuperMatrix<Polynomial> schur_scaled =
        x00.scaled(d11) - x01 * adjugate(x11) * x10;
    Polynomial num = determinant(schur_scaled);
    int mdim = static_cast<int>(ev.size());
    return EvenFraction::over(table, std::move(num), {{denom_id, mdim + 1}});
}

Grassmann berezinian(const SuperMatrix<Grassmann>& m) {
    if (!m.format().square_super())
        throw std::invalid_argument("Berezinian needs a square super-format");
    auto ev = parity_positions(m.format().row_par, 0);
    auto od = parity_positions(m.format().row_par, 1);
    if (od.empty()) return determinant(m);
    auto x11 = submatrix(m, od, od);
    Grassmann d11 = determinant(x11);
    if (!d11.is_invertible()) throw std::domain_error("odd-odd block is not invertible");
    if (ev.empty()) return d11.inverse();
    auto x00 = submatrix(m, ev, ev);
    auto x01 = submatrix(m, ev, od);
    auto x10 = submatrix(m, od, ev);
    SuperMatrix<Grassmann> x11inv = adjugate(x11).scaled(d11.inverse());
    SuperMatrix<Grassmann> schur = x00 - x01 * x11inv * x10;
    return determinant(schur) * d11.inverse();
}

SuperMatrix<Grassmann> grassmann_identity(const SuperFormat& fmt, int k) {
    if (!fmt.square_super()) throw std::invalid_argument("identity needs a square super-format");
    SuperMatrix<Grassmann> m(fmt, Grassmann(k));
    for (int i = 0; i < fmt.rows(); ++i) m.set(i, i, Grassmann::constant(k, 1));
    return m;
}

namespace {

// inverse of an all-even-entry block over the commuting subalgebra
SuperMatrix<Grassmann> invert_even_block(const SuperMatrix<Grassmann>& m) {
    Grassmann d = determinant(m);
    if (!d.is_invertible()) throw std::domain_error("block is not invertible");
    return adjugate(m).scaled(d.inverse());
}

template <class T>
void place_block(SuperMatrix<T>& dst, const SuperMatrix<T>& block, const std::vector<int>& ri,
                 const std::vector<int>& ci) {
    for (std::size_t i = 0; i < ri.size(); ++i)
        for (std::size_t j = 0; j < ci.size(); ++j)
            dst.set_unchecked(ri[i], ci[j], block.at(static_cast<int>(i), static_cast<int>(j)));
}

} // namespace

SuperMatrix<Grassmann> inverse(const SuperMatrix<Grassmann>& m) {
    if (!m.format().square_super())
        throw std::invalid_argument("inverse needs a square super-format");
    auto ev = parity_positions(m.format().row_par, 0);
    auto od = parity_positions(m.format().row_par, 1);
    if (od.empty()) return invert_even_block(m);
    if (ev.empty()) return invert_even_block(m);
    auto a = submatrix(m, ev, ev);
    auto b = submatrix(m, ev, od);
    auto c = submatrix(m, od, ev);
    auto d = submatrix(m, od, od);
    auto a_inv = invert_even_block(a);
    auto d_inv = invert_even_block(d);
    auto schur_a = invert_even_block(a - b * d_inv * c); // (A - B D^{-1} C)^{-1}
    auto schur_d = invert_even_block(d - c * a_inv * b); // (D - C A^{-1} B)^{-1}
    SuperMatrix<Grassmann> r(m.format(), m.zero_element());
    auto neg = [](const SuperMatrix<Grassmann>& x) {
        return SuperMatrix<Grassmann>(x.format(), x.zero_element()) - x;
    };
    place_block(r, schur_a, ev, ev);
    place_block(r, neg(a_inv * b * schur_d), ev, od);
    place_block(r, neg(d_inv * c * schur_a), od, ev);
    place_block(r, schur_d, od, od);
    return r;
}

} // namespace squint
