#pragma once

#include "squint/fraction.hpp"
#include "squint/grassmann.hpp"
#include "squint/ring.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace squint {

/// Row/column parity layout of a homogeneous-format matrix. Parities are
/// per-index bit vectors, so parity-shifted layouts (odd indices first, or
/// interleaved) are representable; the standard format is 0-block then
/// 1-block.
struct SuperFormat {
    std::vector<std::uint8_t> row_par;
    std::vector<std::uint8_t> col_par;

    int rows() const { return static_cast<int>(row_par.size()); }
    int cols() const { return static_cast<int>(col_par.size()); }
    int count(const std::vector<std::uint8_t>& v, std::uint8_t p) const {
        int c = 0;
        for (auto x : v)
            if (x == p) ++c;
        return c;
    }
    int row_even() const { return count(row_par, 0); }
    int row_odd() const { return count(row_par, 1); }
    int col_even() const { return count(col_par, 0); }
    int col_odd() const { return count(col_par, 1); }
    bool square_super() const { return row_par == col_par; }
    bool operator==(const SuperFormat&) const = default;

    static SuperFormat standard(int r0, int r1, int c0, int c1) {
        SuperFormat f;
        f.row_par.assign(r0, 0);
        f.row_par.insert(f.row_par.end(), r1, 1);
        f.col_par.assign(c0, 0);
        f.col_par.insert(f.col_par.end(), c1, 1);
        return f;
    }
};

/// Matrix over a parity-graded ring (Polynomial, EvenFraction, Grassmann);
/// entry (i,j) is homogeneous of parity row_par(i)+col_par(j) or zero.
template <class T>
class SuperMatrix {
public:
    SuperMatrix(SuperFormat fmt, T zero)
        : fmt_(std::move(fmt)), zero_(std::move(zero)),
          a_(static_cast<std::size_t>(fmt_.rows()) * fmt_.cols(), zero_) {}

    const SuperFormat& format() const { return fmt_; }
    int rows() const { return fmt_.rows(); }
    int cols() const { return fmt_.cols(); }
    const T& zero_element() const { return zero_; }

    const T& at(int i, int j) const { return a_.at(idx(i, j)); }
    void set(int i, int j, T v) {
        std::uint8_t want = static_cast<std::uint8_t>((fmt_.row_par.at(i) + fmt_.col_par.at(j)) & 1);
        if (!v.parity_compatible(want))
            throw std::invalid_argument("entry parity violates the block format");
        a_.at(idx(i, j)) = std::move(v);
    }
    /// Bypass the homogeneity check (for raw containers of points etc.).
    void set_unchecked(int i, int j, T v) { a_.at(idx(i, j)) = std::move(v); }

    SuperMatrix operator+(const SuperMatrix& o) const {
        if (!(fmt_ == o.fmt_)) throw std::invalid_argument("format mismatch in matrix sum");
        SuperMatrix r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = r.a_[i] + o.a_[i];
        return r;
    }
    SuperMatrix operator-(const SuperMatrix& o) const {
        if (!(fmt_ == o.fmt_)) throw std::invalid_argument("format mismatch in matrix difference");
        SuperMatrix r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = r.a_[i] - o.a_[i];
        return r;
    }
    SuperMatrix operator*(const SuperMatrix& o) const {
        if (fmt_.col_par != o.fmt_.row_par)
            throw std::invalid_argument("format mismatch in matrix product");
        SuperFormat f;
        f.row_par = fmt_.row_par;
        f.col_par = o.fmt_.col_par;
        SuperMatrix r(f, zero_);
        for (int i = 0; i < rows(); ++i)
            for (int j = 0; j < o.cols(); ++j) {
                T acc = zero_;
                for (int m = 0; m < cols(); ++m) acc = acc + at(i, m) * o.at(m, j);
                r.a_[r.idx(i, j)] = std::move(acc);
            }
        return r;
    }
    template <class S>
    SuperMatrix scaled(const S& c) const {
        SuperMatrix r = *this;
        for (auto& x : r.a_) x = x * c;
        return r;
    }
    bool operator==(const SuperMatrix& o) const { return fmt_ == o.fmt_ && a_ == o.a_; }

private:
    SuperFormat fmt_;
    T zero_;
    std::vector<T> a_;
    std::size_t idx(int i, int j) const {
        if (i < 0 || i >= rows() || j < 0 || j >= cols())
            throw std::out_of_range("matrix index");
        return static_cast<std::size_t>(i) * cols() + j;
    }
};

/// str = trace over even rows minus trace over odd rows.
template <class T>
T supertrace(const SuperMatrix<T>& m) {
    if (!m.format().square_super())
        throw std::invalid_argument("supertrace needs a square super-format");
    T acc = m.zero_element();
    for (int i = 0; i < m.rows(); ++i)
        acc = m.format().row_par[i] ? acc - m.at(i, i) : acc + m.at(i, i);
    return acc;
}

inline Polynomial one_like(const Polynomial& zero) {
    return Polynomial::constant(zero.context(), 1);
}
inline Grassmann one_like(const Grassmann& zero) {
    return Grassmann::constant(zero.generators(), 1);
}
inline EvenFraction one_like(const EvenFraction& zero) {
    return EvenFraction::from_polynomial(zero.table(),
                                         Polynomial::constant(zero.numerator().context(), 1));
}

/// Division-free determinant over commuting (all-even) entries, by dynamic
/// programming over column subsets. The even subring may contain nilpotents,
/// so no pivoting/division scheme is safe here; this is exact regardless.
template <class T>
T determinant(const SuperMatrix<T>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const int n = m.rows();
    if (n > 20) throw std::invalid_argument("determinant size cap exceeded");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!m.at(i, j).parity_compatible(0))
                throw std::invalid_argument("determinant requires even entries");
    if (n == 0) return one_like(m.zero_element());
    // f(S) = det of the first |S| rows on column set S
    std::map<std::uint32_t, T> layer;
    layer.emplace(0u, one_like(m.zero_element()));
    for (int r = 0; r < n; ++r) {
        std::map<std::uint32_t, T> next;
        for (const auto& [mask, val] : layer) {
            int used_before = 0; // set columns below j: Laplace sign is (-1)^{r + used_before}
            for (int j = 0; j < n; ++j) {
                if (mask & (1u << j)) {
                    ++used_before;
                    continue;
                }
                T contrib = val * m.at(r, j);
                if ((r + used_before) & 1) contrib = m.zero_element() - contrib;
                auto [it, inserted] = next.emplace(mask | (1u << j), contrib);
                if (!inserted) it->second = it->second + contrib;
            }
        }
        layer = std::move(next);
    }
    return layer.begin()->second;
}

/// Generic matrix of an edge: format alpha(h(e)) x alpha(t(e)) with the
/// parity-vector twist in the row/column layout; entry (i,j) = x[e,i,j].
SuperMatrix<Polynomial> generic_matrix(const RingPtr& ctx, int edge);

/// Product of generic matrices along a path, in stored order
/// X(e_1) X(e_2) ... X(e_k); format alpha(h(e_1)) x alpha(t(e_k)).
SuperMatrix<Polynomial> path_product(const RingPtr& ctx, const Path& p);

/// Entrywise evaluation at a Grassmann point.
SuperMatrix<Grassmann> evaluate_matrix(const SuperMatrix<Polynomial>& m,
                                       const std::map<int, Grassmann>& point, int k);

/// Ber(X) = det(X00 - X01 X11^{-1} X10) det(X11)^{-1} as an element of the
/// localization at det(X11); at n=0 this is det(X), at m=0 det(X)^{-1}.
/// Requires the odd-odd block determinant to live in even variables only.
EvenFraction berezinian(const SuperMatrix<Polynomial>& m, const DenomTablePtr& table);

/// Ber at a Grassmann point (diagonal blocks invertible over Lambda_k).
Grassmann berezinian(const SuperMatrix<Grassmann>& m);

/// Inverse of an invertible even matrix over Lambda_k via the standard
/// block (antipode) formula; diagonal-block inversions use adjugates over
/// the commuting even subalgebra.
SuperMatrix<Grassmann> inverse(const SuperMatrix<Grassmann>& m);

SuperMatrix<Grassmann> grassmann_identity(const SuperFormat& fmt, int k);

} // namespace squint
