#pragma once

#include "squint/grassmann.hpp"
#include "squint/quiver.hpp"
#include "squint/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace squint {

/// One generator of the coordinate superalgebra: x[e,i,j] with the parity
/// rule of the generic matrix twisted by the parity vector, or an auxiliary
/// even central parameter (edge = -1, zero multidegree).
struct VarInfo {
    int edge = -1;
    int row = 0; // 1-based
    int col = 0; // 1-based
    std::uint8_t parity = 0;
    std::string name;
};

/// Immutable variable table for the ring K[SRep_{Pi^b alpha}(Q)], optionally
/// extended by auxiliary even parameters (used for det-like coefficient
/// bookkeeping and similar). The global variable order is
/// (edge declaration index, row, col), parameters after all edge variables;
/// every Koszul sign in the toolkit is computed against this order.
class RingContext {
public:
    static std::shared_ptr<const RingContext> make(Setup setup);
    static std::shared_ptr<const RingContext> make(Setup setup,
                                                   const std::vector<std::string>& param_names);

    const Setup& setup() const { return setup_; }
    const Quiver& quiver() const { return setup_.quiver; }
    const SuperDimVector& alpha() const { return setup_.alpha; }
    const ParityVector& parity_vector() const { return setup_.parity; }

    int var_count() const { return static_cast<int>(vars_.size()); }
    int edge_var_count() const { return edge_var_count_; }
    int param_count() const { return var_count() - edge_var_count_; }

    const VarInfo& var(int v) const { return vars_.at(v); }
    std::uint8_t var_parity(int v) const { return vars_.at(v).parity; }
    bool is_param(int v) const { return vars_.at(v).edge < 0; }

    /// Index of x[e,i,j]; i within [1, d(h(e))], j within [1, d(t(e))].
    int var_index(int edge, int row, int col) const;
    int param_index(int k) const; // k-th auxiliary parameter, 0-based

    /// Untwisted generic-matrix parity of position (i,j) on edge e.
    std::uint8_t base_parity(int edge, int row, int col) const;

private:
    RingContext() = default;
    Setup setup_;
    std::vector<VarInfo> vars_;
    std::vector<int> edge_var_base_;
    int edge_var_count_ = 0;
};

using RingPtr = std::shared_ptr<const RingContext>;

/// Canonical monomial: factors sorted by variable index, odd variables
/// square-free with exponent 1.
struct Monomial {
    std::vector<std::pair<int, int>> factors; // (variable, exponent > 0)

    bool empty() const { return factors.empty(); }
    int degree() const;
    int exponent(int var) const;
    bool operator==(const Monomial&) const = default;
    bool operator<(const Monomial& o) const { return factors < o.factors; }
};

/// Merge two canonical monomials; returns {monomial, koszul sign} or nullopt
/// when an odd variable would square.
std::optional<std::pair<Monomial, int>> monomial_mul(const RingContext& ctx, const Monomial& a,
                                                     const Monomial& b);

std::uint8_t monomial_parity(const RingContext& ctx, const Monomial& m);
MultiDegree monomial_multidegree(const RingContext& ctx, const Monomial& m);

/// Element of the supercommutative coordinate ring; exact rational
/// coefficients on canonical monomials, no zero coefficients stored.
class Polynomial {
public:
    Polynomial() = default; // empty shell; only zero() etc. make usable values
    static Polynomial zero(RingPtr ctx);
    static Polynomial constant(RingPtr ctx, Rational c);
    static Polynomial variable(RingPtr ctx, int var);
    static Polynomial monomial(RingPtr ctx, const Monomial& m, Rational c);

    const RingPtr& context() const { return ctx_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial pow(int n) const;

    /// Parity if every monomial agrees (zero counts as every parity).
    std::optional<std::uint8_t> parity() const;
    bool parity_compatible(std::uint8_t want) const;

    /// Multidegree if multihomogeneous; nullopt otherwise (zero => degree 0).
    std::optional<MultiDegree> multidegree() const;
    std::map<MultiDegree, Polynomial> components_by_multidegree() const;
    /// Split by the parameter-only part of each monomial.
    std::map<Monomial, Polynomial> components_by_param_monomial() const;
    int total_degree() const; // max over monomials

    Rational coefficient(const Monomial& m) const;

private:
    RingPtr ctx_;
    std::map<Monomial, Rational> terms_;
    void add_term(const Monomial& m, const Rational& c);
    friend Polynomial substitute(const Polynomial&, const std::map<int, Polynomial>&, RingPtr);
    friend Polynomial derivation_apply(const std::map<int, Polynomial>&, std::uint8_t,
                                       const Polynomial&);
    friend Grassmann evaluate_grassmann(const Polynomial&, const std::map<int, Grassmann>&, int);
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

/// Ring homomorphism sending variable v to images.at(v); every image must be
/// homogeneous of the parity of v (or zero). Variables without an entry map
/// to themselves when target == source context, otherwise must be covered.
Polynomial substitute(const Polynomial& f, const std::map<int, Polynomial>& images,
                      RingPtr target);

/// Right-extension of `images` to a superderivation of parity d_parity:
/// D(v_1...v_l) = sum_i (-1)^{d_parity*(|v_1|+...+|v_{i-1}|)} v_1...D(v_i)...v_l.
/// Variables absent from `images` are annihilated. Every image must be
/// homogeneous of parity |v| + d_parity (or zero).
Polynomial derivation_apply(const std::map<int, Polynomial>& images, std::uint8_t d_parity,
                            const Polynomial& f);

/// Evaluate as a superalgebra homomorphism into the Grassmann algebra with k
/// generators; the point must assign every occurring variable an element of
/// matching parity.
Grassmann evaluate_grassmann(const Polynomial& f, const std::map<int, Grassmann>& point, int k);

} // namespace squint
