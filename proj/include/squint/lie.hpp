#pragma once

#include "squint/ring.hpp"
#include "squint/supermatrix.hpp"

#include <map>
#include <string>
#include <vector>

namespace squint {

/// Elementary matrix E_kl in gl(alpha(vertex)); 1-based indices within
/// [1, d_alpha(vertex)]. Parity is blockpar(k)+blockpar(l) with respect to
/// the untwisted format alpha(vertex); str(E_kl) = delta_kl * (+1 on the
/// even block, -1 on the odd block).
struct LieBasisElement {
    int vertex = 0;
    int k = 1;
    int l = 1;
};

std::uint8_t lie_parity(const Setup& s, const LieBasisElement& g);
int supertrace_sign(const Setup& s, const LieBasisElement& g);
std::string lie_name(const Setup& s, const LieBasisElement& g);

/// Integer combination of elementary matrices of one parity at one vertex
/// (single E_kl, or a supertrace-zero diagonal difference).
struct LieCombo {
    std::vector<std::pair<LieBasisElement, int>> terms;
    std::uint8_t parity = 0;
    std::string name;
};

/// All d^2 elementary matrices at a vertex, as singleton combos.
std::vector<LieCombo> gl_basis(const Setup& s, int vertex);

/// Basis of the supertrace-zero subalgebra: off-diagonal E_kl plus the d-1
/// diagonal combinations E_kk - str(E_kk)str(E_{k+1,k+1}) E_{k+1,k+1}.
std::vector<LieCombo> sl_basis(const Setup& s, int vertex);

/// Images of the coordinate generators under E_kl at its vertex:
///   x[e,i,j] gains  +delta_{ik} x[e,l,j]                    when h(e) = vertex,
///            and    -(-1)^{|E_kl| |x[e,i,k]|} delta_{lj} x[e,i,k] when t(e) = vertex;
/// loops receive both. Variables not listed map to zero.
std::map<int, Polynomial> action_images(const RingPtr& ctx, const LieBasisElement& g);
std::map<int, Polynomial> action_images(const RingPtr& ctx, const LieCombo& g);

Polynomial apply_lie(const RingPtr& ctx, const LieCombo& g, const Polynomial& f);
Polynomial apply_lie(const RingPtr& ctx, const LieBasisElement& g, const Polynomial& f);

/// Exponents of the per-vertex Berezinian characters.
using Weight = std::vector<long>;

struct LieVerdict {
    bool ok = true;
    std::string failing_gen; // empty when ok
    Polynomial residual;     // D f - expected, for the failing generator
};

/// True iff every sl(alpha(a)) basis derivation annihilates f.
LieVerdict is_sl_invariant(const RingPtr& ctx, const Polynomial& f);

/// True iff D f = w(a) str(D) f for every gl basis element D at every vertex.
LieVerdict check_weight(const RingPtr& ctx, const Polynomial& f, const Weight& w);

/// Line-oriented verdict: "INVARIANT", "WEIGHT a=-1 b=+1", or
/// "FAIL gen=E[1,2]@b residual=...".
std::string verdict_line(const Setup& s, const LieVerdict& v, const Weight* w = nullptr);

/// Finite test over Lambda_k: evaluates f at the transformed point
/// (g.x)(e) = g(h(e)) x(e) g(t(e))^{-1} and compares against
/// prod_a Ber(g(a))^{w(a)} * f(x). Group elements are per-vertex invertible
/// even matrices in the parity-shifted layout of the vertex.
bool group_point_test(const RingPtr& ctx, const Polynomial& f, const Weight& w,
                      const std::vector<SuperMatrix<Grassmann>>& g,
                      const std::map<int, Grassmann>& point, int k);

/// Parity-shifted row/column layout of a square matrix at a vertex.
SuperFormat vertex_format(const Setup& s, int vertex);

} // namespace squint
