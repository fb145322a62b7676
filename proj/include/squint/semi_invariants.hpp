#pragma once

#include "squint/lie.hpp"
#include "squint/quiver.hpp"
#include "squint/ring.hpp"
#include "squint/supermatrix.hpp"

#include <optional>
#include <set>
#include <vector>

namespace squint {

/// str(X(p)) of a closed path: an invariant of weight zero, multidegree
/// sum of delta_{e_i}.
Polynomial strace_invariant(const RingPtr& ctx, const Path& p);

/// Determinant-like construction: sinks A with multiplicities q, sources C
/// with multiplicities r, all extremal with purely even shifted spaces;
/// blocks are linear combinations of path matrices from C to A. Blocks are
/// addressed by block position (u,v), u in [0, sum q), v in [0, sum r);
/// each position carries its own combination.
struct DetLikeSpec {
    std::vector<std::pair<int, int>> sinks;   // (vertex, q >= 1)
    std::vector<std::pair<int, int>> sources; // (vertex, r >= 1)
    std::map<std::pair<int, int>, std::vector<std::pair<Rational, Path>>> blocks;
};

struct DetLikeResult {
    Polynomial det;
    std::vector<std::pair<MultiDegree, Polynomial>> components; // sorted by multidegree
    Weight weight;
};

/// Validates the spec, builds the t x t matrix, returns det, its nonzero
/// multihomogeneous components, and the weight (+q_i at sinks, -r_j at
/// sources, in Berezinian units: negated at vertices with parity bit 1).
DetLikeResult detlike_semi_invariant(const RingPtr& ctx, const DetLikeSpec& spec);

/// Ring context over the n-polarized quiver (same vertices, alpha, parity).
RingPtr polarized_context(const RingPtr& ctx, const MultiDegree& n);

struct PolarizeResult {
    RingPtr ctx; // over Q(n)
    Polynomial value;
};

/// Polarization operator P_s: the multidegree-s component of f after the
/// substitution X(e) -> sum_i X(e_i). `split[e]` lists s(e_1..e_{n_e}) and
/// must sum to n_e, where n is the multidegree of f.
PolarizeResult polarize(const Polynomial& f, const std::vector<std::vector<int>>& split);

/// Partial linearization P_T followed by the restitution X(e_i) -> X(e) for
/// e in T; true iff the result equals (prod_{e in T} n_e!) f exactly.
bool linearize_and_restitute_check(const Polynomial& f, const std::set<int>& t_edges);

/// Substitutes the identity matrix for the normalization edge of `norm` and
/// re-reads the remaining variables over the base ring; a superalgebra
/// homomorphism (the reduction surjection).
Polynomial reduce_normalized(const Polynomial& f, const Normalized& norm, const RingPtr& base);

/// Weight from the diagonal derivations: w(a) with D_{E_kk@a} f =
/// str(E_kk) w(a) f for all k; nullopt when f is not scaled consistently.
std::optional<Weight> weight_of(const RingPtr& ctx, const Polynomial& f);

} // namespace squint
