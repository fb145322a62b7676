#pragma once

#include "squint/lie.hpp"
#include "squint/linalg.hpp"
#include "squint/ring.hpp"
#include "squint/semi_invariants.hpp"

#include <optional>
#include <string>
#include <vector>

namespace squint {

struct OracleOptions {
    long monomial_cap = 200000; // resource cap on component basis size
    int detlike_param_cap = 16; // symbolic coefficients per det-like instance
};

/// All canonical monomials of multidegree exactly n, in canonical order.
std::vector<Monomial> component_basis(const RingPtr& ctx, const MultiDegree& n);

/// Product over edges of dim Sym^{n_e} of the edge variable superspace.
Integer component_basis_size(const RingPtr& ctx, const MultiDegree& n);

struct DimResult {
    bool capped = false;
    long basis_size = 0;
    long dim = -1; // meaningless when capped
};

/// dim of the sl(alpha)-kernel on the component: the semi-invariant space.
/// Diagonal derivations act diagonally on monomials and are applied as an
/// exact eigenvalue filter; the off-diagonal constraints are stacked and the
/// kernel dimension computed by fraction-free elimination.
DimResult semi_invariant_dim(const RingPtr& ctx, const MultiDegree& n,
                             const OracleOptions& opts = {});

/// dim of the full gl(alpha)-kernel: the invariant space.
DimResult invariant_dim(const RingPtr& ctx, const MultiDegree& n, const OracleOptions& opts = {});

/// Rank of the span, inside the component, of all products of supertrace
/// invariants (closed paths up to max_path_len) and determinant-like
/// components (enumerated specs with q,r <= 2 and symbolic coefficients,
/// pulled back through one round of sink/source normalizing).
DimResult generator_span_dim(const RingPtr& ctx, const MultiDegree& n, int max_path_len,
                             const OracleOptions& opts = {});

struct ComponentReport {
    MultiDegree n;
    long basis_size = 0;
    long ssi_dim = -1;
    long si_dim = -1;
    long span_dim = -1; // -1 when comparison not requested
    bool capped = false;
    std::string verdict; // PASS | FAIL | NA | INCONCLUSIVE
};

ComponentReport oracle_component(const RingPtr& ctx, const MultiDegree& n,
                                 std::optional<int> compare_maxlen,
                                 const OracleOptions& opts = {});

std::string report_line(const Quiver& q, const ComponentReport& r);
std::string report_csv_header();
std::string report_csv_row(const Quiver& q, const ComponentReport& r);

/// Concrete super-representation: per-vertex super-dimension and per-edge
/// ungraded rational matrix of format d(h(e)) x d(t(e)).
struct ConcreteSuperRep {
    SuperDimVector sdim;
    std::vector<RatMatrix> mats; // indexed by edge
};

void validate_rep(const Quiver& q, const ConcreteSuperRep& v);

struct HomExt {
    long hom = 0;
    long ext = 0;
};

/// hom = dim of graded morphism space; ext = hom - <sdim V, sdim W>
/// (nonnegative by the Ringel formula; a negative value is a hard error).
HomExt hom_ext_dims(const Quiver& q, const ConcreteSuperRep& v, const ConcreteSuperRep& w);

/// Independent count through the edge-and-vertex doubled quiver.
long hom_dim_via_doubling(const Quiver& q, const ConcreteSuperRep& v, const ConcreteSuperRep& w);

/// Morphism-space dimension for ordinary quiver representations.
long ordinary_hom_dim(const Quiver& q, const std::vector<int>& dims_v,
                      const std::vector<int>& dims_w, const std::vector<RatMatrix>& mats_v,
                      const std::vector<RatMatrix>& mats_w);

} // namespace squint
