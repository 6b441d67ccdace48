#pragma once

#include "hopfint/hopf.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace hopfint {

// Solvers for mu-integrals on left coideal subalgebras, the induced coideal
// subalgebra of an integral-type element together with its algebra map pi,
// non-degeneracy, group-like projection classification and unimodularity.
// Everything is an exact linear computation over the ambient Hopf algebra.

struct CoidealSubalgebra {
    std::shared_ptr<const HopfAlgebra> ambient;
    Subspace space;
    // Recomputed from the ambient structure at construction, never trusted
    // from input.
    bool is_subalgebra = false;
    bool is_left_coideal = false;
    bool contains_unit = false;

    static CoidealSubalgebra analyze(std::shared_ptr<const HopfAlgebra> ambient, Subspace space);
    int dim() const { return space.dim(); }
};

bool subspace_is_subalgebra(const HopfAlgebra& h, const Subspace& s);
bool subspace_is_left_coideal(const HopfAlgebra& h, const Subspace& s);

/// The algebra structure on the echelon basis of a subalgebra; the unit is
/// present iff the ambient unit lies in the span. Throws when the span is
/// not multiplicatively closed.
FinDimAlgebra induced_algebra(const CoidealSubalgebra& a);

/// The ambient counit evaluated on the echelon basis.
Functional counit_restricted(const CoidealSubalgebra& a);

/// L^A_mu = {Lambda in A : a Lambda = mu(a) Lambda for all a}, returned in
/// ambient coordinates. mu is given on the echelon basis and must be
/// multiplicative and nonzero on A.
Subspace left_integrals(const CoidealSubalgebra& a, const Functional& mu);
/// R^A_mu, the right-sided counterpart.
Subspace right_integrals(const CoidealSubalgebra& a, const Functional& mu);

struct InducedData {
    CoidealSubalgebra subalgebra;  // A_(Lambda~)
    Matrix pi;                     // ambient_dim x dim(A): pi of each basis vector
    Functional mu;                 // eps o pi on the echelon basis

    Vec pi_apply(const Vec& element_of_subalgebra) const;
};

/// A_(Lambda~) = {a : Delta(a)(1 (x) Lambda~) in H (x) k Lambda~} with the
/// map pi read off the k Lambda~ component.
InducedData induced_subalgebra(std::shared_ptr<const HopfAlgebra> h, const Vec& lam_tilde);

/// Delta(Lambda)(1 (x) Lambda) = Lambda (x) Lambda.
bool is_integral_type(const HopfAlgebra& h, const Vec& lambda);

/// Solves Delta(Lambda~)(1 (x) Lambda~) = c (x) Lambda~ and returns c when
/// the residual vanishes and c is itself of integral type.
std::optional<Vec> lambda_integral_type(const HopfAlgebra& h, const Vec& lam_tilde);

/// 1 in V_(Lambda~); cross-checked against V_(Lambda~) = A_(Lambda~). The
/// input must be of Lambda-integral type.
bool is_nondegenerate(std::shared_ptr<const HopfAlgebra> h, const Vec& lam_tilde);

enum class ProjectionClass { none, right, left, two_sided };
const char* to_string(ProjectionClass c);

/// Evaluates the four group-like projection identities on a verified
/// idempotent.
ProjectionClass classify_group_like_projection(const HopfAlgebra& h, const Vec& p);

/// L^A_eps = R^A_eps as subspaces.
bool is_unimodular(const CoidealSubalgebra& a);

/// (1 (x) a) Delta(Lambda~) = (S(pi(a)) (x) 1) Delta(Lambda~) for every
/// basis vector a of the induced subalgebra.
bool check_pi_identity(const HopfAlgebra& h, const Vec& lam_tilde, const InducedData& data);

/// Filters a candidate list down to its integral-type members.
std::vector<Vec> scan_integral_type(const HopfAlgebra& h, const std::vector<Vec>& candidates);

}  // namespace hopfint
