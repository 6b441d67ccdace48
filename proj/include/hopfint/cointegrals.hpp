#pragma once

#include "hopfint/integrals.hpp"

namespace hopfint {

// g-cointegrals on left coideals: phi in V' with (id (x) phi) Delta(a) =
// phi(a) g for all a in V. Functionals are stored by their values on the
// echelon basis of V and extended by zero to the ambient space whenever an
// evaluation is needed.

/// A verified g-cointegral on a left coideal V.
class Cointegral {
  public:
    /// Verifies the defining identity on every basis vector of V.
    Cointegral(const HopfAlgebra& h, Subspace space, GroupLike g, Vec values_on_basis);

    const Subspace& space() const { return space_; }
    const GroupLike& group_like() const { return g_; }
    const Vec& values() const { return values_; }
    /// Extension by zero to H.
    Functional ambient() const { return extend_by_zero(space_, values_); }
    /// phi(v) for v in V (throws when v is outside).
    CycScalar evaluate(const Vec& v) const;

  private:
    Subspace space_;
    GroupLike g_;
    Vec values_;
};

/// Solution space of the g-cointegral equations as a subspace of k^dim(V)
/// (coordinates relative to the echelon basis of V). Throws when V is not a
/// left coideal.
Subspace g_cointegrals(const HopfAlgebra& h, const Subspace& v, const GroupLike& g);

/// Rescales a nonzero solution so that phi(Lambda) = 1, equivalently
/// U(phi) = g. A nonzero cointegral with phi(Lambda) = 0 is impossible and
/// reported as a contradiction.
Cointegral normalize_on(const HopfAlgebra& h, const Subspace& v, const GroupLike& g,
                        const Vec& phi_on_basis, const Vec& lambda);

enum class Faithfulness { yes, no, not_applicable };

/// Two-sided Gram test on V's own multiplication; "not applicable" when V
/// is not multiplicatively closed.
Faithfulness cointegral_faithful(const HopfAlgebra& h, const Subspace& v, const Vec& phi_on_basis);

/// (1 (x) Lambda) Delta(Lambda) = S(Lambda) g (x) Lambda, evaluated exactly.
/// Lambda must be of integral type and phi a faithful cointegral on
/// V_Lambda; the identity is evaluated against the supplied g.
bool check_two_sided_identity(const HopfAlgebra& h, const Vec& lambda, const GroupLike& g,
                              const Cointegral& phi);

/// Solves S(a) y = u for a in V_P; y must be cyclic and separating for that
/// action, i.e. a -> S(a) y must be a bijection V_P -> _P V.
Vec iota_y(const HopfAlgebra& h, const Vec& p, const Vec& y, const Vec& u);

/// z_y = P_(2) iota_y(P_(1)); central in V_P.
Vec z_element(const HopfAlgebra& h, const Vec& p, const Vec& y);

/// Ad_P(a) = P_(2) a S^{-1}(P_(1)).
Vec ad_p(const HopfAlgebra& h, const Vec& p, const Vec& a);

/// Solves z w = 1 inside A and confirms w z = 1; absence means z is not
/// invertible in A.
std::optional<Vec> is_invertible_in(const CoidealSubalgebra& a, const Vec& z);

}  // namespace hopfint
