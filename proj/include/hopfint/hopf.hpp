#pragma once

#include "hopfint/algebra.hpp"

#include <memory>
#include <string>
#include <vector>

namespace hopfint {

/// Families with closed-form constructions; enumeration of group-likes is
/// only offered for these.
enum class Family { none, taft, group_algebra };

struct SparseTensorTerm {
    int first, second;
    CycScalar coeff;
};
/// Sparse element of H (x) H.
using SparseTensor = std::vector<SparseTensorTerm>;

// A finite-dimensional Hopf algebra with invertible antipode. The antipode
// inverse is computed once at assembly; axiom verification is eager for the
// built-in families and on demand (verify_hopf_axioms) for loaded data.
class HopfAlgebra {
  public:
    static HopfAlgebra assemble(FinDimAlgebra algebra, std::vector<SparseTensor> delta,
                                Functional counit, Matrix antipode,
                                Family family = Family::none, int family_n = 0);

    const FinDimAlgebra& algebra() const { return algebra_; }
    int dim() const { return algebra_.dim(); }
    int conductor() const { return algebra_.conductor(); }
    const Vec& unit() const { return *algebra_.unit(); }

    const SparseTensor& delta_basis(int i) const { return delta_[i]; }
    TensorElement delta(const Vec& v) const;
    const Functional& counit() const { return counit_; }
    CycScalar counit_value(const Vec& v) const { return counit_(v); }

    const Matrix& antipode_matrix() const { return antipode_; }
    const Matrix& antipode_inv_matrix() const { return antipode_inv_; }
    Vec antipode(const Vec& v) const { return antipode_.apply(v); }
    Vec antipode_inv(const Vec& v) const { return antipode_inv_.apply(v); }

    Family family() const { return family_; }
    int family_n() const { return family_n_; }

    Vec multiply(const Vec& a, const Vec& b) const { return algebra_.multiply(a, b); }
    TensorElement tensor_multiply(const TensorElement& s, const TensorElement& t) const;
    /// m(t): multiplies the two legs together.
    Vec multiply_legs(const TensorElement& t) const;

  private:
    HopfAlgebra() = default;

    FinDimAlgebra algebra_;
    std::vector<SparseTensor> delta_;
    Functional counit_;
    Matrix antipode_;
    Matrix antipode_inv_;
    Family family_ = Family::none;
    int family_n_ = 0;
};

struct AxiomCheck {
    std::string name;
    bool passed;
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

/// Evaluates every Hopf axiom exactly on all basis vectors; failures are
/// data, not errors.
AxiomReport verify_hopf_axioms(const HopfAlgebra& h);

/// A verified group-like: Delta(g) = g (x) g and eps(g) = 1.
class GroupLike {
  public:
    GroupLike(const HopfAlgebra& h, Vec v);
    const Vec& vector() const { return vector_; }

  private:
    Vec vector_;
};

bool is_group_like(const HopfAlgebra& h, const Vec& v);

/// V_Lambda: span of the second tensor legs of Delta(Lambda).
Subspace smallest_left_coideal(const HopfAlgebra& h, const Vec& lambda);
/// The right-coideal counterpart: span of the first tensor legs.
Subspace smallest_right_coideal(const HopfAlgebra& h, const Vec& lambda);

/// Extends a functional given on the echelon basis of a subspace to the
/// ambient space, zero on the non-pivot complement.
Functional extend_by_zero(const Subspace& s, const Vec& values_on_basis);

/// U(nu) = (id (x) nu)(Delta(Lambda)); nu is given on the echelon basis of
/// V_Lambda and extended by zero.
Vec u_map(const HopfAlgebra& h, const Vec& lambda, const Vec& nu_on_coideal);

/// a * mu = (mu (x) id) Delta(a).
Vec act_left(const HopfAlgebra& h, const Functional& mu, const Vec& a);
/// mu * a = (id (x) mu) Delta(a).
Vec act_right(const HopfAlgebra& h, const Vec& a, const Functional& mu);
/// (mu * nu)(a) = (mu (x) nu) Delta(a); makes (H', *, eps) a unital algebra.
Functional convolve(const HopfAlgebra& h, const Functional& mu, const Functional& nu);

/// The group-likes {g^k} of a built-in family, each re-verified. Throws on
/// algebras without a declared family.
std::vector<GroupLike> enumerate_group_likes_in_family(const HopfAlgebra& h);

/// The group algebra of Z/n over Q, with the antipode solved from the
/// antipode axiom.
std::shared_ptr<const HopfAlgebra> group_algebra(int n);

Vec apply_second_leg_functional(const TensorElement& t, const Functional& f);
Vec apply_first_leg_functional(const TensorElement& t, const Functional& f);
TensorElement map_first_leg(const TensorElement& t, const Matrix& m);
TensorElement map_second_leg(const TensorElement& t, const Matrix& m);

}  // namespace hopfint
