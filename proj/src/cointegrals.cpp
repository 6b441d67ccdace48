#include "hopfint/cointegrals.hpp"

#include <stdexcept>

namespace hopfint {

namespace {

bool cointegral_identity_holds(const HopfAlgebra& h, const Subspace& v, const Vec& g_vec,
                               const Vec& values) {
    const Functional phi = extend_by_zero(v, values);
    for (int m = 0; m < v.dim(); ++m) {
        const Vec a = v.basis_vector(m);
        const Vec lhs = apply_second_leg_functional(h.delta(a), phi);
        if (lhs != scale(values[m], g_vec)) return false;
    }
    return true;
}

}  // namespace

Cointegral::Cointegral(const HopfAlgebra& h, Subspace space, GroupLike g, Vec values_on_basis)
    : space_(std::move(space)), g_(std::move(g)), values_(std::move(values_on_basis)) {
    if (static_cast<int>(values_.size()) != space_.dim())
        throw std::invalid_argument("cointegral values must match the coideal basis");
    if (!cointegral_identity_holds(h, space_, g_.vector(), values_))
        throw std::invalid_argument("not a g-cointegral on V");
}

CycScalar Cointegral::evaluate(const Vec& v) const {
    auto coords = space_.coordinates(v);
    if (!coords) throw std::invalid_argument("evaluation point outside the coideal");
    CycScalar acc = CycScalar::zero(space_.conductor());
    for (int i = 0; i < space_.dim(); ++i) acc += (*coords)[i] * values_[i];
    return acc;
}

Subspace g_cointegrals(const HopfAlgebra& h, const Subspace& v, const GroupLike& g) {
    if (!subspace_is_left_coideal(h, v)) throw std::invalid_argument("V is not a left coideal");
    const int n = h.dim();
    const int k = v.dim();
    const Vec& gv = g.vector();
    // Unknowns: the k values of phi on the echelon basis. For basis vector
    // b_m the equation (id (x) phi) Delta(b_m) - phi(b_m) g = 0 contributes n
    // rows; the second-leg pairing only sees the pivot columns.
    Matrix system(n * std::max(k, 1), k, h.conductor());
    for (int m = 0; m < k; ++m) {
        const TensorElement t = h.delta(v.basis_vector(m));
        for (int l = 0; l < k; ++l) {
            const int pivot = v.pivots()[l];
            for (int r = 0; r < n; ++r) {
                CycScalar coeff = t.at(r, pivot);
                if (l == m) coeff -= gv[r];
                system.at(m * n + r, l) = coeff;
            }
        }
    }
    return kernel(system);
}

Cointegral normalize_on(const HopfAlgebra& h, const Subspace& v, const GroupLike& g,
                        const Vec& phi_on_basis, const Vec& lambda) {
    if (is_zero_vec(phi_on_basis)) throw std::invalid_argument("zero functional");
    auto coords = v.coordinates(lambda);
    if (!coords) throw std::invalid_argument("Lambda lies outside V");
    CycScalar value = CycScalar::zero(h.conductor());
    for (int i = 0; i < v.dim(); ++i) value += (*coords)[i] * phi_on_basis[i];
    if (value.is_zero())
        throw std::domain_error(
            "phi(Lambda) = 0 for a nonzero g-cointegral; contradicts one-dimensionality");
    return Cointegral(h, v, g, scale(value.inverse(), phi_on_basis));
}

Faithfulness cointegral_faithful(const HopfAlgebra& h, const Subspace& v, const Vec& phi_on_basis) {
    if (!subspace_is_subalgebra(h, v)) return Faithfulness::not_applicable;
    const int k = v.dim();
    // gram_{ij} = phi(b_i b_j) over V's own multiplication.
    Matrix gram_m(k, k, h.conductor());
    const Functional phi = extend_by_zero(v, phi_on_basis);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            gram_m.at(i, j) = phi(h.multiply(v.basis_vector(i), v.basis_vector(j)));
    return rank(gram_m) == k ? Faithfulness::yes : Faithfulness::no;
}

bool check_two_sided_identity(const HopfAlgebra& h, const Vec& lambda, const GroupLike& g,
                              const Cointegral& phi) {
    if (!is_integral_type(h, lambda))
        throw std::invalid_argument("Lambda is not of integral type");
    if (phi.space() != smallest_left_coideal(h, lambda))
        throw std::invalid_argument("phi is not a cointegral on V_Lambda");
    if (cointegral_faithful(h, phi.space(), phi.values()) != Faithfulness::yes)
        throw std::invalid_argument("phi is not a faithful cointegral on V_Lambda");
    const TensorElement lhs = h.tensor_multiply(tensor_of(h.unit(), lambda), h.delta(lambda));
    const Vec s_lambda_g = h.multiply(h.antipode(lambda), g.vector());
    return lhs == tensor_of(s_lambda_g, lambda);
}

namespace {

// Matrix of a -> S(a) y on the echelon basis of V_P, checked to be a
// bijection onto _P V.
Matrix cyclic_action_matrix(const HopfAlgebra& h, const Subspace& v_p, const Subspace& pv,
                            const Vec& y) {
    if (is_zero_vec(y)) throw std::invalid_argument("y must be nonzero");
    if (!pv.contains(y)) throw std::invalid_argument("y does not lie in _P V");
    const int n = h.dim();
    const int k = v_p.dim();
    Matrix m(n, k, h.conductor());
    for (int c = 0; c < k; ++c) {
        const Vec image = h.multiply(h.antipode(v_p.basis_vector(c)), y);
        if (!pv.contains(image))
            throw std::invalid_argument("the action a -> S(a) y does not land in _P V");
        for (int r = 0; r < n; ++r) m.at(r, c) = image[r];
    }
    if (rank(m) != k || k != pv.dim())
        throw std::invalid_argument("y is not cyclic and separating for a -> S(a) y");
    return m;
}

}  // namespace

Vec iota_y(const HopfAlgebra& h, const Vec& p, const Vec& y, const Vec& u) {
    const Subspace v_p = smallest_left_coideal(h, p);
    const Subspace pv = smallest_right_coideal(h, p);
    const Matrix m = cyclic_action_matrix(h, v_p, pv, y);
    auto coords = solve(m, u);
    if (!coords) throw std::invalid_argument("iota_y: u is not of the form S(a) y");
    return v_p.from_coordinates(*coords);
}

Vec z_element(const HopfAlgebra& h, const Vec& p, const Vec& y) {
    const Subspace v_p = smallest_left_coideal(h, p);
    const Subspace pv = smallest_right_coideal(h, p);
    const Matrix m = cyclic_action_matrix(h, v_p, pv, y);
    const TensorElement d = h.delta(p);
    const int n = h.dim();
    Vec z = zero_vec(n, h.conductor());
    // z = sum over second-leg basis of e_j * iota_y(first-leg slice j).
    for (int j = 0; j < n; ++j) {
        const Vec w = d.matrix().col(j);
        if (is_zero_vec(w)) continue;
        auto coords = solve(m, w);
        if (!coords) throw std::logic_error("first-leg slice escaped the image of a -> S(a) y");
        const Vec iota_w = v_p.from_coordinates(*coords);
        z = add(z, h.multiply(unit_vec(n, h.conductor(), j), iota_w));
    }
    return z;
}

Vec ad_p(const HopfAlgebra& h, const Vec& p, const Vec& a) {
    const TensorElement d = h.delta(p);
    const int n = h.dim();
    Vec out = zero_vec(n, h.conductor());
    for (int i = 0; i < n; ++i) {
        const Vec s_inv_first = h.antipode_inv(unit_vec(n, h.conductor(), i));
        for (int j = 0; j < n; ++j) {
            if (d.at(i, j).is_zero()) continue;
            const Vec term = h.multiply(h.multiply(unit_vec(n, h.conductor(), j), a), s_inv_first);
            out = add(out, scale(d.at(i, j), term));
        }
    }
    return out;
}

std::optional<Vec> is_invertible_in(const CoidealSubalgebra& a, const Vec& z) {
    if (!a.space.contains(z)) throw std::invalid_argument("z does not lie in A");
    if (!a.contains_unit) throw std::invalid_argument("A does not contain the unit");
    const HopfAlgebra& h = *a.ambient;
    const int n = h.dim();
    const int k = a.dim();
    Matrix m(n, k, h.conductor());
    for (int c = 0; c < k; ++c) {
        const Vec prod = h.multiply(z, a.space.basis_vector(c));
        for (int r = 0; r < n; ++r) m.at(r, c) = prod[r];
    }
    auto coords = solve(m, h.unit());
    if (!coords) return std::nullopt;
    const Vec w = a.space.from_coordinates(*coords);
    // One-sided inverses are two-sided in a finite-dimensional algebra;
    // asserted, not assumed.
    if (h.multiply(w, z) != h.unit())
        throw std::logic_error("right inverse is not a left inverse; internal inconsistency");
    return w;
}

}  // namespace hopfint
