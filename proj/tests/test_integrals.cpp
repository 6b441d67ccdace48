#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

#include "hopfint/integrals.hpp"

using namespace hopfint;

namespace {

Subspace line(const Vec& v, int dim, int conductor) {
    return Subspace::from_spanning({v}, dim, conductor);
}

// The annihilator route of L^A_mu pushed back to ambient coordinates.
Subspace integrals_via_annihilator(const CoidealSubalgebra& a, const Functional& mu, Side side) {
    const FinDimAlgebra alg = induced_algebra(a);
    const Subspace ker_mu = functional_kernel(alg, mu);
    const Subspace sol = side == Side::left ? right_annihilator(alg, ker_mu)
                                            : left_annihilator(alg, ker_mu);
    std::vector<Vec> ambient;
    for (int i = 0; i < sol.dim(); ++i)
        ambient.push_back(a.space.from_coordinates(sol.basis_vector(i)));
    return Subspace::from_spanning(ambient, a.ambient->dim(), a.ambient->conductor());
}

}  // namespace

TEST_CASE("eps-integrals of the named families") {
    for (int n : {2, 3, 4}) {
        const TaftAlgebra& t = testing::taft(n);
        const int dim = t.hopf->dim();
        for (int d : divisors(n)) {
            const CoidealSubalgebra h_d = hopf_sub_h_d(t, d);
            const Subspace l = left_integrals(h_d, counit_restricted(h_d));
            CHECK(l == line(p_d(t, d), dim, n));
            const CoidealSubalgebra n_dx = coideal_n_dx(t, d);
            const Subspace ln = left_integrals(n_dx, counit_restricted(n_dx));
            CHECK(ln == line(lambda_dx(t, d), dim, n));
            CHECK(right_integrals(n_dx, counit_restricted(n_dx)).dim() == 1);
        }
        for (const auto& beta : default_beta_grid(n)) {
            const CoidealSubalgebra v = coideal_v_p_beta(t, beta);
            CHECK(left_integrals(v, counit_restricted(v)) == line(p_beta(t, beta), dim, n));
        }
    }
    // d = n: A = span{1} has L = span{1}.
    const TaftAlgebra& t = testing::taft(3);
    const CoidealSubalgebra trivial = hopf_sub_h_d(t, 3);
    CHECK(left_integrals(trivial, counit_restricted(trivial)) ==
          line(t.hopf->unit(), t.hopf->dim(), 3));
}

TEST_CASE("mu must be multiplicative and nonzero") {
    const TaftAlgebra& t = testing::taft(2);
    const CoidealSubalgebra h_d = hopf_sub_h_d(t, 1);
    Functional mu = counit_restricted(h_d);
    mu.coeffs[0] += CycScalar::one(2);  // mu(1) = 2
    CHECK_THROWS_AS(left_integrals(h_d, mu), std::invalid_argument);
    Functional zero{zero_vec(h_d.dim(), 2)};
    CHECK_THROWS_AS(left_integrals(h_d, zero), std::invalid_argument);
}

TEST_CASE("solver agrees with the annihilator route (bilem)") {
    for (int n : {2, 3}) {
        const TaftAlgebra& t = testing::taft(n);
        std::vector<CoidealSubalgebra> algebras;
        algebras.push_back(coideal_v_p_beta(t, CycScalar::one(n)));
        for (int d : divisors(n)) {
            algebras.push_back(hopf_sub_h_d(t, d));
            algebras.push_back(coideal_n_dx(t, d));
        }
        for (const auto& a : algebras) {
            const Functional eps = counit_restricted(a);
            CHECK(left_integrals(a, eps) == integrals_via_annihilator(a, eps, Side::left));
            CHECK(right_integrals(a, eps) == integrals_via_annihilator(a, eps, Side::right));
        }
    }
    // A character of H_1 = Q(w)[Z/n] other than eps.
    const TaftAlgebra& t = testing::taft(3);
    const CoidealSubalgebra h1 = hopf_sub_h_d(t, 1);
    Functional chi{zero_vec(h1.dim(), 3)};
    for (int k = 0; k < h1.dim(); ++k) chi.coeffs[k] = t.omega.pow(k);
    CHECK(is_multiplicative(induced_algebra(h1), chi));
    CHECK(left_integrals(h1, chi) == integrals_via_annihilator(h1, chi, Side::left));
    CHECK(left_integrals(h1, chi).dim() == 1);
}

TEST_CASE("L is a two-sided ideal and matches R when mu(Lambda) != 0") {
    for (int n : {2, 3}) {
        const TaftAlgebra& t = testing::taft(n);
        const CycScalar beta = CycScalar::one(n);
        std::vector<CoidealSubalgebra> algebras{coideal_v_p_beta(t, beta), hopf_sub_h_d(t, 1),
                                                coideal_n_dx(t, 1)};
        for (const auto& a : algebras) {
            const Functional eps = counit_restricted(a);
            const Subspace l = left_integrals(a, eps);
            REQUIRE(l.dim() == 1);
            // Closure under multiplication from both sides.
            for (int i = 0; i < a.dim(); ++i)
                for (int j = 0; j < l.dim(); ++j) {
                    const Vec b = a.space.basis_vector(i);
                    const Vec lam = l.basis_vector(j);
                    CHECK(member(l, a.ambient->multiply(b, lam)));
                    CHECK(member(l, a.ambient->multiply(lam, b)));
                }
            const Vec lam = l.basis_vector(0);
            const auto coords = a.space.coordinates(lam);
            REQUIRE(coords.has_value());
            CycScalar mu_lam = CycScalar::zero(n);
            for (int i = 0; i < a.dim(); ++i) mu_lam += (*coords)[i] * eps.coeffs[i];
            if (!mu_lam.is_zero()) CHECK(l == right_integrals(a, eps));
        }
    }
}

TEST_CASE("induced subalgebra of P_beta") {
    for (int n : {2, 3}) {
        const TaftAlgebra& t = testing::taft(n);
        const CycScalar beta = CycScalar::from_integer(n, 2);
        const Vec p = p_beta(t, beta);
        const InducedData data = induced_subalgebra(t.hopf, p);
        CHECK(data.subalgebra.space == coideal_v_p_beta(t, beta).space);
        CHECK(data.subalgebra.is_subalgebra);
        CHECK(data.subalgebra.is_left_coideal);
        CHECK(data.subalgebra.contains_unit);
        // pi is injective, multiplicative and intertwines Delta.
        CHECK(kernel(data.pi).dim() == 0);
        const HopfAlgebra& h = *t.hopf;
        for (int i = 0; i < data.subalgebra.dim(); ++i) {
            const Vec a = data.subalgebra.space.basis_vector(i);
            for (int j = 0; j < data.subalgebra.dim(); ++j) {
                const Vec b = data.subalgebra.space.basis_vector(j);
                CHECK(data.pi_apply(h.multiply(a, b)) ==
                      h.multiply(data.pi_apply(a), data.pi_apply(b)));
            }
            // Delta(pi(a)) = (id (x) pi)(Delta(a)): push every second-leg
            // slice through pi.
            const TensorElement lhs = h.delta(data.pi_apply(a));
            const TensorElement da = h.delta(a);
            TensorElement rhs(h.dim(), h.conductor());
            for (int r = 0; r < h.dim(); ++r) {
                const Vec row = da.matrix().row(r);
                if (is_zero_vec(row)) continue;
                const Vec mapped = data.pi_apply(row);
                for (int c = 0; c < h.dim(); ++c) rhs.at(r, c) = mapped[c];
            }
            CHECK(lhs == rhs);
        }
        // mu = eps o pi reproduces the integral equation a P = mu(a) P.
        for (int i = 0; i < data.subalgebra.dim(); ++i) {
            const Vec a = data.subalgebra.space.basis_vector(i);
            CHECK(h.multiply(a, p) == scale(data.mu.coeffs[i], p));
        }
    }
}

TEST_CASE("induced subalgebra in a group algebra") {
    auto c4 = testing::cyclic(4);
    const int dim = c4->dim();
    // Lambda~ = P_1: A = H and pi = id.
    Vec p1 = zero_vec(dim, 1);
    for (int k = 0; k < dim; ++k) p1[k] = CycScalar::from_rational(1, Rational(1, 4));
    const InducedData full = induced_subalgebra(c4, p1);
    CHECK(full.subalgebra.space == Subspace::full(dim, 1));
    CHECK(full.pi == Matrix::identity(dim, 1));
    // Lambda~ = P_2 = (1 + g^2)/2: A = span{1, g^2} and pi = id on it.
    Vec p2 = zero_vec(dim, 1);
    p2[0] = p2[2] = CycScalar::from_rational(1, Rational(1, 2));
    const InducedData sub = induced_subalgebra(c4, p2);
    CHECK(sub.subalgebra.space ==
          Subspace::from_spanning({unit_vec(dim, 1, 0), unit_vec(dim, 1, 2)}, dim, 1));
    for (int m = 0; m < sub.subalgebra.dim(); ++m)
        CHECK(sub.pi.col(m) == sub.subalgebra.space.basis_vector(m));
    // Lambda~ = 1 pins A down to the scalars.
    const InducedData unit_only = induced_subalgebra(c4, c4->unit());
    CHECK(unit_only.subalgebra.space == line(c4->unit(), dim, 1));
    // A group-like g != 1 is not of Lambda-integral type and its induced
    // space is the scalars as well: Delta(a)(1 (x) g) = b (x) g forces a
    // into k 1.
    const InducedData g_ind = induced_subalgebra(c4, unit_vec(dim, 1, 1));
    CHECK(g_ind.subalgebra.space == line(c4->unit(), dim, 1));
    CHECK_THROWS_AS(induced_subalgebra(c4, zero_vec(dim, 1)), std::invalid_argument);
}

TEST_CASE("integral-type classification") {
    const TaftAlgebra& t2 = testing::taft(2);
    const TaftAlgebra& t3 = testing::taft(3);
    CHECK(is_integral_type(*t2.hopf, t2.hopf->unit()));
    // Group-likes other than 1 are not of integral type.
    CHECK_FALSE(is_integral_type(*t3.hopf, t3.monomial(1, 0)));
    CHECK(is_integral_type(*t2.hopf, p_beta(t2, CycScalar::one(2))));
    CHECK(is_integral_type(*t3.hopf, p_beta(t3, CycScalar::one(3))));
    // x: integral type exactly when n = 2 (x^2 = 0 absorbs the cross term).
    CHECK(is_integral_type(*t2.hopf, t2.monomial(0, 1)));
    CHECK_FALSE(is_integral_type(*t3.hopf, t3.monomial(0, 1)));
    CHECK_THROWS_AS(is_integral_type(*t2.hopf, zero_vec(4, 2)), std::invalid_argument);

    // The eps-integrals of the families are their own Lambda.
    const Vec lam = lambda_dx(t3, 1);
    auto c = lambda_integral_type(*t3.hopf, lam);
    REQUIRE(c.has_value());
    CHECK(*c == lam);
    CHECK_FALSE(lambda_integral_type(*t3.hopf, t3.monomial(0, 1)).has_value());

    // Every nonzero Lambda~ in L^A_mu satisfies
    // Delta(Lambda~)(1 (x) Lambda~) = pi_mu(Lambda~) (x) Lambda~.
    for (int d : divisors(3)) {
        const CoidealSubalgebra a = coideal_n_dx(t3, d);
        const Vec lam_d = lambda_dx(t3, d);
        const Functional eps_ambient = extend_by_zero(a.space, counit_restricted(a).coeffs);
        const Vec pi_mu = act_right(*t3.hopf, lam_d, eps_ambient);
        CHECK(t3.hopf->tensor_multiply(t3.hopf->delta(lam_d), tensor_of(t3.hopf->unit(), lam_d)) ==
              tensor_of(pi_mu, lam_d));
    }
}

TEST_CASE("scan filters integral-type candidates") {
    const TaftAlgebra& t = testing::taft(3);
    std::vector<Vec> candidates{t.hopf->unit(), t.monomial(1, 0), t.monomial(0, 1),
                                p_beta(t, CycScalar::one(3)), zero_vec(t.hopf->dim(), 3)};
    const auto hits = scan_integral_type(*t.hopf, candidates);
    REQUIRE(hits.size() == 2);
    CHECK(hits[0] == t.hopf->unit());
    CHECK(hits[1] == p_beta(t, CycScalar::one(3)));
}

TEST_CASE("non-degeneracy of the family integrals") {
    for (int n : {2, 3, 4}) {
        const TaftAlgebra& t = testing::taft(n);
        for (const auto& beta : default_beta_grid(n)) CHECK(is_nondegenerate(t.hopf, p_beta(t, beta)));
        for (int d : divisors(n)) {
            CHECK(is_nondegenerate(t.hopf, p_d(t, d)));
            CHECK(is_nondegenerate(t.hopf, lambda_dx(t, d)));
        }
    }
    const TaftAlgebra& t3 = testing::taft(3);
    CHECK_THROWS_AS(is_nondegenerate(t3.hopf, t3.monomial(0, 1)), std::invalid_argument);
}

TEST_CASE("group-like projection classification") {
    const TaftAlgebra& t = testing::taft(3);
    CHECK(classify_group_like_projection(*t.hopf, t.hopf->unit()) == ProjectionClass::two_sided);
    CHECK(classify_group_like_projection(*t.hopf, p_beta(t, CycScalar::one(3))) ==
          ProjectionClass::right);
    for (int d : divisors(3))
        CHECK(classify_group_like_projection(*t.hopf, p_d(t, d)) == ProjectionClass::two_sided);
    CHECK_THROWS_AS(classify_group_like_projection(*t.hopf, t.monomial(1, 0)),
                    std::invalid_argument);  // g is not an idempotent
}

TEST_CASE("unimodularity") {
    const TaftAlgebra& t2 = testing::taft(2);
    // The full Taft algebra is not unimodular: L = span{(1+g)x} while
    // R = span{(1-g)x}.
    const CoidealSubalgebra whole =
        CoidealSubalgebra::analyze(t2.hopf, Subspace::full(t2.hopf->dim(), 2));
    CHECK_FALSE(is_unimodular(whole));
    const Subspace l = left_integrals(whole, counit_restricted(whole));
    const Vec expected_l = add(t2.monomial(0, 1), t2.monomial(1, 1));
    CHECK(l == line(expected_l, 4, 2));
    const Subspace r = right_integrals(whole, counit_restricted(whole));
    const Vec expected_r = sub(t2.monomial(0, 1), t2.monomial(1, 1));
    CHECK(r == line(expected_r, 4, 2));

    // Group algebras are unimodular.
    for (int d : divisors(4)) CHECK(is_unimodular(hopf_sub_h_d(testing::taft(4), d)));
    // V_{P_beta} is commutative ((g + beta x) generates it), hence L = R.
    CHECK(is_unimodular(coideal_v_p_beta(t2, CycScalar::one(2))));
    CHECK(is_unimodular(coideal_v_p_beta(testing::taft(3), omega(3))));
    // N_{d,x} is unimodular only in the commutative case d = n.
    CHECK_FALSE(is_unimodular(coideal_n_dx(testing::taft(3), 1)));
    CHECK(is_unimodular(coideal_n_dx(testing::taft(3), 3)));
}

TEST_CASE("pi identity on the induced subalgebra") {
    for (int n : {2, 3}) {
        const TaftAlgebra& t = testing::taft(n);
        for (const Vec& lam : {p_beta(t, CycScalar::one(n)), p_d(t, 1), lambda_dx(t, 1)}) {
            const InducedData data = induced_subalgebra(t.hopf, lam);
            CHECK(check_pi_identity(*t.hopf, lam, data));
            InducedData corrupted = data;
            corrupted.pi.at(0, 0) += CycScalar::one(n);
            CHECK_FALSE(check_pi_identity(*t.hopf, lam, corrupted));
        }
    }
}

TEST_CASE("V_Lambda is a faithful left ideal of the induced subalgebra") {
    for (int n : {2, 3}) {
        const TaftAlgebra& t = testing::taft(n);
        const HopfAlgebra& h = *t.hopf;
        for (const Vec& lam : {p_beta(t, CycScalar::from_integer(n, 2)), lambda_dx(t, 1)}) {
            const InducedData data = induced_subalgebra(t.hopf, lam);
            const Subspace v = smallest_left_coideal(h, lam);
            // a V subset of V on basis pairs.
            for (int i = 0; i < data.subalgebra.dim(); ++i)
                for (int j = 0; j < v.dim(); ++j)
                    CHECK(member(v, h.multiply(data.subalgebra.space.basis_vector(i),
                                               v.basis_vector(j))));
            // The representation A -> End(V) has zero kernel: stack the
            // action on every basis vector of V.
            const int k = data.subalgebra.dim();
            Matrix stacked(h.dim() * v.dim(), k, h.conductor());
            for (int c = 0; c < k; ++c) {
                const Vec a = data.subalgebra.space.basis_vector(c);
                for (int j = 0; j < v.dim(); ++j) {
                    const Vec image = h.multiply(a, v.basis_vector(j));
                    for (int r = 0; r < h.dim(); ++r) stacked.at(j * h.dim() + r, c) = image[r];
                }
            }
            CHECK(kernel(stacked).dim() == 0);
        }
    }
}

TEST_CASE("semisimple case: the integral line is spanned by an idempotent") {
    for (int n : {2, 3}) {
        const TaftAlgebra& t = testing::taft(n);
        for (const auto& a : {coideal_v_p_beta(t, CycScalar::one(n)), hopf_sub_h_d(t, 1)}) {
            const Subspace l = left_integrals(a, counit_restricted(a));
            REQUIRE(l.dim() == 1);
            CHECK(l == right_integrals(a, counit_restricted(a)));
            const Vec lam = l.basis_vector(0);
            const Vec sq = a.ambient->multiply(lam, lam);
            auto coords = line(lam, a.ambient->dim(), n).coordinates(sq);
            REQUIRE(coords.has_value());
            REQUIRE_FALSE((*coords)[0].is_zero());
            const Vec p = scale((*coords)[0].inverse(), lam);
            CHECK(a.ambient->multiply(p, p) == p);
        }
    }
}
