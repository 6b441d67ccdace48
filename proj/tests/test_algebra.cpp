#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

#include "hopfint/algebra.hpp"
#include "hopfint/integrals.hpp"

using namespace hopfint;

namespace {

// Q[t]/(t^2), basis {1, t}.
FinDimAlgebra dual_numbers() {
    return FinDimAlgebra::from_table(
        2, 1,
        [](int i, int j) {
            Vec out = zero_vec(2, 1);
            if (i + j < 2) out[i + j] = CycScalar::one(1);
            return out;
        },
        unit_vec(2, 1, 0));
}

// Direct eigen-condition solver for L^A_mu in A-coordinates; independent of
// the annihilator route it is checked against.
Subspace mu_integrals_direct(const FinDimAlgebra& a, const Functional& mu, Side side) {
    const int n = a.dim();
    Matrix system(n * n, n, a.conductor());
    for (int i = 0; i < n; ++i) {
        const Vec e = unit_vec(n, a.conductor(), i);
        const Matrix m = side == Side::left ? a.left_mult_matrix(e) : a.right_mult_matrix(e);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                CycScalar v = m.at(r, c);
                if (r == c) v -= mu.coeffs[i];
                system.at(i * n + r, c) = v;
            }
    }
    return kernel(system);
}

}  // namespace

TEST_CASE("multiply follows the structure constants") {
    const FinDimAlgebra d = dual_numbers();
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        const Vec b = testing::rand_vec(rng, 2, 1);
        CHECK(d.multiply(*d.unit(), b) == b);
        CHECK(d.multiply(b, *d.unit()) == b);
    }
    // t * t = 0
    CHECK(is_zero_vec(d.multiply(unit_vec(2, 1, 1), unit_vec(2, 1, 1))));

    // Taft relations: x x = 0 for n = 2; x g = w^{-1} g x for n = 3.
    const TaftAlgebra& t2 = testing::taft(2);
    const Vec x2 = t2.monomial(0, 1);
    CHECK(is_zero_vec(t2.hopf->multiply(x2, x2)));

    const TaftAlgebra& t3 = testing::taft(3);
    const Vec xg = t3.hopf->multiply(t3.monomial(0, 1), t3.monomial(1, 0));
    CHECK(xg == scale(omega(3).pow(2), t3.monomial(1, 1)));  // w^{-1} = w^2
}

TEST_CASE("associativity and unit verifiers catch corruption") {
    CHECK(dual_numbers().check_associativity());
    CHECK(dual_numbers().check_unit_laws());
    // Corrupt 1*t := 1. Then (1 t) t = t while 1 (t t) = 0.
    auto corrupted = FinDimAlgebra::from_table(
        2, 1,
        [](int i, int j) {
            Vec out = zero_vec(2, 1);
            if (i == 0 && j == 1)
                out[0] = CycScalar::one(1);  // 1 * t := 1
            else if (i + j < 2)
                out[i + j] = CycScalar::one(1);
            return out;
        },
        unit_vec(2, 1, 0));
    CHECK_FALSE(corrupted.check_unit_laws());
    CHECK_FALSE(corrupted.check_associativity());  // (1 t) t = t vs 1 (t t) = 0
}

TEST_CASE("annihilators") {
    const FinDimAlgebra d = dual_numbers();
    // Whole unital algebra annihilates nothing.
    const Subspace whole = Subspace::full(2, 1);
    CHECK(right_annihilator(d, whole).dim() == 0);
    CHECK(left_annihilator(d, whole).dim() == 0);
    // span{t}: t(a + bt) = at, so r(span t) = span{t}.
    const Subspace t_line = Subspace::from_spanning({unit_vec(2, 1, 1)}, 2, 1);
    CHECK(right_annihilator(d, t_line) == t_line);
    CHECK(left_annihilator(d, t_line) == t_line);
    // Zero ideal is annihilated by everything.
    CHECK(right_annihilator(d, Subspace(2, 1)) == whole);
}

TEST_CASE("biannihilator condition per ideal") {
    const FinDimAlgebra d = dual_numbers();
    CHECK(check_biannihilator(d, Subspace(2, 1), Side::left));  // zero ideal
    const Subspace t_line = Subspace::from_spanning({unit_vec(2, 1, 1)}, 2, 1);
    CHECK(check_biannihilator(d, t_line, Side::left));
    CHECK(check_biannihilator(d, t_line, Side::right));
    // Not an ideal: span{1} in Q[t]/(t^2).
    const Subspace unit_line = Subspace::from_spanning({unit_vec(2, 1, 0)}, 2, 1);
    CHECK_THROWS_AS(check_biannihilator(d, unit_line, Side::left), std::invalid_argument);

    // ker(eps) inside the group algebra H_d of a Taft algebra.
    const TaftAlgebra& t = testing::taft(4);
    const CoidealSubalgebra h_d = hopf_sub_h_d(t, 2);
    const FinDimAlgebra alg = induced_algebra(h_d);
    const Subspace ker_eps = functional_kernel(alg, counit_restricted(h_d));
    CHECK(check_biannihilator(alg, ker_eps, Side::left));
    CHECK(check_biannihilator(alg, ker_eps, Side::right));
}

TEST_CASE("semisimplicity via the trace form") {
    for (int n : {2, 3, 4}) {
        auto h = testing::cyclic(n);
        CHECK(is_semisimple(h->algebra()));
    }
    CHECK_FALSE(is_semisimple(dual_numbers()));
    // V_{P_beta} is semisimple.
    const TaftAlgebra& t = testing::taft(3);
    CHECK(is_semisimple(induced_algebra(coideal_v_p_beta(t, CycScalar::one(3)))));
    // Non-unital input is rejected.
    auto no_unit = FinDimAlgebra::from_table(
        1, 1, [](int, int) { return zero_vec(1, 1); }, std::nullopt);
    CHECK_THROWS_AS(is_semisimple(no_unit), std::invalid_argument);
}

TEST_CASE("gram matrices and faithful functionals") {
    // A = Q with the identity functional.
    auto rationals = FinDimAlgebra::from_table(
        1, 1, [](int, int) { return unit_vec(1, 1, 0); }, unit_vec(1, 1, 0));
    CHECK(is_faithful_functional(rationals, Functional{unit_vec(1, 1, 0)}));

    const FinDimAlgebra d = dual_numbers();
    const Functional dual_of_t{unit_vec(2, 1, 1)};
    const Matrix g = gram(d, dual_of_t);
    CHECK(g.at(0, 0).is_zero());
    CHECK(g.at(0, 1).is_one());
    CHECK(g.at(1, 0).is_one());
    CHECK(g.at(1, 1).is_zero());
    CHECK(is_faithful_functional(d, dual_of_t));

    const Functional dual_of_one{unit_vec(2, 1, 0)};
    const Matrix g0 = gram(d, dual_of_one);
    CHECK(g0.at(0, 0).is_one());
    CHECK(g0.at(1, 1).is_zero());
    CHECK_FALSE(is_faithful_functional(d, dual_of_one));
}

TEST_CASE("left and right gram conventions agree") {
    std::mt19937_64 rng(23);
    const TaftAlgebra& t = testing::taft(2);
    std::vector<FinDimAlgebra> algebras;
    algebras.push_back(dual_numbers());
    algebras.push_back(t.hopf->algebra());
    algebras.push_back(testing::cyclic(3)->algebra());
    for (const auto& a : algebras)
        for (int trial = 0; trial < 20; ++trial) {
            Functional omega_f{testing::rand_vec(rng, a.dim(), a.conductor())};
            const Matrix g = gram(a, omega_f);
            // "no a with omega(a A) = 0" is kernel(G^T) = 0; "no a with
            // omega(A a) = 0" is kernel(G) = 0; both reduce to full rank.
            CHECK((kernel(g).dim() == 0) == (kernel(g.transpose()).dim() == 0));
            CHECK(is_faithful_functional(a, omega_f) == (kernel(g).dim() == 0));
        }
}

TEST_CASE("frobenius search returns exact certificates") {
    auto h2 = testing::cyclic(2);
    auto cert = frobenius_search(h2->algebra(), 32, 42);
    REQUIRE(cert.has_value());
    CHECK(is_faithful_functional(h2->algebra(), *cert));

    const FinDimAlgebra d = dual_numbers();
    auto cert_d = frobenius_search(d, 32, 42);
    REQUIRE(cert_d.has_value());
    CHECK_FALSE(cert_d->coeffs[1].is_zero());  // faithful iff omega(t) != 0

    // Same seed, same certificate.
    CHECK(frobenius_search(d, 32, 7)->coeffs == frobenius_search(d, 32, 7)->coeffs);

    // Non-unital algebras are rejected at the precondition (an algebra with
    // a faithful functional is necessarily unital).
    auto zero_mult = FinDimAlgebra::from_table(
        2, 1, [](int, int) { return zero_vec(2, 1); }, std::nullopt);
    CHECK_THROWS_AS(frobenius_search(zero_mult, 8, 1), std::invalid_argument);
}

TEST_CASE("multiplicative functionals") {
    const TaftAlgebra& t = testing::taft(3);
    const CoidealSubalgebra v = coideal_v_p_beta(t, CycScalar::one(3));
    const FinDimAlgebra alg = induced_algebra(v);
    const Functional eps = counit_restricted(v);
    CHECK(is_multiplicative(alg, eps));
    CHECK_FALSE(is_multiplicative(alg, Functional{scale(CycScalar::from_integer(3, 2), eps.coeffs)}));

    // Sign character on Q[Z/2].
    auto h2 = testing::cyclic(2);
    Vec sign = zero_vec(2, 1);
    sign[0] = CycScalar::one(1);
    sign[1] = CycScalar::from_integer(1, -1);
    CHECK(is_multiplicative(h2->algebra(), Functional{sign}));
}

TEST_CASE("mu-integral solver agrees with the annihilator route") {
    // L^A_mu = r(ker mu) and R^A_mu = l(ker mu) on every tested (A, mu).
    std::vector<std::pair<FinDimAlgebra, Functional>> cases;
    {
        const FinDimAlgebra d = dual_numbers();
        cases.emplace_back(d, Functional{unit_vec(2, 1, 0)});  // eps: t -> 0
        auto h3 = testing::cyclic(3);
        cases.emplace_back(h3->algebra(), Functional{Vec(3, CycScalar::one(1))});
        const TaftAlgebra& t = testing::taft(2);
        const CoidealSubalgebra v = coideal_v_p_beta(t, CycScalar::one(2));
        cases.emplace_back(induced_algebra(v), counit_restricted(v));
    }
    for (const auto& [a, mu] : cases) {
        const Subspace ker_mu = functional_kernel(a, mu);
        CHECK(mu_integrals_direct(a, mu, Side::left) == right_annihilator(a, ker_mu));
        CHECK(mu_integrals_direct(a, mu, Side::right) == left_annihilator(a, ker_mu));
    }
}

TEST_CASE("V_{P_beta} with ker eps: r(I) equals the eps-integral line") {
    const TaftAlgebra& t = testing::taft(2);
    const CoidealSubalgebra v = coideal_v_p_beta(t, CycScalar::one(2));
    const FinDimAlgebra alg = induced_algebra(v);
    const Functional eps = counit_restricted(v);
    const Subspace r = right_annihilator(alg, functional_kernel(alg, eps));
    CHECK(r.dim() == 1);
    CHECK(r == mu_integrals_direct(alg, eps, Side::left));
}
