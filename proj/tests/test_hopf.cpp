#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

#include "hopfint/hopf.hpp"
#include "hopfint/integrals.hpp"

using namespace hopfint;

namespace {

// Rebuilds a Hopf algebra from the parts of an existing one, with a hook to
// corrupt a piece first.
HopfAlgebra reassemble(const HopfAlgebra& h, Matrix antipode,
                       std::vector<SparseTensor> delta, Family family = Family::none) {
    return HopfAlgebra::assemble(h.algebra(), std::move(delta), h.counit(), std::move(antipode),
                                 family, h.family_n());
}

std::vector<SparseTensor> copy_delta(const HopfAlgebra& h) {
    std::vector<SparseTensor> delta;
    for (int i = 0; i < h.dim(); ++i) delta.push_back(h.delta_basis(i));
    return delta;
}

}  // namespace

TEST_CASE("axiom suite passes for the built-in families") {
    for (int n : {2, 3}) {
        const AxiomReport r = verify_hopf_axioms(*testing::taft(n).hopf);
        CHECK(r.all_passed());
    }
    CHECK(verify_hopf_axioms(*testing::cyclic(5)).all_passed());
}

TEST_CASE("corrupted antipode fails the antipode law") {
    const HopfAlgebra& h = *testing::taft(2).hopf;
    Matrix bad = h.antipode_matrix();
    bad.at(0, 1) += CycScalar::one(2);
    const HopfAlgebra corrupted = reassemble(h, bad, copy_delta(h));
    const AxiomReport r = verify_hopf_axioms(corrupted);
    CHECK_FALSE(r.all_passed());
    bool antipode_failed = false;
    for (const auto& c : r.checks)
        if ((c.name == "antipode_left" || c.name == "antipode_right") && !c.passed)
            antipode_failed = true;
    CHECK(antipode_failed);
}

TEST_CASE("corrupted comultiplication fails coassociativity or the counit law") {
    const HopfAlgebra& h = *testing::taft(2).hopf;
    auto delta = copy_delta(h);
    delta[1].push_back({0, 3, CycScalar::one(2)});
    const HopfAlgebra corrupted = reassemble(h, h.antipode_matrix(), std::move(delta));
    const AxiomReport r = verify_hopf_axioms(corrupted);
    CHECK_FALSE(r.all_passed());
}

TEST_CASE("smallest coideals") {
    const TaftAlgebra& t = testing::taft(3);
    const HopfAlgebra& h = *t.hopf;
    // A group-like spans a line.
    const Vec g = t.monomial(1, 0);
    CHECK(smallest_left_coideal(h, g) == Subspace::from_spanning({g}, h.dim(), 3));
    CHECK(smallest_right_coideal(h, g) == Subspace::from_spanning({g}, h.dim(), 3));
    // V_x = span{1, x}: Delta(x) = x (x) 1 + g (x) x has second legs {1, x}.
    const Vec x = t.monomial(0, 1);
    CHECK(smallest_left_coideal(h, x) ==
          Subspace::from_spanning({h.unit(), x}, h.dim(), 3));
    // V_{P_beta} is the span of the powers of g + beta x.
    const CycScalar beta = CycScalar::one(3);
    CHECK(smallest_left_coideal(h, p_beta(t, beta)) == coideal_v_p_beta(t, beta).space);
    // Both coideals contain Lambda when it is nonzero.
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const Vec lam = testing::rand_nonzero_vec(rng, h.dim(), 3);
        CHECK(member(smallest_left_coideal(h, lam), lam));
        CHECK(member(smallest_right_coideal(h, lam), lam));
    }
}

TEST_CASE("u_map examples") {
    // Group-like g with nu(g) = 1 maps to g.
    const TaftAlgebra& t = testing::taft(3);
    const HopfAlgebra& h = *t.hopf;
    const Vec g = t.monomial(1, 0);
    Vec nu = zero_vec(1, 3);
    nu[0] = CycScalar::one(3);
    CHECK(u_map(h, g, nu) == g);

    // Lambda = P_1 in Q[Z/n]: U(dual of g^j) = (1/n) g^j.
    auto c4 = testing::cyclic(4);
    Vec p1 = zero_vec(4, 1);
    for (int k = 0; k < 4; ++k) p1[k] = CycScalar::from_rational(1, Rational(1, 4));
    const Subspace v = smallest_left_coideal(*c4, p1);
    REQUIRE(v.dim() == 4);
    for (int j = 0; j < 4; ++j) {
        // The echelon basis of the full space is the standard basis.
        Vec nu_j = zero_vec(4, 1);
        nu_j[j] = CycScalar::one(1);
        CHECK(u_map(*c4, p1, nu_j) == scale(CycScalar::from_rational(1, Rational(1, 4)),
                                            unit_vec(4, 1, j)));
    }

    // The image of a dual basis under U spans _Lambda V.
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 10; ++trial) {
        const Vec lam = testing::rand_nonzero_vec(rng, h.dim(), 3);
        const Subspace v_lam = smallest_left_coideal(h, lam);
        std::vector<Vec> images;
        for (int i = 0; i < v_lam.dim(); ++i)
            images.push_back(u_map(h, lam, unit_vec(v_lam.dim(), 3, i)));
        CHECK(Subspace::from_spanning(images, h.dim(), 3) == smallest_right_coideal(h, lam));
    }
}

TEST_CASE("convolution actions") {
    const TaftAlgebra& t = testing::taft(3);
    const HopfAlgebra& h = *t.hopf;
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 20; ++trial) {
        const Vec a = testing::rand_vec(rng, h.dim(), 3);
        CHECK(act_left(h, h.counit(), a) == a);   // counit law
        CHECK(act_right(h, a, h.counit()) == a);
        Functional mu{testing::rand_vec(rng, h.dim(), 3)};
        CHECK(convolve(h, h.counit(), mu) == mu);  // (H', *, eps) is unital
        CHECK(convolve(h, mu, h.counit()) == mu);
    }
    // act_right(x, eps) = x, explicitly.
    CHECK(act_right(h, t.monomial(0, 1), h.counit()) == t.monomial(0, 1));
    // On group-likes convolution is pointwise multiplication.
    Functional mu{testing::rand_vec(rng, h.dim(), 3)};
    Functional nu{testing::rand_vec(rng, h.dim(), 3)};
    for (const auto& g : enumerate_group_likes_in_family(h)) {
        CHECK(convolve(h, mu, nu)(g.vector()) == mu(g.vector()) * nu(g.vector()));
    }
}

TEST_CASE("group-like enumeration") {
    const TaftAlgebra& t3 = testing::taft(3);
    auto gls = enumerate_group_likes_in_family(*t3.hopf);
    REQUIRE(gls.size() == 3);
    for (int k = 0; k < 3; ++k) CHECK(gls[k].vector() == t3.monomial(k, 0));

    auto c4 = testing::cyclic(4);
    CHECK(enumerate_group_likes_in_family(*c4).size() == 4);

    // 1 + x is rejected by the verifying constructor.
    const Vec bad = add(t3.hopf->unit(), t3.monomial(0, 1));
    CHECK_FALSE(is_group_like(*t3.hopf, bad));
    CHECK_THROWS_AS(GroupLike(*t3.hopf, bad), std::invalid_argument);

    // No declared family, no enumeration.
    const HopfAlgebra& h = *t3.hopf;
    const HopfAlgebra anonymous = HopfAlgebra::assemble(
        h.algebra(), [&] {
            std::vector<SparseTensor> d;
            for (int i = 0; i < h.dim(); ++i) d.push_back(h.delta_basis(i));
            return d;
        }(), h.counit(), h.antipode_matrix());
    CHECK_THROWS_AS(enumerate_group_likes_in_family(anonymous), std::invalid_argument);
}

TEST_CASE("rank of Delta(Lambda) equals both coideal dimensions") {
    for (int n : {2, 3}) {
        const HopfAlgebra& h = *testing::taft(n).hopf;
        std::mt19937_64 rng(35 + n);
        for (int trial = 0; trial < 50; ++trial) {
            const Vec lam = testing::rand_vec(rng, h.dim(), n);
            const int r = tensor_rank(h.delta(lam));
            CHECK(smallest_left_coideal(h, lam).dim() == r);
            CHECK(smallest_right_coideal(h, lam).dim() == r);
        }
    }
}

TEST_CASE("V_Lambda is a left coideal") {
    const HopfAlgebra& h = *testing::taft(3).hopf;
    std::mt19937_64 rng(36);
    for (int trial = 0; trial < 25; ++trial) {
        const Vec lam = testing::rand_vec(rng, h.dim(), 3);
        CHECK(subspace_is_left_coideal(h, smallest_left_coideal(h, lam)));
    }
}

TEST_CASE("orientation: V_Lambda is spanned by the left convolution images") {
    const HopfAlgebra& h = *testing::taft(2).hopf;
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        const Vec lam = testing::rand_vec(rng, h.dim(), 2);
        std::vector<Vec> images;
        for (int i = 0; i < h.dim(); ++i)
            images.push_back(act_left(h, Functional{unit_vec(h.dim(), 2, i)}, lam));
        CHECK(Subspace::from_spanning(images, h.dim(), 2) == smallest_left_coideal(h, lam));
    }
}

TEST_CASE("only the unit satisfies Delta(y)(1 (x) y) = Delta(y)") {
    const HopfAlgebra& h = *testing::taft(2).hopf;
    const Vec one = h.unit();
    CHECK(h.tensor_multiply(h.delta(one), tensor_of(one, one)) == h.delta(one));
    std::mt19937_64 rng(38);
    int tested = 0;
    while (tested < 20) {
        const Vec y = testing::rand_nonzero_vec(rng, h.dim(), 2);
        if (y == one) continue;
        ++tested;
        CHECK(h.tensor_multiply(h.delta(y), tensor_of(one, y)) != h.delta(y));
    }
}

TEST_CASE("extend_by_zero evaluates correctly on the subspace") {
    const HopfAlgebra& h = *testing::taft(3).hopf;
    std::mt19937_64 rng(39);
    for (int trial = 0; trial < 15; ++trial) {
        const Vec lam = testing::rand_nonzero_vec(rng, h.dim(), 3);
        const Subspace v = smallest_left_coideal(h, lam);
        const Vec values = testing::rand_vec(rng, v.dim(), 3);
        const Functional f = extend_by_zero(v, values);
        for (int i = 0; i < v.dim(); ++i) CHECK(f(v.basis_vector(i)) == values[i]);
    }
}
