#include "hopfint/hopf.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

namespace hopfint {

namespace {

using PairKey = std::pair<int, int>;
using TripleKey = std::tuple<int, int, int>;

template <typename Key>
void accumulate(std::map<Key, CycScalar>& acc, const Key& key, const CycScalar& value) {
    auto it = acc.find(key);
    if (it == acc.end())
        acc.emplace(key, value);
    else
        it->second += value;
}

template <typename Key>
bool maps_equal(const std::map<Key, CycScalar>& a, const std::map<Key, CycScalar>& b) {
    for (const auto& [k, v] : a) {
        if (v.is_zero()) continue;
        auto it = b.find(k);
        if (it == b.end() || it->second != v) return false;
    }
    for (const auto& [k, v] : b) {
        if (v.is_zero()) continue;
        auto it = a.find(k);
        if (it == a.end() || it->second != v) return false;
    }
    return true;
}

}  // namespace

HopfAlgebra HopfAlgebra::assemble(FinDimAlgebra algebra, std::vector<SparseTensor> delta,
                                  Functional counit, Matrix antipode,
                                  Family family, int family_n) {
    if (!algebra.is_unital()) throw std::invalid_argument("Hopf algebra must be unital");
    if (delta.size() != static_cast<std::size_t>(algebra.dim()))
        throw std::invalid_argument("delta table has wrong size");
    if (static_cast<int>(counit.coeffs.size()) != algebra.dim())
        throw std::invalid_argument("counit has wrong size");
    if (antipode.rows() != algebra.dim() || antipode.cols() != algebra.dim())
        throw std::invalid_argument("antipode has wrong shape");
    auto inv = antipode.inverse();
    if (!inv) throw std::invalid_argument("antipode is not invertible");
    HopfAlgebra h;
    h.algebra_ = std::move(algebra);
    h.delta_ = std::move(delta);
    h.counit_ = std::move(counit);
    h.antipode_ = std::move(antipode);
    h.antipode_inv_ = std::move(*inv);
    h.family_ = family;
    h.family_n_ = family_n;
    return h;
}

TensorElement HopfAlgebra::delta(const Vec& v) const {
    if (static_cast<int>(v.size()) != dim()) throw std::invalid_argument("delta: shape mismatch");
    TensorElement t(dim(), conductor());
    for (int i = 0; i < dim(); ++i) {
        if (v[i].is_zero()) continue;
        for (const auto& term : delta_[i]) t.at(term.first, term.second) += v[i] * term.coeff;
    }
    return t;
}

TensorElement HopfAlgebra::tensor_multiply(const TensorElement& s, const TensorElement& t) const {
    if (s.dim() != dim() || t.dim() != dim()) throw std::invalid_argument("tensor shape mismatch");
    auto nonzeros = [](const TensorElement& u) {
        std::vector<std::tuple<int, int, const CycScalar*>> nz;
        for (int i = 0; i < u.dim(); ++i)
            for (int j = 0; j < u.dim(); ++j)
                if (!u.at(i, j).is_zero()) nz.emplace_back(i, j, &u.at(i, j));
        return nz;
    };
    const auto nz_s = nonzeros(s);
    const auto nz_t = nonzeros(t);
    TensorElement out(dim(), conductor());
    for (const auto& [i1, j1, c1] : nz_s)
        for (const auto& [i2, j2, c2] : nz_t) {
            const CycScalar c = *c1 * *c2;
            for (const auto& p : algebra_.basis_product(i1, i2))
                for (const auto& q : algebra_.basis_product(j1, j2))
                    out.at(p.index, q.index) += c * p.coeff * q.coeff;
        }
    return out;
}

Vec HopfAlgebra::multiply_legs(const TensorElement& t) const {
    Vec out = zero_vec(dim(), conductor());
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) {
            if (t.at(i, j).is_zero()) continue;
            for (const auto& p : algebra_.basis_product(i, j)) out[p.index] += t.at(i, j) * p.coeff;
        }
    return out;
}

AxiomReport verify_hopf_axioms(const HopfAlgebra& h) {
    const int n = h.dim();
    const int cond = h.conductor();
    const FinDimAlgebra& alg = h.algebra();
    AxiomReport report;
    auto add = [&report](std::string name, bool ok) { report.checks.push_back({std::move(name), ok}); };

    add("associativity", alg.check_associativity());
    add("unit_laws", alg.check_unit_laws());

    // Coassociativity on basis vectors, sparsely.
    bool coassoc = true;
    for (int i = 0; i < n && coassoc; ++i) {
        std::map<TripleKey, CycScalar> lhs, rhs;
        for (const auto& t : h.delta_basis(i)) {
            for (const auto& u : h.delta_basis(t.first))
                accumulate(lhs, TripleKey{u.first, u.second, t.second}, t.coeff * u.coeff);
            for (const auto& u : h.delta_basis(t.second))
                accumulate(rhs, TripleKey{t.first, u.first, u.second}, t.coeff * u.coeff);
        }
        coassoc = maps_equal(lhs, rhs);
    }
    add("coassociativity", coassoc);

    // Counit laws (eps (x) id) Delta = id = (id (x) eps) Delta.
    bool counit_left = true, counit_right = true;
    for (int i = 0; i < n; ++i) {
        Vec l = zero_vec(n, cond), r = zero_vec(n, cond);
        for (const auto& t : h.delta_basis(i)) {
            l[t.second] += t.coeff * h.counit().coeffs[t.first];
            r[t.first] += t.coeff * h.counit().coeffs[t.second];
        }
        const Vec e = unit_vec(n, cond, i);
        if (l != e) counit_left = false;
        if (r != e) counit_right = false;
    }
    add("counit_left", counit_left);
    add("counit_right", counit_right);

    // Delta is an algebra map.
    bool delta_unit = h.delta(h.unit()) == tensor_of(h.unit(), h.unit());
    add("delta_unit", delta_unit);
    bool delta_mult = true;
    for (int i = 0; i < n && delta_mult; ++i)
        for (int j = 0; j < n && delta_mult; ++j) {
            std::map<PairKey, CycScalar> lhs, rhs;
            for (const auto& p : alg.basis_product(i, j))
                for (const auto& t : h.delta_basis(p.index))
                    accumulate(lhs, PairKey{t.first, t.second}, p.coeff * t.coeff);
            for (const auto& t1 : h.delta_basis(i))
                for (const auto& t2 : h.delta_basis(j)) {
                    const CycScalar c = t1.coeff * t2.coeff;
                    for (const auto& p : alg.basis_product(t1.first, t2.first))
                        for (const auto& q : alg.basis_product(t1.second, t2.second))
                            accumulate(rhs, PairKey{p.index, q.index}, c * p.coeff * q.coeff);
                }
            delta_mult = maps_equal(lhs, rhs);
        }
    add("delta_multiplicative", delta_mult);

    // eps is an algebra map.
    bool counit_mult = true;
    for (int i = 0; i < n && counit_mult; ++i)
        for (int j = 0; j < n && counit_mult; ++j) {
            CycScalar lhs = CycScalar::zero(cond);
            for (const auto& p : alg.basis_product(i, j)) lhs += p.coeff * h.counit().coeffs[p.index];
            counit_mult = lhs == h.counit().coeffs[i] * h.counit().coeffs[j];
        }
    add("counit_multiplicative", counit_mult);
    add("counit_unit", h.counit_value(h.unit()).is_one());

    // Antipode law m(S (x) id) Delta = eta eps = m(id (x) S) Delta.
    bool anti_left = true, anti_right = true;
    for (int i = 0; i < n; ++i) {
        Vec l = zero_vec(n, cond), r = zero_vec(n, cond);
        for (const auto& t : h.delta_basis(i)) {
            const Vec s_first = h.antipode(unit_vec(n, cond, t.first));
            Vec prod = alg.multiply(s_first, unit_vec(n, cond, t.second));
            for (int m = 0; m < n; ++m) l[m] += t.coeff * prod[m];
            const Vec s_second = h.antipode(unit_vec(n, cond, t.second));
            prod = alg.multiply(unit_vec(n, cond, t.first), s_second);
            for (int m = 0; m < n; ++m) r[m] += t.coeff * prod[m];
        }
        const Vec expect = scale(h.counit().coeffs[i], h.unit());
        if (l != expect) anti_left = false;
        if (r != expect) anti_right = false;
    }
    add("antipode_left", anti_left);
    add("antipode_right", anti_right);
    add("antipode_inverse",
        h.antipode_matrix().multiply(h.antipode_inv_matrix()) == Matrix::identity(n, cond));

    return report;
}

bool is_group_like(const HopfAlgebra& h, const Vec& v) {
    if (is_zero_vec(v)) return false;
    return h.delta(v) == tensor_of(v, v) && h.counit_value(v).is_one();
}

GroupLike::GroupLike(const HopfAlgebra& h, Vec v) : vector_(std::move(v)) {
    if (!is_group_like(h, vector_))
        throw std::invalid_argument("not a group-like element");
}

Subspace smallest_left_coideal(const HopfAlgebra& h, const Vec& lambda) {
    return row_space(h.delta(lambda));
}

Subspace smallest_right_coideal(const HopfAlgebra& h, const Vec& lambda) {
    return col_space(h.delta(lambda));
}

Functional extend_by_zero(const Subspace& s, const Vec& values_on_basis) {
    if (static_cast<int>(values_on_basis.size()) != s.dim())
        throw std::invalid_argument("extend_by_zero: shape mismatch");
    Functional f;
    f.coeffs = zero_vec(s.ambient_dim(), s.conductor());
    for (int i = 0; i < s.dim(); ++i) f.coeffs[s.pivots()[i]] = values_on_basis[i];
    return f;
}

Vec u_map(const HopfAlgebra& h, const Vec& lambda, const Vec& nu_on_coideal) {
    const Subspace v = smallest_left_coideal(h, lambda);
    const Functional nu = extend_by_zero(v, nu_on_coideal);
    return apply_second_leg_functional(h.delta(lambda), nu);
}

Vec act_left(const HopfAlgebra& h, const Functional& mu, const Vec& a) {
    return apply_first_leg_functional(h.delta(a), mu);
}

Vec act_right(const HopfAlgebra& h, const Vec& a, const Functional& mu) {
    return apply_second_leg_functional(h.delta(a), mu);
}

Functional convolve(const HopfAlgebra& h, const Functional& mu, const Functional& nu) {
    Functional out;
    out.coeffs = zero_vec(h.dim(), h.conductor());
    for (int i = 0; i < h.dim(); ++i) {
        CycScalar acc = CycScalar::zero(h.conductor());
        for (const auto& t : h.delta_basis(i)) acc += t.coeff * mu.coeffs[t.first] * nu.coeffs[t.second];
        out.coeffs[i] = acc;
    }
    return out;
}

std::vector<GroupLike> enumerate_group_likes_in_family(const HopfAlgebra& h) {
    const int n = h.family_n();
    std::vector<GroupLike> out;
    switch (h.family()) {
        case Family::group_algebra:
            for (int k = 0; k < n; ++k) out.emplace_back(h, unit_vec(h.dim(), h.conductor(), k));
            return out;
        case Family::taft:
            // basis g^i x^j at index i*n + j; the group-likes are the x^0 column
            for (int k = 0; k < n; ++k) out.emplace_back(h, unit_vec(h.dim(), h.conductor(), k * n));
            return out;
        case Family::none:
            break;
    }
    throw std::invalid_argument("group-like enumeration needs a built-in family");
}

std::shared_ptr<const HopfAlgebra> group_algebra(int n) {
    if (n < 1) throw std::invalid_argument("group_algebra: n must be positive");
    const int cond = 1;
    auto alg = FinDimAlgebra::from_table(
        n, cond,
        [&](int i, int j) { return unit_vec(n, cond, (i + j) % n); },
        unit_vec(n, cond, 0));
    std::vector<SparseTensor> delta(n);
    for (int k = 0; k < n; ++k) delta[k] = {{k, k, CycScalar::one(cond)}};
    Functional counit;
    counit.coeffs = Vec(n, CycScalar::one(cond));
    // Solve the antipode axiom on each group-like: S(g^k) g^k = 1.
    Matrix antipode(n, n, cond);
    for (int k = 0; k < n; ++k) {
        auto s = solve(alg.right_mult_matrix(unit_vec(n, cond, k)), unit_vec(n, cond, 0));
        if (!s) throw std::logic_error("group algebra antipode solve failed");
        for (int r = 0; r < n; ++r) antipode.at(r, k) = (*s)[r];
    }
    auto h = std::make_shared<HopfAlgebra>(HopfAlgebra::assemble(
        std::move(alg), std::move(delta), std::move(counit), std::move(antipode),
        Family::group_algebra, n));
    if (!verify_hopf_axioms(*h).all_passed())
        throw std::logic_error("group algebra failed Hopf axiom verification");
    return h;
}

Vec apply_second_leg_functional(const TensorElement& t, const Functional& f) {
    if (static_cast<int>(f.coeffs.size()) != t.dim())
        throw std::invalid_argument("functional shape mismatch");
    Vec out = zero_vec(t.dim(), t.conductor());
    for (int i = 0; i < t.dim(); ++i)
        for (int j = 0; j < t.dim(); ++j)
            if (!t.at(i, j).is_zero()) out[i] += t.at(i, j) * f.coeffs[j];
    return out;
}

Vec apply_first_leg_functional(const TensorElement& t, const Functional& f) {
    if (static_cast<int>(f.coeffs.size()) != t.dim())
        throw std::invalid_argument("functional shape mismatch");
    Vec out = zero_vec(t.dim(), t.conductor());
    for (int i = 0; i < t.dim(); ++i)
        for (int j = 0; j < t.dim(); ++j)
            if (!t.at(i, j).is_zero()) out[j] += t.at(i, j) * f.coeffs[i];
    return out;
}

TensorElement map_first_leg(const TensorElement& t, const Matrix& m) {
    TensorElement out(t.dim(), t.conductor());
    for (int i = 0; i < t.dim(); ++i)
        for (int j = 0; j < t.dim(); ++j) {
            if (t.at(i, j).is_zero()) continue;
            for (int r = 0; r < t.dim(); ++r)
                if (!m.at(r, i).is_zero()) out.at(r, j) += m.at(r, i) * t.at(i, j);
        }
    return out;
}

TensorElement map_second_leg(const TensorElement& t, const Matrix& m) {
    TensorElement out(t.dim(), t.conductor());
    for (int i = 0; i < t.dim(); ++i)
        for (int j = 0; j < t.dim(); ++j) {
            if (t.at(i, j).is_zero()) continue;
            for (int r = 0; r < t.dim(); ++r)
                if (!m.at(r, j).is_zero()) out.at(i, r) += m.at(r, j) * t.at(i, j);
        }
    return out;
}

}  // namespace hopfint
