#include "hopfint/algebra.hpp"

#include <random>
#include <stdexcept>

namespace hopfint {

SparseVec to_sparse(const Vec& v) {
    SparseVec out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) out.push_back({static_cast<int>(i), v[i]});
    return out;
}

Vec to_dense(const SparseVec& s, int dim, int conductor) {
    Vec out = zero_vec(dim, conductor);
    for (const auto& t : s) out[t.index] = t.coeff;
    return out;
}

FinDimAlgebra FinDimAlgebra::from_table(int dim, int conductor,
                                        const std::function<Vec(int, int)>& product,
                                        std::optional<Vec> unit) {
    std::vector<SparseVec> products;
    products.reserve(static_cast<std::size_t>(dim) * dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) products.push_back(to_sparse(product(i, j)));
    return from_sparse(dim, conductor, std::move(products), std::move(unit));
}

FinDimAlgebra FinDimAlgebra::from_sparse(int dim, int conductor,
                                         std::vector<SparseVec> products,
                                         std::optional<Vec> unit) {
    if (dim < 1) throw std::invalid_argument("algebra dimension must be positive");
    if (products.size() != static_cast<std::size_t>(dim) * dim)
        throw std::invalid_argument("structure constant table has wrong size");
    if (unit && static_cast<int>(unit->size()) != dim)
        throw std::invalid_argument("unit vector has wrong size");
    FinDimAlgebra a;
    a.dim_ = dim;
    a.conductor_ = conductor;
    a.mult_ = std::move(products);
    a.unit_ = std::move(unit);
    return a;
}

Vec FinDimAlgebra::multiply(const Vec& a, const Vec& b) const {
    if (static_cast<int>(a.size()) != dim_ || static_cast<int>(b.size()) != dim_)
        throw std::invalid_argument("multiply: shape mismatch");
    Vec out = zero_vec(dim_, conductor_);
    for (int i = 0; i < dim_; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < dim_; ++j) {
            if (b[j].is_zero()) continue;
            const CycScalar c = a[i] * b[j];
            for (const auto& term : basis_product(i, j)) out[term.index] += c * term.coeff;
        }
    }
    return out;
}

Matrix FinDimAlgebra::left_mult_matrix(const Vec& a) const {
    Matrix m(dim_, dim_, conductor_);
    for (int j = 0; j < dim_; ++j) {
        for (int i = 0; i < dim_; ++i) {
            if (a[i].is_zero()) continue;
            for (const auto& term : basis_product(i, j)) m.at(term.index, j) += a[i] * term.coeff;
        }
    }
    return m;
}

Matrix FinDimAlgebra::right_mult_matrix(const Vec& a) const {
    Matrix m(dim_, dim_, conductor_);
    for (int j = 0; j < dim_; ++j) {
        for (int i = 0; i < dim_; ++i) {
            if (a[i].is_zero()) continue;
            for (const auto& term : basis_product(j, i)) m.at(term.index, j) += a[i] * term.coeff;
        }
    }
    return m;
}

CycScalar FinDimAlgebra::trace_left_mult(const Vec& a) const {
    CycScalar tr = CycScalar::zero(conductor_);
    for (int i = 0; i < dim_; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < dim_; ++j)
            for (const auto& term : basis_product(i, j))
                if (term.index == j) tr += a[i] * term.coeff;
    }
    return tr;
}

bool FinDimAlgebra::check_associativity() const {
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            const SparseVec& ij = basis_product(i, j);
            for (int k = 0; k < dim_; ++k) {
                Vec lhs = zero_vec(dim_, conductor_);
                for (const auto& t : ij)
                    for (const auto& u : basis_product(t.index, k)) lhs[u.index] += t.coeff * u.coeff;
                Vec rhs = zero_vec(dim_, conductor_);
                for (const auto& t : basis_product(j, k))
                    for (const auto& u : basis_product(i, t.index)) rhs[u.index] += t.coeff * u.coeff;
                if (lhs != rhs) return false;
            }
        }
    return true;
}

bool FinDimAlgebra::check_unit_laws() const {
    if (!unit_) return false;
    for (int i = 0; i < dim_; ++i) {
        const Vec e = unit_vec(dim_, conductor_, i);
        if (multiply(*unit_, e) != e || multiply(e, *unit_) != e) return false;
    }
    return true;
}

namespace {

// Stacks the maps v -> b v (or v -> v b) over a basis b of the ideal and
// takes the kernel.
Subspace annihilator(const FinDimAlgebra& a, const Subspace& ideal, Side side_of_result) {
    const int n = a.dim();
    const int k = ideal.dim();
    Matrix stacked(n * std::max(k, 1), n, a.conductor());
    for (int b = 0; b < k; ++b) {
        const Vec basis_b = ideal.basis_vector(b);
        const Matrix m = side_of_result == Side::right ? a.left_mult_matrix(basis_b)
                                                       : a.right_mult_matrix(basis_b);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) stacked.at(b * n + r, c) = m.at(r, c);
    }
    return kernel(stacked);
}

}  // namespace

Subspace right_annihilator(const FinDimAlgebra& a, const Subspace& ideal) {
    return annihilator(a, ideal, Side::right);
}

Subspace left_annihilator(const FinDimAlgebra& a, const Subspace& ideal) {
    return annihilator(a, ideal, Side::left);
}

bool is_left_ideal(const FinDimAlgebra& a, const Subspace& ideal) {
    for (int i = 0; i < a.dim(); ++i) {
        const Vec e = unit_vec(a.dim(), a.conductor(), i);
        for (int b = 0; b < ideal.dim(); ++b)
            if (!ideal.contains(a.multiply(e, ideal.basis_vector(b)))) return false;
    }
    return true;
}

bool is_right_ideal(const FinDimAlgebra& a, const Subspace& ideal) {
    for (int i = 0; i < a.dim(); ++i) {
        const Vec e = unit_vec(a.dim(), a.conductor(), i);
        for (int b = 0; b < ideal.dim(); ++b)
            if (!ideal.contains(a.multiply(ideal.basis_vector(b), e))) return false;
    }
    return true;
}

bool check_biannihilator(const FinDimAlgebra& a, const Subspace& ideal, Side side) {
    if (side == Side::left) {
        if (!is_left_ideal(a, ideal)) throw std::invalid_argument("not a left ideal");
        return left_annihilator(a, right_annihilator(a, ideal)) == ideal;
    }
    if (!is_right_ideal(a, ideal)) throw std::invalid_argument("not a right ideal");
    return right_annihilator(a, left_annihilator(a, ideal)) == ideal;
}

bool is_semisimple(const FinDimAlgebra& a) {
    if (!a.is_unital()) throw std::invalid_argument("is_semisimple: algebra must be unital");
    const int n = a.dim();
    // Precompute tr(L_{e_k}); then T_{ij} = sum over the expansion of e_i e_j.
    Vec traces = zero_vec(n, a.conductor());
    for (int k = 0; k < n; ++k)
        traces[k] = a.trace_left_mult(unit_vec(n, a.conductor(), k));
    Matrix form(n, n, a.conductor());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            CycScalar t = CycScalar::zero(a.conductor());
            for (const auto& term : a.basis_product(i, j)) t += term.coeff * traces[term.index];
            form.at(i, j) = t;
        }
    return rank(form) == n;
}

Matrix gram(const FinDimAlgebra& a, const Functional& omega) {
    const int n = a.dim();
    if (static_cast<int>(omega.coeffs.size()) != n) throw std::invalid_argument("gram: shape mismatch");
    Matrix g(n, n, a.conductor());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            CycScalar v = CycScalar::zero(a.conductor());
            for (const auto& term : a.basis_product(i, j)) v += term.coeff * omega.coeffs[term.index];
            g.at(i, j) = v;
        }
    return g;
}

bool is_faithful_functional(const FinDimAlgebra& a, const Functional& omega) {
    return rank(gram(a, omega)) == a.dim();
}

std::optional<Functional> frobenius_search(const FinDimAlgebra& a, int trials, std::uint64_t rng_seed) {
    if (!a.is_unital()) throw std::invalid_argument("frobenius_search: algebra must be unital");
    std::mt19937_64 rng(rng_seed);
    for (int t = 0; t < trials; ++t) {
        const long long range = 2 + t;  // grow the coordinate range with failures
        Functional omega;
        omega.coeffs = zero_vec(a.dim(), a.conductor());
        for (auto& c : omega.coeffs) {
            const long long span = 2 * range + 1;
            const long long value = static_cast<long long>(rng() % static_cast<std::uint64_t>(span)) - range;
            c = CycScalar::from_integer(a.conductor(), value);
        }
        if (is_faithful_functional(a, omega)) return omega;
    }
    return std::nullopt;
}

bool is_multiplicative(const FinDimAlgebra& a, const Functional& mu) {
    if (!a.is_unital()) throw std::invalid_argument("is_multiplicative: algebra must be unital");
    if (static_cast<int>(mu.coeffs.size()) != a.dim())
        throw std::invalid_argument("is_multiplicative: shape mismatch");
    if (!mu(*a.unit()).is_one()) return false;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            CycScalar lhs = CycScalar::zero(a.conductor());
            for (const auto& term : a.basis_product(i, j)) lhs += term.coeff * mu.coeffs[term.index];
            if (lhs != mu.coeffs[i] * mu.coeffs[j]) return false;
        }
    return true;
}

Subspace functional_kernel(const FinDimAlgebra& a, const Functional& mu) {
    Matrix m(1, a.dim(), a.conductor());
    for (int c = 0; c < a.dim(); ++c) m.at(0, c) = mu.coeffs[c];
    return kernel(m);
}

}  // namespace hopfint
