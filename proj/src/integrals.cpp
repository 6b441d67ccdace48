#include "hopfint/integrals.hpp"

#include <stdexcept>

namespace hopfint {

bool subspace_is_subalgebra(const HopfAlgebra& h, const Subspace& s) {
    for (int i = 0; i < s.dim(); ++i)
        for (int j = 0; j < s.dim(); ++j)
            if (!s.contains(h.multiply(s.basis_vector(i), s.basis_vector(j)))) return false;
    return true;
}

bool subspace_is_left_coideal(const HopfAlgebra& h, const Subspace& s) {
    // Delta(a) in H (x) s: every second-leg slice (row) must lie in s.
    for (int b = 0; b < s.dim(); ++b) {
        const TensorElement t = h.delta(s.basis_vector(b));
        for (int i = 0; i < h.dim(); ++i) {
            Vec row = t.matrix().row(i);
            if (!is_zero_vec(row) && !s.contains(row)) return false;
        }
    }
    return true;
}

CoidealSubalgebra CoidealSubalgebra::analyze(std::shared_ptr<const HopfAlgebra> ambient, Subspace space) {
    if (space.ambient_dim() != ambient->dim())
        throw std::invalid_argument("subspace does not live in the ambient Hopf algebra");
    CoidealSubalgebra a;
    a.is_subalgebra = subspace_is_subalgebra(*ambient, space);
    a.is_left_coideal = subspace_is_left_coideal(*ambient, space);
    a.contains_unit = space.contains(ambient->unit());
    a.ambient = std::move(ambient);
    a.space = std::move(space);
    return a;
}

FinDimAlgebra induced_algebra(const CoidealSubalgebra& a) {
    if (!a.is_subalgebra) throw std::invalid_argument("span is not multiplicatively closed");
    const HopfAlgebra& h = *a.ambient;
    const int k = a.dim();
    std::vector<SparseVec> products;
    products.reserve(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const Vec prod = h.multiply(a.space.basis_vector(i), a.space.basis_vector(j));
            auto coords = a.space.coordinates(prod);
            if (!coords) throw std::logic_error("closed subalgebra product left the span");
            products.push_back(to_sparse(*coords));
        }
    std::optional<Vec> unit;
    if (a.contains_unit) unit = *a.space.coordinates(h.unit());
    return FinDimAlgebra::from_sparse(k, h.conductor(), std::move(products), std::move(unit));
}

Functional counit_restricted(const CoidealSubalgebra& a) {
    Functional mu;
    mu.coeffs = zero_vec(a.dim(), a.ambient->conductor());
    for (int i = 0; i < a.dim(); ++i) mu.coeffs[i] = a.ambient->counit_value(a.space.basis_vector(i));
    return mu;
}

namespace {

void require_multiplicative(const CoidealSubalgebra& a, const Functional& mu) {
    if (static_cast<int>(mu.coeffs.size()) != a.dim())
        throw std::invalid_argument("mu must be given on the echelon basis of A");
    if (mu.is_zero()) throw std::invalid_argument("mu must be nonzero");
    if (!is_multiplicative(induced_algebra(a), mu))
        throw std::invalid_argument("mu is not multiplicative on A");
}

Subspace one_sided_integrals(const CoidealSubalgebra& a, const Functional& mu, Side side) {
    require_multiplicative(a, mu);
    const HopfAlgebra& h = *a.ambient;
    const int n = h.dim();
    const int k = a.dim();
    // Unknown: coordinates c of Lambda in the echelon basis. For each basis
    // vector b_i the ambient equation b_i Lambda - mu(b_i) Lambda = 0 (or its
    // right-sided mirror) contributes n rows.
    Matrix system(n * k, k, h.conductor());
    for (int i = 0; i < k; ++i) {
        const Vec b_i = a.space.basis_vector(i);
        for (int m = 0; m < k; ++m) {
            const Vec b_m = a.space.basis_vector(m);
            Vec col = side == Side::left ? h.multiply(b_i, b_m) : h.multiply(b_m, b_i);
            col = sub(col, scale(mu.coeffs[i], b_m));
            for (int r = 0; r < n; ++r) system.at(i * n + r, m) = col[r];
        }
    }
    const Subspace coeff_solutions = kernel(system);
    std::vector<Vec> ambient_vectors;
    for (int i = 0; i < coeff_solutions.dim(); ++i)
        ambient_vectors.push_back(a.space.from_coordinates(coeff_solutions.basis_vector(i)));
    return Subspace::from_spanning(ambient_vectors, n, h.conductor());
}

}  // namespace

Subspace left_integrals(const CoidealSubalgebra& a, const Functional& mu) {
    return one_sided_integrals(a, mu, Side::left);
}

Subspace right_integrals(const CoidealSubalgebra& a, const Functional& mu) {
    return one_sided_integrals(a, mu, Side::right);
}

Vec InducedData::pi_apply(const Vec& element_of_subalgebra) const {
    auto coords = subalgebra.space.coordinates(element_of_subalgebra);
    if (!coords) throw std::invalid_argument("element outside the induced subalgebra");
    return pi.apply(*coords);
}

InducedData induced_subalgebra(std::shared_ptr<const HopfAlgebra> h, const Vec& lam_tilde) {
    if (is_zero_vec(lam_tilde)) throw std::invalid_argument("Lambda~ must be nonzero");
    const int n = h->dim();
    const int cond = h->conductor();
    const Subspace line = Subspace::from_spanning({lam_tilde}, n, cond);
    const int p = line.pivots()[0];
    const Vec u = line.basis_vector(0);  // lam_tilde scaled to pivot 1
    const CycScalar lam_pivot = lam_tilde[p];

    // Residual of Delta(a)(1 (x) Lambda~) against H (x) k Lambda~: row r must
    // be a multiple of u, i.e. t(r, c) - t(r, p) u_c = 0 for c != p.
    const TensorElement one_lam = tensor_of(h->unit(), lam_tilde);
    std::vector<TensorElement> images;
    images.reserve(n);
    for (int i = 0; i < n; ++i)
        images.push_back(h->tensor_multiply(h->delta(unit_vec(n, cond, i)), one_lam));

    Matrix system(n * (n - 1), n, cond);
    for (int i = 0; i < n; ++i) {
        int eq = 0;
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                if (c == p) continue;
                system.at(eq, i) = images[i].at(r, c) - images[i].at(r, p) * u[c];
                ++eq;
            }
    }
    CoidealSubalgebra a = CoidealSubalgebra::analyze(h, kernel(system));

    const int k = a.dim();
    Matrix pi(n, k, cond);
    const CycScalar pivot_inv = lam_pivot.inverse();
    for (int m = 0; m < k; ++m) {
        const TensorElement t = h->tensor_multiply(h->delta(a.space.basis_vector(m)), one_lam);
        for (int r = 0; r < n; ++r) pi.at(r, m) = t.at(r, p) * pivot_inv;
    }
    Functional mu;
    mu.coeffs = zero_vec(k, cond);
    for (int m = 0; m < k; ++m) mu.coeffs[m] = h->counit_value(pi.col(m));

    InducedData data;
    data.subalgebra = std::move(a);
    data.pi = std::move(pi);
    data.mu = std::move(mu);
    return data;
}

bool is_integral_type(const HopfAlgebra& h, const Vec& lambda) {
    if (is_zero_vec(lambda)) throw std::invalid_argument("integral-type candidate must be nonzero");
    const TensorElement lhs = h.tensor_multiply(h.delta(lambda), tensor_of(h.unit(), lambda));
    return lhs == tensor_of(lambda, lambda);
}

std::optional<Vec> lambda_integral_type(const HopfAlgebra& h, const Vec& lam_tilde) {
    if (is_zero_vec(lam_tilde)) throw std::invalid_argument("Lambda~ must be nonzero");
    const int n = h.dim();
    const TensorElement t = h.tensor_multiply(h.delta(lam_tilde), tensor_of(h.unit(), lam_tilde));
    const Subspace line = Subspace::from_spanning({lam_tilde}, n, h.conductor());
    const int p = line.pivots()[0];
    const CycScalar pivot_inv = lam_tilde[p].inverse();
    Vec c = zero_vec(n, h.conductor());
    for (int r = 0; r < n; ++r) c[r] = t.at(r, p) * pivot_inv;
    if (t != tensor_of(c, lam_tilde)) return std::nullopt;
    if (is_zero_vec(c) || !is_integral_type(h, c)) return std::nullopt;
    return c;
}

bool is_nondegenerate(std::shared_ptr<const HopfAlgebra> h, const Vec& lam_tilde) {
    if (!lambda_integral_type(*h, lam_tilde))
        throw std::invalid_argument("is_nondegenerate: Lambda~ is not of Lambda-integral type");
    const Subspace v = smallest_left_coideal(*h, lam_tilde);
    const bool unit_in_v = v.contains(h->unit());
    const InducedData data = induced_subalgebra(h, lam_tilde);
    const bool spaces_agree = v == data.subalgebra.space;
    if (unit_in_v != spaces_agree)
        throw std::logic_error("non-degeneracy criteria disagree; internal inconsistency");
    return unit_in_v;
}

const char* to_string(ProjectionClass c) {
    switch (c) {
        case ProjectionClass::none: return "none";
        case ProjectionClass::right: return "right";
        case ProjectionClass::left: return "left";
        case ProjectionClass::two_sided: return "two_sided";
    }
    return "?";
}

ProjectionClass classify_group_like_projection(const HopfAlgebra& h, const Vec& p) {
    if (is_zero_vec(p)) throw std::invalid_argument("projection must be nonzero");
    if (h.multiply(p, p) != p) throw std::invalid_argument("not an idempotent");
    const TensorElement d = h.delta(p);
    const TensorElement pp = tensor_of(p, p);
    const TensorElement one_p = tensor_of(h.unit(), p);
    const TensorElement p_one = tensor_of(p, h.unit());
    const bool right = h.tensor_multiply(d, one_p) == pp && h.tensor_multiply(one_p, d) == pp;
    const bool left = h.tensor_multiply(d, p_one) == pp && h.tensor_multiply(p_one, d) == pp;
    if (right && left) return ProjectionClass::two_sided;
    if (right) return ProjectionClass::right;
    if (left) return ProjectionClass::left;
    return ProjectionClass::none;
}

bool is_unimodular(const CoidealSubalgebra& a) {
    const Functional eps = counit_restricted(a);
    if (eps.is_zero()) throw std::invalid_argument("counit restricts trivially to A");
    return left_integrals(a, eps) == right_integrals(a, eps);
}

bool check_pi_identity(const HopfAlgebra& h, const Vec& lam_tilde, const InducedData& data) {
    const TensorElement d = h.delta(lam_tilde);
    for (int m = 0; m < data.subalgebra.dim(); ++m) {
        const Vec a = data.subalgebra.space.basis_vector(m);
        const TensorElement lhs = h.tensor_multiply(tensor_of(h.unit(), a), d);
        const Vec s_pi = h.antipode(data.pi.col(m));
        const TensorElement rhs = h.tensor_multiply(tensor_of(s_pi, h.unit()), d);
        if (lhs != rhs) return false;
    }
    return true;
}

std::vector<Vec> scan_integral_type(const HopfAlgebra& h, const std::vector<Vec>& candidates) {
    std::vector<Vec> hits;
    for (const auto& c : candidates)
        if (!is_zero_vec(c) && is_integral_type(h, c)) hits.push_back(c);
    return hits;
}

}  // namespace hopfint
