#include "hopfint/taft.hpp"

#include <map>
#include <stdexcept>

namespace hopfint {

namespace {

using PairKey = std::pair<int, int>;

SparseTensor sparse_from_map(const std::map<PairKey, CycScalar>& acc) {
    SparseTensor out;
    for (const auto& [key, coeff] : acc)
        if (!coeff.is_zero()) out.push_back({key.first, key.second, coeff});
    return out;
}

SparseTensor sparse_tensor_multiply(const FinDimAlgebra& alg, const SparseTensor& s,
                                    const SparseTensor& t) {
    std::map<PairKey, CycScalar> acc;
    for (const auto& a : s)
        for (const auto& b : t) {
            const CycScalar c = a.coeff * b.coeff;
            for (const auto& p : alg.basis_product(a.first, b.first))
                for (const auto& q : alg.basis_product(a.second, b.second)) {
                    const PairKey key{p.index, q.index};
                    auto it = acc.find(key);
                    if (it == acc.end())
                        acc.emplace(key, c * p.coeff * q.coeff);
                    else
                        it->second += c * p.coeff * q.coeff;
                }
        }
    return sparse_from_map(acc);
}

}  // namespace

Vec TaftAlgebra::monomial(int i, int j) const {
    return unit_vec(hopf->dim(), hopf->conductor(), index(i, j));
}

TaftAlgebra build_taft(int n) {
    if (n < 2) throw std::invalid_argument("build_taft: n must be at least 2");
    const int dim = n * n;
    const CycScalar w = omega(n);
    std::vector<CycScalar> w_pow(n, CycScalar::one(n));
    for (int k = 1; k < n; ++k) w_pow[k] = w_pow[k - 1] * w;
    auto index = [n](int i, int j) { return i * n + j; };

    // (g^i x^j)(g^k x^l) = w^{-jk} g^{i+k} x^{j+l}, vanishing when j+l >= n.
    auto alg = FinDimAlgebra::from_table(
        dim, n,
        [&](int a, int b) {
            const int i = a / n, j = a % n, k = b / n, l = b % n;
            Vec out = zero_vec(dim, n);
            if (j + l < n) out[index((i + k) % n, j + l)] = w_pow[((n - (j * k) % n) % n)];
            return out;
        },
        unit_vec(dim, n, 0));

    // Delta extended multiplicatively from Delta(g), Delta(x).
    const SparseTensor delta_g = {{index(1, 0), index(1, 0), CycScalar::one(n)}};
    const SparseTensor delta_x = {{index(0, 1), index(0, 0), CycScalar::one(n)},
                                  {index(1, 0), index(0, 1), CycScalar::one(n)}};
    std::vector<SparseTensor> g_powers(n), x_powers(n);
    g_powers[0] = {{0, 0, CycScalar::one(n)}};
    x_powers[0] = {{0, 0, CycScalar::one(n)}};
    for (int k = 1; k < n; ++k) {
        g_powers[k] = sparse_tensor_multiply(alg, g_powers[k - 1], delta_g);
        x_powers[k] = sparse_tensor_multiply(alg, x_powers[k - 1], delta_x);
    }
    std::vector<SparseTensor> delta(dim);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            delta[index(i, j)] = sparse_tensor_multiply(alg, g_powers[i], x_powers[j]);

    Functional counit;
    counit.coeffs = zero_vec(dim, n);
    for (int i = 0; i < n; ++i) counit.coeffs[index(i, 0)] = CycScalar::one(n);

    // Antipode from the axiom: S(g) g = 1 and S(x) 1 + S(g) x = 0, then
    // extended anti-multiplicatively over the monomial basis.
    auto s_g = solve(alg.right_mult_matrix(unit_vec(dim, n, index(1, 0))), unit_vec(dim, n, 0));
    if (!s_g) throw std::logic_error("antipode solve for g failed");
    const Vec s_x = scale(-CycScalar::one(n), alg.multiply(*s_g, unit_vec(dim, n, index(0, 1))));
    std::vector<Vec> s_g_pow(n), s_x_pow(n);
    s_g_pow[0] = unit_vec(dim, n, 0);
    s_x_pow[0] = unit_vec(dim, n, 0);
    for (int k = 1; k < n; ++k) {
        s_g_pow[k] = alg.multiply(s_g_pow[k - 1], *s_g);
        s_x_pow[k] = alg.multiply(s_x_pow[k - 1], s_x);
    }
    Matrix antipode(dim, dim, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Vec s = alg.multiply(s_x_pow[j], s_g_pow[i]);  // S(g^i x^j) = S(x)^j S(g)^i
            for (int r = 0; r < dim; ++r) antipode.at(r, index(i, j)) = s[r];
        }

    auto hopf = std::make_shared<HopfAlgebra>(HopfAlgebra::assemble(
        std::move(alg), std::move(delta), std::move(counit), std::move(antipode), Family::taft, n));
    if (!verify_hopf_axioms(*hopf).all_passed())
        throw std::logic_error("Taft construction failed Hopf axiom verification");

    TaftAlgebra t;
    t.n = n;
    t.omega = w;
    t.hopf = std::move(hopf);
    return t;
}

std::vector<std::string> taft_basis_labels(const TaftAlgebra& t) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(t.n) * t.n);
    for (int i = 0; i < t.n; ++i)
        for (int j = 0; j < t.n; ++j)
            labels.push_back("g^" + std::to_string(i) + " x^" + std::to_string(j));
    return labels;
}

CycScalar gaussian_binomial(const CycScalar& q, int k, int m) {
    if (m < 0 || m > k) return CycScalar::zero(q.conductor());
    std::vector<CycScalar> row{CycScalar::one(q.conductor())};  // row k = 0
    for (int kk = 1; kk <= k; ++kk) {
        std::vector<CycScalar> next(kk + 1, CycScalar::zero(q.conductor()));
        CycScalar q_pow = CycScalar::one(q.conductor());
        for (int mm = 0; mm <= kk; ++mm) {
            if (mm < kk) next[mm] += q_pow * row[mm];
            if (mm > 0) next[mm] += row[mm - 1];
            q_pow *= q;
        }
        row = std::move(next);
    }
    return row[m];
}

TensorElement delta_x_power(const TaftAlgebra& t, int k) {
    if (k < 0 || k >= t.n) throw std::invalid_argument("delta_x_power: need 0 <= k < n");
    const int dim = t.hopf->dim();
    TensorElement out(dim, t.hopf->conductor());
    for (int m = 0; m <= k; ++m) {
        // x^{k-m} g^m = w^{-(k-m)m} g^m x^{k-m} in the monomial basis.
        const CycScalar coeff =
            gaussian_binomial(t.omega, k, m) * t.omega.pow(-static_cast<long long>(k - m) * m);
        out.at(t.index(m, k - m), t.index(0, m)) += coeff;
    }
    return out;
}

Vec u_power(const TaftAlgebra& t, const CycScalar& beta, int k) {
    const CycScalar b = embed(beta, t.n);
    const Vec u = add(t.monomial(1, 0), scale(b, t.monomial(0, 1)));
    Vec acc = t.hopf->unit();
    for (int i = 0; i < k; ++i) acc = t.hopf->multiply(acc, u);
    return acc;
}

Vec p_beta(const TaftAlgebra& t, const CycScalar& beta) {
    if (beta.is_zero()) throw std::invalid_argument("p_beta: beta must be nonzero");
    Vec sum_v = zero_vec(t.hopf->dim(), t.n);
    Vec pow = t.hopf->unit();
    const Vec u = u_power(t, beta, 1);
    for (int k = 0; k < t.n; ++k) {
        sum_v = add(sum_v, pow);
        pow = t.hopf->multiply(pow, u);
    }
    const Vec p = scale(CycScalar::from_rational(t.n, Rational(1, t.n)), sum_v);
    if (t.hopf->multiply(p, p) != p) throw std::logic_error("P_beta is not idempotent");
    return p;
}

CoidealSubalgebra coideal_v_p_beta(const TaftAlgebra& t, const CycScalar& beta) {
    if (beta.is_zero()) throw std::invalid_argument("coideal_v_p_beta: beta must be nonzero");
    std::vector<Vec> span;
    for (int k = 0; k < t.n; ++k) span.push_back(u_power(t, beta, k));
    auto coideal = CoidealSubalgebra::analyze(
        t.hopf, Subspace::from_spanning(span, t.hopf->dim(), t.n));
    // The spanning family is in fact a basis; established by rank, not assumed.
    if (coideal.dim() != t.n) throw std::logic_error("V_P_beta has unexpected dimension");
    return coideal;
}

CoidealSubalgebra hopf_sub_h_d(const TaftAlgebra& t, int d) {
    if (d < 1 || t.n % d != 0) throw std::invalid_argument("hopf_sub_h_d: d must divide n");
    std::vector<Vec> span;
    for (int k = 0; k < t.n / d; ++k) span.push_back(t.monomial((d * k) % t.n, 0));
    return CoidealSubalgebra::analyze(t.hopf, Subspace::from_spanning(span, t.hopf->dim(), t.n));
}

Vec p_d(const TaftAlgebra& t, int d) {
    if (d < 1 || t.n % d != 0) throw std::invalid_argument("p_d: d must divide n");
    Vec sum_v = zero_vec(t.hopf->dim(), t.n);
    for (int k = 0; k < t.n / d; ++k) sum_v = add(sum_v, t.monomial((d * k) % t.n, 0));
    const Vec p = scale(CycScalar::from_rational(t.n, Rational(d, t.n)), sum_v);
    const CoidealSubalgebra h_d = hopf_sub_h_d(t, d);
    if (!member(left_integrals(h_d, counit_restricted(h_d)), p))
        throw std::logic_error("P_d is not an eps-integral of H_d");
    return p;
}

CoidealSubalgebra coideal_n_dx(const TaftAlgebra& t, int d) {
    if (d < 1 || t.n % d != 0) throw std::invalid_argument("coideal_n_dx: d must divide n");
    std::vector<Vec> span;
    for (int m = 0; m < t.n / d; ++m)
        for (int l = 0; l < t.n; ++l) span.push_back(t.monomial((d * m) % t.n, l));
    return CoidealSubalgebra::analyze(t.hopf, Subspace::from_spanning(span, t.hopf->dim(), t.n));
}

Vec lambda_dx(const TaftAlgebra& t, int d) {
    if (d < 1 || t.n % d != 0) throw std::invalid_argument("lambda_dx: d must divide n");
    Vec lambda = zero_vec(t.hopf->dim(), t.n);
    for (int k = 0; k < t.n / d; ++k) lambda = add(lambda, t.monomial((d * k) % t.n, t.n - 1));
    const CoidealSubalgebra n_dx = coideal_n_dx(t, d);
    if (!member(left_integrals(n_dx, counit_restricted(n_dx)), lambda))
        throw std::logic_error("Lambda is not an eps-integral of N_{d,x}");
    return lambda;
}

std::vector<int> divisors(int n) {
    std::vector<int> out;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

std::vector<CycScalar> default_beta_grid(int n) {
    std::vector<CycScalar> grid{CycScalar::from_integer(n, 1), CycScalar::from_integer(n, 2),
                                CycScalar::from_integer(n, -1), omega(n)};
    std::vector<CycScalar> unique;
    for (const auto& b : grid) {
        bool seen = false;
        for (const auto& u : unique)
            if (u == b) { seen = true; break; }
        if (!seen) unique.push_back(b);
    }
    return unique;
}

namespace {

struct FamilyInstance {
    std::string family;
    std::string parameter;
    CoidealSubalgebra coideal;
    Vec integral;                                          // the family eps-integral
    std::vector<std::pair<std::string, Vec>> family_basis; // closed-form labels
    // expected cointegral data for g^j
    std::function<bool(int)> expect_dim_one;
    std::function<CycScalar(int, int)> expected_value;     // (j, family-basis position)
};

std::vector<FamilyInstance> family_instances(const TaftAlgebra& t,
                                             const std::vector<CycScalar>& betas,
                                             const std::vector<int>& ds) {
    const int n = t.n;
    std::vector<FamilyInstance> out;
    for (const auto& beta : betas) {
        FamilyInstance f;
        f.family = "V_P_beta";
        f.parameter = scalar_to_string(embed(beta, n));
        f.coideal = coideal_v_p_beta(t, beta);
        f.integral = p_beta(t, beta);
        for (int k = 0; k < n; ++k)
            f.family_basis.emplace_back("(g+bx)^" + std::to_string(k), u_power(t, beta, k));
        f.expect_dim_one = [n](int j) { return (j + 1) % n == 0; };
        f.expected_value = [n](int /*j*/, int k) {
            return k == n - 1 ? CycScalar::from_integer(n, n) : CycScalar::zero(n);
        };
        out.push_back(std::move(f));
    }
    for (int d : ds) {
        FamilyInstance f;
        f.family = "H_d";
        f.parameter = std::to_string(d);
        f.coideal = hopf_sub_h_d(t, d);
        f.integral = p_d(t, d);
        for (int m = 0; m < n / d; ++m)
            f.family_basis.emplace_back("g^" + std::to_string(d * m), t.monomial((d * m) % n, 0));
        f.expect_dim_one = [d](int j) { return j % d == 0; };
        f.expected_value = [n, d](int j, int m) {
            const int k = (j / d) % (n / d);
            return m == k ? CycScalar::from_rational(n, Rational(n, d)) : CycScalar::zero(n);
        };
        out.push_back(std::move(f));
    }
    for (int d : ds) {
        FamilyInstance f;
        f.family = "N_dx";
        f.parameter = std::to_string(d);
        f.coideal = coideal_n_dx(t, d);
        f.integral = lambda_dx(t, d);
        for (int m = 0; m < n / d; ++m)
            for (int l = 0; l < n; ++l)
                f.family_basis.emplace_back(
                    "g^" + std::to_string(d * m) + " x^" + std::to_string(l),
                    t.monomial((d * m) % n, l));
        f.expect_dim_one = [d](int j) { return (j + 1) % d == 0; };
        f.expected_value = [n, d](int j, int pos) {
            const int m = pos / n, l = pos % n;
            const int k = ((j + 1) / d) % (n / d);  // j = dk - 1 mod n
            return (l == n - 1 && m == k) ? CycScalar::one(n) : CycScalar::zero(n);
        };
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace

CointegralTableReport cointegral_tables(const TaftAlgebra& t, const std::vector<CycScalar>& betas,
                                        const std::vector<int>& ds) {
    CointegralTableReport report;
    report.n = t.n;
    for (const auto& fam : family_instances(t, betas, ds)) {
        for (int j = 0; j < t.n; ++j) {
            const GroupLike g(*t.hopf, t.monomial(j, 0));
            const Subspace solutions = g_cointegrals(*t.hopf, fam.coideal.space, g);
            CointegralCell cell;
            cell.family = fam.family;
            cell.parameter = fam.parameter;
            cell.g_exponent = j;
            cell.dim = solutions.dim();
            const bool expect_one = fam.expect_dim_one(j);
            cell.dim_matches_closed_form = cell.dim == (expect_one ? 1 : 0);
            cell.values_match_closed_form = true;
            if (cell.dim == 1) {
                const Cointegral phi = normalize_on(*t.hopf, fam.coideal.space, g,
                                                    solutions.basis_vector(0), fam.integral);
                for (std::size_t pos = 0; pos < fam.family_basis.size(); ++pos) {
                    const CycScalar value = phi.evaluate(fam.family_basis[pos].second);
                    cell.phi_values.emplace_back(fam.family_basis[pos].first,
                                                 scalar_to_string(value));
                    if (expect_one && value != fam.expected_value(j, static_cast<int>(pos)))
                        cell.values_match_closed_form = false;
                }
                cell.faithful = cointegral_faithful(*t.hopf, fam.coideal.space, phi.values()) ==
                                Faithfulness::yes;
                if (!cell.faithful) cell.values_match_closed_form = false;
            }
            if (!cell.dim_matches_closed_form || !cell.values_match_closed_form)
                report.all_passed = false;
            report.cells.push_back(std::move(cell));
        }
    }
    return report;
}

CointegralTableReport cointegral_tables(const TaftAlgebra& t) {
    return cointegral_tables(t, default_beta_grid(t.n), divisors(t.n));
}

}  // namespace hopfint
