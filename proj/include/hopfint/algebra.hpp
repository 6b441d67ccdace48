#pragma once

#include "hopfint/linalg.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hopfint {

/// A linear functional, stored by its values on the basis.
struct Functional {
    Vec coeffs;

    CycScalar operator()(const Vec& v) const { return dot(coeffs, v); }
    bool is_zero() const { return is_zero_vec(coeffs); }

    friend bool operator==(const Functional& a, const Functional& b) { return a.coeffs == b.coeffs; }
};

struct SparseTerm {
    int index;
    CycScalar coeff;
};
using SparseVec = std::vector<SparseTerm>;

SparseVec to_sparse(const Vec& v);
Vec to_dense(const SparseVec& s, int dim, int conductor);

// A finite-dimensional associative algebra given by structure constants.
// The unit is optional so that the degenerate non-unital cases can be
// represented and rejected where the theory requires a unit.
class FinDimAlgebra {
  public:
    /// product(i, j) = coefficient vector of e_i e_j.
    static FinDimAlgebra from_table(int dim, int conductor,
                                    const std::function<Vec(int, int)>& product,
                                    std::optional<Vec> unit);
    static FinDimAlgebra from_sparse(int dim, int conductor,
                                     std::vector<SparseVec> products,
                                     std::optional<Vec> unit);

    int dim() const { return dim_; }
    int conductor() const { return conductor_; }
    const std::optional<Vec>& unit() const { return unit_; }
    bool is_unital() const { return unit_.has_value(); }

    const SparseVec& basis_product(int i, int j) const { return mult_[static_cast<std::size_t>(i) * dim_ + j]; }

    Vec multiply(const Vec& a, const Vec& b) const;
    /// Matrix of b -> a b.
    Matrix left_mult_matrix(const Vec& a) const;
    /// Matrix of b -> b a.
    Matrix right_mult_matrix(const Vec& a) const;
    CycScalar trace_left_mult(const Vec& a) const;

    /// Associativity on all basis triples.
    bool check_associativity() const;
    /// Unit laws on all basis vectors (false when no unit is present).
    bool check_unit_laws() const;

  private:
    int dim_ = 0;
    int conductor_ = 1;
    std::vector<SparseVec> mult_;
    std::optional<Vec> unit_;
};

enum class Side { left, right };

/// r(I) = {a : b a = 0 for all b in I}.
Subspace right_annihilator(const FinDimAlgebra& a, const Subspace& ideal);
/// l(I) = {a : a b = 0 for all b in I}.
Subspace left_annihilator(const FinDimAlgebra& a, const Subspace& ideal);

bool is_left_ideal(const FinDimAlgebra& a, const Subspace& ideal);
bool is_right_ideal(const FinDimAlgebra& a, const Subspace& ideal);

/// For a left ideal: l(r(I)) = I. For a right ideal: r(l(I)) = I.
/// Throws std::invalid_argument when I is not an ideal of the stated side.
bool check_biannihilator(const FinDimAlgebra& a, const Subspace& ideal, Side side);

/// Dickson criterion, valid over characteristic 0: the trace form
/// T(a, b) = tr(L_{ab}) is nondegenerate iff the algebra is semisimple.
/// Throws std::invalid_argument on non-unital input.
bool is_semisimple(const FinDimAlgebra& a);

/// gram_{ij} = omega(e_i e_j).
Matrix gram(const FinDimAlgebra& a, const Functional& omega);
bool is_faithful_functional(const FinDimAlgebra& a, const Functional& omega);

/// Randomized search for a faithful functional with small integer values;
/// a hit is an exact certificate that the algebra is Frobenius, a miss
/// after `trials` attempts certifies nothing.
std::optional<Functional> frobenius_search(const FinDimAlgebra& a, int trials, std::uint64_t rng_seed);

/// mu(e_i e_j) = mu(e_i) mu(e_j) for all basis pairs and mu(1) = 1.
bool is_multiplicative(const FinDimAlgebra& a, const Functional& mu);

/// ker(mu) as a subspace of the algebra.
Subspace functional_kernel(const FinDimAlgebra& a, const Functional& mu);

}  // namespace hopfint
