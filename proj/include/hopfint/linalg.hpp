#pragma once

#include "hopfint/cyclotomic.hpp"

#include <optional>
#include <vector>

namespace hopfint {

// Exact dense linear algebra over CycScalar. Subspaces are kept in reduced
// row-echelon form with leading coefficient 1, so subspace equality is
// equality of basis matrices. Dense arithmetic throughout: every object in
// this artifact has dimension at most a few dozen.

using Vec = std::vector<CycScalar>;

Vec zero_vec(int dim, int conductor);
Vec unit_vec(int dim, int conductor, int index);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const CycScalar& c, const Vec& v);
CycScalar dot(const Vec& a, const Vec& b);
int vec_conductor(const Vec& v);

class Matrix {
  public:
    Matrix() : Matrix(0, 0, 1) {}
    Matrix(int rows, int cols, int conductor);
    static Matrix identity(int n, int conductor);
    static Matrix from_rows(const std::vector<Vec>& rows, int cols, int conductor);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int conductor() const { return conductor_; }

    const CycScalar& at(int r, int c) const { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
    CycScalar& at(int r, int c) { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }

    Vec row(int r) const;
    Vec col(int c) const;
    void set_row(int r, const Vec& v);

    /// Image of v under the map whose column c is the image of e_c.
    Vec apply(const Vec& v) const;
    Matrix transpose() const;
    Matrix multiply(const Matrix& rhs) const;
    /// Inverse of a square matrix, if it exists.
    std::optional<Matrix> inverse() const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.conductor_ == b.conductor_ &&
               a.entries_ == b.entries_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  private:
    int rows_, cols_, conductor_;
    std::vector<CycScalar> entries_;  // row major
};

Matrix rref(const Matrix& m);
int rank(const Matrix& m);
/// Any exact solution of m x = rhs, or nullopt.
std::optional<Vec> solve(const Matrix& m, const Vec& rhs);

class Subspace {
  public:
    Subspace() : Subspace(0, 1) {}
    /// Zero subspace of the given ambient space.
    Subspace(int ambient_dim, int conductor);
    static Subspace from_spanning(const std::vector<Vec>& vectors, int ambient_dim, int conductor);
    static Subspace from_matrix_rows(const Matrix& m);
    static Subspace full(int ambient_dim, int conductor);

    int ambient_dim() const { return ambient_dim_; }
    int dim() const { return basis_.rows(); }
    int conductor() const { return basis_.conductor(); }
    const Matrix& basis() const { return basis_; }
    Vec basis_vector(int i) const { return basis_.row(i); }
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains(const Vec& v) const;
    /// Coordinates of v in the echelon basis; nullopt if v is outside.
    std::optional<Vec> coordinates(const Vec& v) const;
    /// Linear combination of the echelon basis with the given coordinates.
    Vec from_coordinates(const Vec& coords) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  private:
    int ambient_dim_;
    Matrix basis_;  // dim x ambient_dim, reduced row-echelon, no zero rows
    std::vector<int> pivots_;
};

/// {v : m v = 0} as a canonical subspace of k^cols.
Subspace kernel(const Matrix& m);
bool member(const Subspace& s, const Vec& v);
Subspace sum(const Subspace& s, const Subspace& t);
/// Intersection via the kernel of the stacked-coefficients system.
Subspace intersect(const Subspace& s, const Subspace& t);

// An element of H (x) H as the dense array of coefficients t_{ij} of
// e_i (x) e_j; the first tensor leg is the row index.
class TensorElement {
  public:
    TensorElement(int dim, int conductor) : mat_(dim, dim, conductor) {}
    explicit TensorElement(Matrix m);

    int dim() const { return mat_.rows(); }
    int conductor() const { return mat_.conductor(); }
    const Matrix& matrix() const { return mat_; }

    const CycScalar& at(int i, int j) const { return mat_.at(i, j); }
    CycScalar& at(int i, int j) { return mat_.at(i, j); }

    bool is_zero() const;

    friend bool operator==(const TensorElement& a, const TensorElement& b) {
        return a.mat_ == b.mat_;
    }
    friend bool operator!=(const TensorElement& a, const TensorElement& b) { return !(a == b); }

  private:
    Matrix mat_;
};

TensorElement tensor_of(const Vec& a, const Vec& b);
TensorElement tensor_add(const TensorElement& s, const TensorElement& t);
TensorElement tensor_sub(const TensorElement& s, const TensorElement& t);
TensorElement tensor_scale(const CycScalar& c, const TensorElement& t);

int tensor_rank(const TensorElement& t);
/// Span of the second-leg components (the rows of t).
Subspace row_space(const TensorElement& t);
/// Span of the first-leg components (the columns of t).
Subspace col_space(const TensorElement& t);

}  // namespace hopfint
