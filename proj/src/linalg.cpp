#include "hopfint/linalg.hpp"

#include <stdexcept>

namespace hopfint {

Vec zero_vec(int dim, int conductor) { return Vec(dim, CycScalar::zero(conductor)); }

Vec unit_vec(int dim, int conductor, int index) {
    Vec v = zero_vec(dim, conductor);
    v[index] = CycScalar::one(conductor);
    return v;
}

bool is_zero_vec(const Vec& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector shape mismatch");
    Vec out = a;
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector shape mismatch");
    Vec out = a;
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return out;
}

Vec scale(const CycScalar& c, const Vec& v) {
    Vec out = v;
    for (auto& x : out) x *= c;
    return out;
}

CycScalar dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size() || a.empty()) throw std::invalid_argument("vector shape mismatch");
    CycScalar acc = CycScalar::zero(a[0].conductor());
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

int vec_conductor(const Vec& v) {
    if (v.empty()) throw std::invalid_argument("empty vector has no conductor");
    return v[0].conductor();
}

Matrix::Matrix(int rows, int cols, int conductor)
    : rows_(rows), cols_(cols), conductor_(conductor),
      entries_(static_cast<std::size_t>(rows) * cols, CycScalar::zero(conductor)) {}

Matrix Matrix::identity(int n, int conductor) {
    Matrix m(n, n, conductor);
    for (int i = 0; i < n; ++i) m.at(i, i) = CycScalar::one(conductor);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, int cols, int conductor) {
    Matrix m(static_cast<int>(rows.size()), cols, conductor);
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(static_cast<int>(r), rows[r]);
    return m;
}

Vec Matrix::row(int r) const {
    Vec v;
    v.reserve(cols_);
    for (int c = 0; c < cols_; ++c) v.push_back(at(r, c));
    return v;
}

Vec Matrix::col(int c) const {
    Vec v;
    v.reserve(rows_);
    for (int r = 0; r < rows_; ++r) v.push_back(at(r, c));
    return v;
}

void Matrix::set_row(int r, const Vec& v) {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("row shape mismatch");
    for (int c = 0; c < cols_; ++c) at(r, c) = v[c];
}

Vec Matrix::apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matrix/vector shape mismatch");
    Vec out = zero_vec(rows_, conductor_);
    for (int c = 0; c < cols_; ++c) {
        if (v[c].is_zero()) continue;
        for (int r = 0; r < rows_; ++r) {
            if (!at(r, c).is_zero()) out[r] += at(r, c) * v[c];
        }
    }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_, conductor_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
    return out;
}

Matrix Matrix::multiply(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix out(rows_, rhs.cols_, conductor_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            if (at(r, k).is_zero()) continue;
            for (int c = 0; c < rhs.cols_; ++c)
                if (!rhs.at(k, c).is_zero()) out.at(r, c) += at(r, k) * rhs.at(k, c);
        }
    return out;
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    // Gauss-Jordan on [A | I].
    Matrix aug(rows_, 2 * cols_, conductor_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
        aug.at(r, cols_ + r) = CycScalar::one(conductor_);
    }
    Matrix red = rref(aug);
    for (int i = 0; i < rows_; ++i)
        if (!red.at(i, i).is_one()) return std::nullopt;
    Matrix inv(rows_, cols_, conductor_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) inv.at(r, c) = red.at(r, cols_ + c);
    return inv;
}

Matrix rref(const Matrix& m) {
    Matrix a = m;
    int pivot_row = 0;
    for (int col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
        int sel = -1;
        for (int r = pivot_row; r < a.rows(); ++r)
            if (!a.at(r, col).is_zero()) { sel = r; break; }
        if (sel < 0) continue;
        if (sel != pivot_row)
            for (int c = 0; c < a.cols(); ++c) std::swap(a.at(sel, c), a.at(pivot_row, c));
        const CycScalar inv = a.at(pivot_row, col).inverse();
        for (int c = col; c < a.cols(); ++c) a.at(pivot_row, c) *= inv;
        for (int r = 0; r < a.rows(); ++r) {
            if (r == pivot_row || a.at(r, col).is_zero()) continue;
            const CycScalar f = a.at(r, col);
            for (int c = col; c < a.cols(); ++c) a.at(r, c) -= f * a.at(pivot_row, c);
        }
        ++pivot_row;
    }
    return a;
}

int rank(const Matrix& m) {
    Matrix r = rref(m);
    int rk = 0;
    for (int i = 0; i < r.rows(); ++i) {
        bool nonzero = false;
        for (int c = 0; c < r.cols(); ++c)
            if (!r.at(i, c).is_zero()) { nonzero = true; break; }
        if (nonzero) ++rk;
    }
    return rk;
}

std::optional<Vec> solve(const Matrix& m, const Vec& rhs) {
    if (static_cast<int>(rhs.size()) != m.rows()) throw std::invalid_argument("solve: shape mismatch");
    Matrix aug(m.rows(), m.cols() + 1, m.conductor());
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = rhs[r];
    }
    Matrix red = rref(aug);
    Vec x = zero_vec(m.cols(), m.conductor());
    for (int r = 0; r < red.rows(); ++r) {
        int lead = -1;
        for (int c = 0; c < red.cols(); ++c)
            if (!red.at(r, c).is_zero()) { lead = c; break; }
        if (lead < 0) continue;
        if (lead == m.cols()) return std::nullopt;  // 0 = 1 row
        x[lead] = red.at(r, m.cols());
    }
    return x;
}

Subspace::Subspace(int ambient_dim, int conductor)
    : ambient_dim_(ambient_dim), basis_(0, ambient_dim, conductor) {}

Subspace Subspace::from_matrix_rows(const Matrix& m) {
    Matrix red = rref(m);
    std::vector<Vec> rows;
    std::vector<int> pivots;
    for (int r = 0; r < red.rows(); ++r) {
        int lead = -1;
        for (int c = 0; c < red.cols(); ++c)
            if (!red.at(r, c).is_zero()) { lead = c; break; }
        if (lead < 0) continue;
        rows.push_back(red.row(r));
        pivots.push_back(lead);
    }
    Subspace s(red.cols(), red.conductor());
    s.basis_ = Matrix::from_rows(rows, red.cols(), red.conductor());
    s.pivots_ = std::move(pivots);
    return s;
}

Subspace Subspace::from_spanning(const std::vector<Vec>& vectors, int ambient_dim, int conductor) {
    return from_matrix_rows(Matrix::from_rows(vectors, ambient_dim, conductor));
}

Subspace Subspace::full(int ambient_dim, int conductor) {
    return from_matrix_rows(Matrix::identity(ambient_dim, conductor));
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    if (static_cast<int>(v.size()) != ambient_dim_) throw std::invalid_argument("ambient shape mismatch");
    // The basis is in RREF, so the coordinate along row i is just the pivot
    // component of v; membership holds iff the residual vanishes.
    Vec coords = zero_vec(dim(), conductor());
    Vec residual = v;
    for (int i = 0; i < dim(); ++i) {
        const CycScalar c = residual[pivots_[i]];
        if (!c.is_zero()) {
            for (int j = 0; j < ambient_dim_; ++j) residual[j] -= c * basis_.at(i, j);
        }
        coords[i] = c;
    }
    if (!is_zero_vec(residual)) return std::nullopt;
    return coords;
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

Vec Subspace::from_coordinates(const Vec& coords) const {
    if (static_cast<int>(coords.size()) != dim()) throw std::invalid_argument("coordinate shape mismatch");
    Vec out = zero_vec(ambient_dim_, conductor());
    for (int i = 0; i < dim(); ++i)
        if (!coords[i].is_zero())
            for (int j = 0; j < ambient_dim_; ++j) out[j] += coords[i] * basis_.at(i, j);
    return out;
}

Subspace kernel(const Matrix& m) {
    Matrix red = rref(m);
    std::vector<int> pivot_of_col(m.cols(), -1);
    int r = 0;
    for (int c = 0; c < m.cols() && r < red.rows(); ++c) {
        if (!red.at(r, c).is_zero()) {
            pivot_of_col[c] = r;
            ++r;
        }
    }
    std::vector<Vec> basis;
    for (int c = 0; c < m.cols(); ++c) {
        if (pivot_of_col[c] >= 0) continue;
        Vec v = zero_vec(m.cols(), m.conductor());
        v[c] = CycScalar::one(m.conductor());
        for (int cc = 0; cc < c; ++cc)
            if (pivot_of_col[cc] >= 0) v[cc] = -red.at(pivot_of_col[cc], c);
        basis.push_back(std::move(v));
    }
    return Subspace::from_spanning(basis, m.cols(), m.conductor());
}

bool member(const Subspace& s, const Vec& v) { return s.contains(v); }

Subspace sum(const Subspace& s, const Subspace& t) {
    if (s.ambient_dim() != t.ambient_dim()) throw std::invalid_argument("ambient mismatch");
    std::vector<Vec> rows;
    for (int i = 0; i < s.dim(); ++i) rows.push_back(s.basis_vector(i));
    for (int i = 0; i < t.dim(); ++i) rows.push_back(t.basis_vector(i));
    return Subspace::from_spanning(rows, s.ambient_dim(), s.conductor());
}

Subspace intersect(const Subspace& s, const Subspace& t) {
    if (s.ambient_dim() != t.ambient_dim()) throw std::invalid_argument("ambient mismatch");
    // Columns of the stacked system are the combined basis vectors; a kernel
    // element is a combination of s-vectors equal to a combination of
    // t-vectors, i.e. a point of the intersection.
    const int k = s.dim(), l = t.dim();
    Matrix stacked(s.ambient_dim(), k + l, s.conductor());
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < s.ambient_dim(); ++j) stacked.at(j, i) = s.basis().at(i, j);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < s.ambient_dim(); ++j) stacked.at(j, k + i) = -t.basis().at(i, j);
    Subspace ker = kernel(stacked);
    std::vector<Vec> rows;
    for (int i = 0; i < ker.dim(); ++i) {
        Vec c = ker.basis_vector(i);
        Vec point = zero_vec(s.ambient_dim(), s.conductor());
        for (int m = 0; m < k; ++m)
            if (!c[m].is_zero())
                for (int j = 0; j < s.ambient_dim(); ++j) point[j] += c[m] * s.basis().at(m, j);
        rows.push_back(std::move(point));
    }
    return Subspace::from_spanning(rows, s.ambient_dim(), s.conductor());
}

TensorElement::TensorElement(Matrix m) : mat_(std::move(m)) {
    if (mat_.rows() != mat_.cols()) throw std::invalid_argument("tensor element must be square");
}

bool TensorElement::is_zero() const {
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j)
            if (!at(i, j).is_zero()) return false;
    return true;
}

TensorElement tensor_of(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("tensor legs must share dimension");
    TensorElement t(static_cast<int>(a.size()), vec_conductor(a));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) t.at(static_cast<int>(i), static_cast<int>(j)) = a[i] * b[j];
    }
    return t;
}

TensorElement tensor_add(const TensorElement& s, const TensorElement& t) {
    if (s.dim() != t.dim()) throw std::invalid_argument("tensor shape mismatch");
    TensorElement out = s;
    for (int i = 0; i < t.dim(); ++i)
        for (int j = 0; j < t.dim(); ++j)
            if (!t.at(i, j).is_zero()) out.at(i, j) += t.at(i, j);
    return out;
}

TensorElement tensor_sub(const TensorElement& s, const TensorElement& t) {
    if (s.dim() != t.dim()) throw std::invalid_argument("tensor shape mismatch");
    TensorElement out = s;
    for (int i = 0; i < t.dim(); ++i)
        for (int j = 0; j < t.dim(); ++j)
            if (!t.at(i, j).is_zero()) out.at(i, j) -= t.at(i, j);
    return out;
}

TensorElement tensor_scale(const CycScalar& c, const TensorElement& t) {
    TensorElement out = t;
    for (int i = 0; i < t.dim(); ++i)
        for (int j = 0; j < t.dim(); ++j)
            if (!out.at(i, j).is_zero()) out.at(i, j) *= c;
    return out;
}

int tensor_rank(const TensorElement& t) { return rank(t.matrix()); }

Subspace row_space(const TensorElement& t) { return Subspace::from_matrix_rows(t.matrix()); }

Subspace col_space(const TensorElement& t) {
    return Subspace::from_matrix_rows(t.matrix().transpose());
}

}  // namespace hopfint
