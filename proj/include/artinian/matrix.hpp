#pragma once

// Exact dense linear algebra over a field: matrices, reduced row echelon
// form, rank, kernels, solving, and incrementally maintained subspaces.

#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "field.hpp"

namespace artinian {

template <class F>
using Vec = std::vector<typename F::Element>;

template <class F>
Vec<F> zero_vector(const F& field, std::size_t n) {
    return Vec<F>(n, field.zero());
}

template <class F>
bool is_zero_vector(const F& field, const Vec<F>& v) {
    for (const auto& x : v)
        if (!field.is_zero(x)) return false;
    return true;
}

// v <- v - c*w
template <class F>
void sub_scaled(const F& field, Vec<F>& v, const typename F::Element& c, const Vec<F>& w) {
    if (field.is_zero(c)) return;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!field.is_zero(w[i])) v[i] = field.sub_mul(v[i], c, w[i]);
}

template <class F>
void scale_in_place(const F& field, Vec<F>& v, const typename F::Element& c) {
    for (auto& x : v) x = field.mul(x, c);
}

/// Row-major dense matrix. Vectors are columns: A.apply(v) computes A*v.
template <class F>
class Matrix {
public:
    using Element = typename F::Element;

    Matrix() = default;
    Matrix(F field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

    static Matrix identity(const F& field, std::size_t n) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
        return m;
    }

    static Matrix from_rows(const F& field, const std::vector<Vec<F>>& rows, std::size_t cols) {
        Matrix m(field, rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols) throw std::invalid_argument("Matrix::from_rows: ragged rows");
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
        }
        return m;
    }

    static Matrix from_columns(const F& field, std::size_t rows, const std::vector<Vec<F>>& columns) {
        Matrix m(field, rows, columns.size());
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (columns[c].size() != rows) throw std::invalid_argument("Matrix::from_columns: ragged columns");
            for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
        }
        return m;
    }

    const F& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Element& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vec<F> row(std::size_t r) const {
        return Vec<F>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                      data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    }
    Vec<F> column(std::size_t c) const {
        Vec<F> v(rows_, field_.zero());
        for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
        return v;
    }
    std::vector<Vec<F>> columns() const {
        std::vector<Vec<F>> out;
        out.reserve(cols_);
        for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
        return out;
    }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    Vec<F> apply(const Vec<F>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: shape mismatch");
        Vec<F> out(rows_, field_.zero());
        for (std::size_t c = 0; c < cols_; ++c) {
            if (field_.is_zero(v[c])) continue;
            for (std::size_t r = 0; r < rows_; ++r) {
                const Element& a = (*this)(r, c);
                if (!field_.is_zero(a)) out[r] = field_.add(out[r], field_.mul(a, v[c]));
            }
        }
        return out;
    }

    Matrix operator*(const Matrix& b) const {
        if (cols_ != b.rows_) throw std::invalid_argument("Matrix::operator*: shape mismatch");
        Matrix out(field_, rows_, b.cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Element& a = (*this)(r, k);
                if (field_.is_zero(a)) continue;
                for (std::size_t c = 0; c < b.cols_; ++c) {
                    const Element& x = b(k, c);
                    if (!field_.is_zero(x)) out(r, c) = field_.add(out(r, c), field_.mul(a, x));
                }
            }
        return out;
    }

    Matrix operator+(const Matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("Matrix::operator+: shape mismatch");
        Matrix out = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], b.data_[i]);
        return out;
    }

    Matrix scaled(const Element& c) const {
        Matrix out = *this;
        for (auto& x : out.data_) x = field_.mul(x, c);
        return out;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!field_.is_zero(x)) return false;
        return true;
    }

    bool operator==(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (std::size_t i = 0; i < data_.size(); ++i)
            if (!field_.equal(data_[i], o.data_[i])) return false;
        return true;
    }

    std::string to_string() const {
        std::ostringstream os;
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) os << (c ? "\t" : "") << field_.to_string((*this)(r, c));
            os << '\n';
        }
        return os.str();
    }

private:
    F field_{};
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Element> data_;
};

template <class F>
struct EchelonForm {
    Matrix<F> reduced;
    std::vector<std::size_t> pivot_cols;  // pivot row i has its leading 1 in pivot_cols[i]
};

/// Gauss-Jordan elimination. Columns are scanned left to right and the pivot
/// is the first nonzero entry at or below the current row.
template <class F>
EchelonForm<F> reduced_row_echelon(Matrix<F> a) {
    const F& field = a.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t pr = row;
        while (pr < a.rows() && field.is_zero(a(pr, col))) ++pr;
        if (pr == a.rows()) continue;
        if (pr != row)
            for (std::size_t c = col; c < a.cols(); ++c) std::swap(a(pr, c), a(row, c));
        auto inv = field.inv(a(row, col));
        for (std::size_t c = col; c < a.cols(); ++c) a(row, c) = field.mul(a(row, c), inv);
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row) continue;
            auto f = a(r, col);
            if (field.is_zero(f)) continue;
            for (std::size_t c = col; c < a.cols(); ++c)
                if (!field.is_zero(a(row, c))) a(r, c) = field.sub_mul(a(r, c), f, a(row, c));
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(a), std::move(pivots)};
}

template <class F>
std::size_t rank(const Matrix<F>& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0;
    // eliminate along the shorter side
    if (a.rows() > a.cols()) return reduced_row_echelon(a.transpose()).pivot_cols.size();
    return reduced_row_echelon(a).pivot_cols.size();
}

/// Kernel vectors of A, one per free column of the echelon form.
template <class F>
std::vector<Vec<F>> kernel_vectors(const Matrix<F>& a) {
    const F& field = a.field();
    auto ech = reduced_row_echelon(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : ech.pivot_cols) is_pivot[c] = true;
    std::vector<Vec<F>> out;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec<F> v(a.cols(), field.zero());
        v[free] = field.one();
        for (std::size_t i = 0; i < ech.pivot_cols.size(); ++i)
            v[ech.pivot_cols[i]] = field.neg(ech.reduced(i, free));
        out.push_back(std::move(v));
    }
    return out;
}

/// Columns form a basis of ker A.
template <class F>
Matrix<F> kernel_basis(const Matrix<F>& a) {
    return Matrix<F>::from_columns(a.field(), a.cols(), kernel_vectors(a));
}

/// Some x with A*x = b, or nullopt when the system is inconsistent.
template <class F>
std::optional<Vec<F>> solve(const Matrix<F>& a, const Vec<F>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: right-hand side has wrong length");
    const F& field = a.field();
    Matrix<F> aug(field, a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    auto ech = reduced_row_echelon(std::move(aug));
    if (!ech.pivot_cols.empty() && ech.pivot_cols.back() == a.cols()) return std::nullopt;
    Vec<F> x(a.cols(), field.zero());
    for (std::size_t i = 0; i < ech.pivot_cols.size(); ++i) x[ech.pivot_cols[i]] = ech.reduced(i, a.cols());
    return x;
}

/// A subspace of k^n held by a reduced basis: basis vector t is 1 at
/// pivots()[t] and 0 at every other pivot, so coordinates read off directly.
template <class F>
class Subspace {
public:
    using Element = typename F::Element;

    Subspace() = default;
    Subspace(F field, std::size_t ambient)
        : field_(std::move(field)), ambient_(ambient), pivot_row_(ambient, npos) {}

    static Subspace span(const F& field, std::size_t ambient, const std::vector<Vec<F>>& vectors) {
        Subspace s(field, ambient);
        for (const auto& v : vectors) s.insert(v);
        return s;
    }

    /// Adopts vectors that are already reduced: vector t is 1 at pivots[t]
    /// and 0 at every other listed pivot.
    static Subspace from_reduced(const F& field, std::size_t ambient, std::vector<Vec<F>> vectors,
                                 std::vector<std::size_t> pivots) {
        if (vectors.size() != pivots.size()) throw std::invalid_argument("Subspace::from_reduced: size mismatch");
        Subspace s(field, ambient);
        for (std::size_t t = 0; t < pivots.size(); ++t) s.pivot_row_.at(pivots[t]) = t;
        s.basis_ = std::move(vectors);
        s.pivots_ = std::move(pivots);
        return s;
    }

    const F& field() const { return field_; }
    std::size_t dim() const { return basis_.size(); }
    std::size_t ambient_dim() const { return ambient_; }
    const std::vector<Vec<F>>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    Vec<F> reduce(Vec<F> v) const {
        if (v.size() != ambient_) throw std::invalid_argument("Subspace::reduce: wrong length");
        for (std::size_t t = 0; t < basis_.size(); ++t) {
            auto c = v[pivots_[t]];
            if (!field_.is_zero(c)) sub_scaled(field_, v, c, basis_[t]);
        }
        return v;
    }

    bool contains(const Vec<F>& v) const { return is_zero_vector(field_, reduce(v)); }

    /// Returns true when v was independent of the current basis.
    bool insert(const Vec<F>& v) {
        Vec<F> r = reduce(v);
        std::size_t q = 0;
        while (q < ambient_ && field_.is_zero(r[q])) ++q;
        if (q == ambient_) return false;
        scale_in_place(field_, r, field_.inv(r[q]));
        for (auto& b : basis_) {
            auto c = b[q];
            if (!field_.is_zero(c)) sub_scaled(field_, b, c, r);
        }
        pivot_row_[q] = basis_.size();
        pivots_.push_back(q);
        basis_.push_back(std::move(r));
        return true;
    }

    /// Coordinates of v (assumed to lie in the subspace) in basis order.
    Vec<F> coordinates(const Vec<F>& v) const {
        Vec<F> c(basis_.size(), field_.zero());
        for (std::size_t t = 0; t < basis_.size(); ++t) c[t] = v[pivots_[t]];
        return c;
    }

    /// Non-pivot coordinate indices in increasing order; the corresponding
    /// unit vectors span a complement.
    std::vector<std::size_t> complement() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < ambient_; ++i)
            if (pivot_row_[i] == npos) out.push_back(i);
        return out;
    }

    bool is_subspace_of(const Subspace& other) const {
        for (const auto& b : basis_)
            if (!other.contains(b)) return false;
        return true;
    }

    bool same_as(const Subspace& other) const {
        return dim() == other.dim() && is_subspace_of(other);
    }

    Subspace sum(const Subspace& other) const {
        Subspace s = *this;
        for (const auto& b : other.basis_) s.insert(b);
        return s;
    }

    std::size_t intersection_dim(const Subspace& other) const {
        return dim() + other.dim() - sum(other).dim();
    }

    Matrix<F> basis_matrix() const { return Matrix<F>::from_columns(field_, ambient_, basis_); }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    F field_{};
    std::size_t ambient_ = 0;
    std::vector<Vec<F>> basis_;
    std::vector<std::size_t> pivots_;
    std::vector<std::size_t> pivot_row_;
};

/// ker A as a Subspace, adopting the echelon kernel vectors directly.
template <class F>
Subspace<F> kernel_subspace(const Matrix<F>& a) {
    auto ech = reduced_row_echelon(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : ech.pivot_cols) is_pivot[c] = true;
    std::vector<Vec<F>> vecs;
    std::vector<std::size_t> frees;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec<F> v(a.cols(), a.field().zero());
        v[free] = a.field().one();
        for (std::size_t i = 0; i < ech.pivot_cols.size(); ++i) v[ech.pivot_cols[i]] = a.field().neg(ech.reduced(i, free));
        vecs.push_back(std::move(v));
        frees.push_back(free);
    }
    return Subspace<F>::from_reduced(a.field(), a.cols(), std::move(vecs), std::move(frees));
}

}  // namespace artinian
