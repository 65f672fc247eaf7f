#pragma once

/**
 * @file linalg.hpp
 * @brief Dense exact linear algebra over a field type F.
 *
 * F must be default-constructible to zero, constructible from int, closed
 * under + - * /, and provide a free function is_zero(const F&). Rational and
 * RatFun both qualify.
 *
 * Reduced row echelon form uses a fixed rule: scan columns left to right,
 * take the first row at or below the current one with a nonzero entry in the
 * column, normalize the pivot to 1 and clear the column above and below.
 * Equal row spaces therefore produce identical RREF matrices, which is what
 * Subspace equality relies on.
 */

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "algaudit/errors.hpp"
#include "algaudit/ratfun.hpp"

namespace algaudit {

template <class F>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<F> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_) throw DimensionMismatch("matrix data size mismatch");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<F> row(std::size_t r) const {
        return std::vector<F>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
    }
    std::vector<F> col(std::size_t c) const {
        std::vector<F> v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
        return v;
    }
    void append_row(const std::vector<F>& v) {
        if (rows_ == 0 && cols_ == 0) cols_ = v.size();
        if (v.size() != cols_) throw DimensionMismatch("row length mismatch");
        data_.insert(data_.end(), v.begin(), v.end());
        ++rows_;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!algaudit::is_zero(x)) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const F& aik = a(i, k);
                if (algaudit::is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }
    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum shape mismatch");
        Matrix out = a;
        for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
        return out;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference shape mismatch");
        Matrix out = a;
        for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
        return out;
    }
    Matrix scaled(const F& s) const {
        Matrix out = *this;
        for (auto& x : out.data_) x *= s;
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    std::string str() const {
        std::ostringstream os;
        for (std::size_t r = 0; r < rows_; ++r) {
            os << "[";
            for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
            os << "]" << (r + 1 < rows_ ? "\n" : "");
        }
        return os.str();
    }

    const std::vector<F>& data() const { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<F> data_;
};

/// Reduces m to RREF in place and returns the pivot columns.
template <class F>
std::vector<std::size_t> rref_in_place(Matrix<F>& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(r, k));
        F inv = F(1) / m(r, c);
        for (std::size_t k = c; k < m.cols(); ++k) m(r, k) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            F f = m(i, c);
            for (std::size_t k = c; k < m.cols(); ++k)
                if (!is_zero(m(r, k))) m(i, k) -= f * m(r, k);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m) {
    return rref_in_place(m).size();
}

/// Basis of {v : m v = 0}, one vector per free column, in column order.
template <class F>
std::vector<std::vector<F>> nullspace_vectors(Matrix<F> m) {
    auto pivots = rref_in_place(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<F>> out;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<F> v(m.cols(), F(0));
        v[free] = F(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, free);
        out.push_back(std::move(v));
    }
    return out;
}

/// Exact determinant by elimination; m must be square.
template <class F>
F determinant(Matrix<F> m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
    F det(1);
    const std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && is_zero(m(p, c))) ++p;
        if (p == n) return F(0);
        if (p != c) {
            for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
            det = -det;
        }
        det *= m(c, c);
        F inv = F(1) / m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (is_zero(m(i, c))) continue;
            F f = m(i, c) * inv;
            for (std::size_t k = c; k < n; ++k) m(i, k) -= f * m(c, k);
        }
    }
    return det;
}

/// Throws InvalidInput when m is singular.
template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix<F> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = F(1);
    }
    auto piv = rref_in_place(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) throw InvalidInput("matrix is singular");
    Matrix<F> out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
    return out;
}

/**
 * Linear subspace of F^ambient stored as an RREF basis (one row per basis
 * vector). Two Subspaces are equal iff their bases are identical.
 */
template <class F>
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

    static Subspace span(std::size_t ambient, const std::vector<std::vector<F>>& vectors) {
        Matrix<F> m(0, ambient);
        for (const auto& v : vectors) m.append_row(v);
        return from_rows(std::move(m));
    }
    static Subspace whole(std::size_t ambient) { return from_rows(Matrix<F>::identity(ambient)); }
    /// Solution space of m v = 0.
    static Subspace kernel(const Matrix<F>& m) { return span(m.cols(), nullspace_vectors(m)); }

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }
    const Matrix<F>& basis_matrix() const { return basis_; }
    std::vector<std::vector<F>> basis() const {
        std::vector<std::vector<F>> out;
        for (std::size_t r = 0; r < basis_.rows(); ++r) out.push_back(basis_.row(r));
        return out;
    }

    bool contains(const std::vector<F>& v) const {
        Matrix<F> m = basis_;
        m.append_row(v);
        return rank(std::move(m)) == dim();
    }
    bool contains(const Subspace& other) const {
        Matrix<F> m = basis_;
        for (std::size_t r = 0; r < other.basis_.rows(); ++r) m.append_row(other.basis_.row(r));
        return rank(std::move(m)) == dim();
    }

    /// Vectors orthogonal (under the standard pairing) to every basis vector.
    Subspace annihilator() const {
        if (dim() == 0) return whole(ambient_);
        return kernel(basis_);
    }

    Subspace intersect(const Subspace& other) const {
        if (other.ambient_ != ambient_) throw DimensionMismatch("subspaces of different ambient spaces");
        Matrix<F> constraints = annihilator().basis_;
        Matrix<F> more = other.annihilator().basis_;
        for (std::size_t r = 0; r < more.rows(); ++r) constraints.append_row(more.row(r));
        if (constraints.rows() == 0) return whole(ambient_);
        return kernel(constraints);
    }

    Subspace sum(const Subspace& other) const {
        if (other.ambient_ != ambient_) throw DimensionMismatch("subspaces of different ambient spaces");
        Matrix<F> m = basis_;
        for (std::size_t r = 0; r < other.basis_.rows(); ++r) m.append_row(other.basis_.row(r));
        return from_rows(std::move(m));
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    static Subspace from_rows(Matrix<F> m) {
        Subspace s;
        s.ambient_ = m.cols();
        auto piv = rref_in_place(m);
        Matrix<F> b(0, m.cols());
        for (std::size_t r = 0; r < piv.size(); ++r) b.append_row(m.row(r));
        s.basis_ = std::move(b);
        return s;
    }

    std::size_t ambient_ = 0;
    Matrix<F> basis_;
};

}  // namespace algaudit
