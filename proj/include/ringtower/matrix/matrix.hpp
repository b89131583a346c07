#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include "../core/errors.hpp"
#include "../core/ring.hpp"

namespace ringtower {

template <class E>
class Matrix;

/// Parent of r x c matrices over a base ring.
template <class E>
class MatrixSpace {
public:
    using element_type = Matrix<E>;
    using base_parent = typename E::parent_type;

    static const MatrixSpace& get(const base_parent& base, std::size_t rows, std::size_t cols) {
        return intern_parent<MatrixSpace>(std::make_tuple(static_cast<const void*>(&base), rows, cols),
                                          [&] { return new MatrixSpace(base, rows, cols); });
    }

    RingKind kind() const { return RingKind::MatrixSpace; }
    std::string describe() const {
        return "MatrixSpace(" + base_->describe() + ", " + std::to_string(rows_) + ", " + std::to_string(cols_) + ")";
    }
    const base_parent& base() const { return *base_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Matrix<E> zero() const;
    Matrix<E> identity() const;
    Matrix<E> operator()(const std::vector<std::vector<E>>& rows) const;

private:
    MatrixSpace(const base_parent& b, std::size_t r, std::size_t c) : base_(&b), rows_(r), cols_(c) {}
    const base_parent* base_;
    std::size_t rows_, cols_;
};

/// Dense row-major matrix.
template <class E>
class Matrix {
public:
    using parent_type = MatrixSpace<E>;

    Matrix() = default;
    explicit Matrix(const MatrixSpace<E>* S) : S_(S), a_(S->rows() * S->cols(), S->base().zero()) {}

    const MatrixSpace<E>& parent() const { return *S_; }
    const typename E::parent_type& base() const { return S_->base(); }
    std::size_t rows() const { return S_->rows(); }
    std::size_t cols() const { return S_->cols(); }
    bool is_square() const { return rows() == cols(); }

    E& operator()(std::size_t i, std::size_t j) { return a_[i * cols() + j]; }
    const E& operator()(std::size_t i, std::size_t j) const { return a_[i * cols() + j]; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    void swap_rows(std::size_t i, std::size_t k) {
        if (i == k) return;
        for (std::size_t j = 0; j < cols(); ++j) std::swap((*this)(i, j), (*this)(k, j));
    }
    void swap_cols(std::size_t j, std::size_t k) {
        if (j == k) return;
        for (std::size_t i = 0; i < rows(); ++i) std::swap((*this)(i, j), (*this)(i, k));
    }

    Matrix transpose() const {
        Matrix t(&MatrixSpace<E>::get(base(), cols(), rows()));
        for (std::size_t i = 0; i < rows(); ++i)
            for (std::size_t j = 0; j < cols(); ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        check_parents(a, b);
        Matrix r = a;
        for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += b.a_[k];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        check_parents(a, b);
        Matrix r = a;
        for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= b.a_[k];
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (&a.base() != &b.base()) throw MixedParents("matrix product over different rings");
        if (a.cols() != b.rows()) throw DimensionMismatch("matrix product");
        Matrix r(&MatrixSpace<E>::get(a.base(), a.rows(), b.cols()));
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t k = 0; k < a.cols(); ++k) {
                const E& x = a(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols(); ++j) addmul(r(i, j), x, b(k, j));
            }
        return r;
    }
    Matrix scale(const E& s) const {
        Matrix r = *this;
        for (auto& x : r.a_) x = x * s;
        return r;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) { return a.S_ == b.S_ && a.a_ == b.a_; }

    /// M * v for a column vector v.
    std::vector<E> mul_vec(const std::vector<E>& v) const {
        if (v.size() != cols()) throw DimensionMismatch("matrix-vector product");
        std::vector<E> r(rows(), base().zero());
        for (std::size_t i = 0; i < rows(); ++i)
            for (std::size_t j = 0; j < cols(); ++j) addmul(r[i], (*this)(i, j), v[j]);
        return r;
    }

    std::vector<std::vector<E>> to_rows() const {
        std::vector<std::vector<E>> r(rows());
        for (std::size_t i = 0; i < rows(); ++i) r[i].assign(a_.begin() + i * cols(), a_.begin() + (i + 1) * cols());
        return r;
    }

private:
    const MatrixSpace<E>* S_ = nullptr;
    std::vector<E> a_;
};

template <class E>
Matrix<E> MatrixSpace<E>::zero() const { return Matrix<E>(this); }

template <class E>
Matrix<E> MatrixSpace<E>::identity() const {
    Matrix<E> m(this);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) m(i, i) = base_->one();
    return m;
}

template <class E>
Matrix<E> MatrixSpace<E>::operator()(const std::vector<std::vector<E>>& rows) const {
    if (rows.size() != rows_) throw DimensionMismatch("row count");
    Matrix<E> m(this);
    for (std::size_t i = 0; i < rows_; ++i) {
        if (rows[i].size() != cols_) throw DimensionMismatch("column count");
        for (std::size_t j = 0; j < cols_; ++j) {
            if (&rows[i][j].parent() != base_) throw NoCoercion("matrix entry from another ring");
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

/// Matrix from rows over `base`; dimensions taken from the data.
template <class E>
Matrix<E> make_matrix(const typename E::parent_type& base, const std::vector<std::vector<E>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows[0].size();
    return MatrixSpace<E>::get(base, rows.size(), c)(rows);
}

template <class E>
Matrix<E> identity_matrix(const typename E::parent_type& base, std::size_t n) {
    return MatrixSpace<E>::get(base, n, n).identity();
}

template <class E>
std::string to_string(const Matrix<E>& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        s += i ? ", [" : "[";
        for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? ", " : "") + to_string(m(i, j));
        s += "]";
    }
    return s + "]";
}

template <class E>
std::ostream& operator<<(std::ostream& os, const Matrix<E>& m) {
    return os << to_string(m);
}

/// Apply an entrywise ring map.
template <class E, class F, class Map>
Matrix<F> map_matrix(const Matrix<E>& m, const typename F::parent_type& target, Map&& f) {
    Matrix<F> r(&MatrixSpace<F>::get(target, m.rows(), m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = f(m(i, j));
    return r;
}

} // namespace ringtower
