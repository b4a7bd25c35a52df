#ifndef BIALG_MATRIX_HPP
#define BIALG_MATRIX_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bialg/errors.hpp"

namespace bialg {

template <typename E>
using Vector = std::vector<E>;

// Dense row-major matrix over one scalar kind. Immutable in spirit: the
// library operations never mutate their inputs.
template <typename E>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, const E& fill = E())
        : rows_(rows), cols_(cols), d_(rows * cols, fill) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<E> entries)
        : rows_(rows), cols_(cols), d_(std::move(entries)) {
        if (d_.size() != rows_ * cols_)
            throw ShapeMismatch("entry count " + std::to_string(d_.size()) + " != " +
                                std::to_string(rows_) + "x" + std::to_string(cols_));
    }
    Matrix(std::initializer_list<std::initializer_list<E>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        d_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw ShapeMismatch("ragged initializer");
            d_.insert(d_.end(), r.begin(), r.end());
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const E& operator()(std::size_t i, std::size_t j) const { return d_[i * cols_ + j]; }
    E& operator()(std::size_t i, std::size_t j) { return d_[i * cols_ + j]; }

    const std::vector<E>& entries() const { return d_; }

    Vector<E> row(std::size_t i) const {
        return Vector<E>(d_.begin() + static_cast<long>(i * cols_),
                         d_.begin() + static_cast<long>((i + 1) * cols_));
    }
    Vector<E> col(std::size_t j) const {
        Vector<E> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    Matrix<E> transpose() const {
        Matrix<E> t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }

    static Matrix<E> from_rows(const std::vector<Vector<E>>& rows) {
        if (rows.empty()) return Matrix<E>();
        Matrix<E> m(rows.size(), rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols()) throw ShapeMismatch("ragged row list");
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<E> d_;
};

template <typename F>
Matrix<typename F::Elem> mat_identity(const F& f, std::size_t n) {
    Matrix<typename F::Elem> m(n, n, f.zero());
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
}

template <typename F>
bool mat_eq(const F& f, const Matrix<typename F::Elem>& a, const Matrix<typename F::Elem>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!f.eq(a(i, j), b(i, j))) return false;
    return true;
}

template <typename F>
bool mat_is_zero(const F& f, const Matrix<typename F::Elem>& a) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!f.is_zero(a(i, j))) return false;
    return true;
}

template <typename F>
Matrix<typename F::Elem> mat_add(const F& f, const Matrix<typename F::Elem>& a,
                                 const Matrix<typename F::Elem>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeMismatch("add: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                            " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    Matrix<typename F::Elem> c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.add(a(i, j), b(i, j));
    return c;
}

template <typename F>
Matrix<typename F::Elem> mat_sub(const F& f, const Matrix<typename F::Elem>& a,
                                 const Matrix<typename F::Elem>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeMismatch("sub: shape mismatch");
    Matrix<typename F::Elem> c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.sub(a(i, j), b(i, j));
    return c;
}

template <typename F>
Matrix<typename F::Elem> mat_mul(const F& f, const Matrix<typename F::Elem>& a,
                                 const Matrix<typename F::Elem>& b) {
    if (a.cols() != b.rows())
        throw ShapeMismatch("mul: inner dimensions " + std::to_string(a.cols()) + " vs " +
                            std::to_string(b.rows()));
    Matrix<typename F::Elem> c(a.rows(), b.cols(), f.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (f.is_zero(a(i, k))) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) = f.add(c(i, j), f.mul(a(i, k), b(k, j)));
        }
    return c;
}

template <typename F>
Matrix<typename F::Elem> mat_scale(const F& f, const typename F::Elem& s,
                                   const Matrix<typename F::Elem>& a) {
    Matrix<typename F::Elem> c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.mul(s, a(i, j));
    return c;
}

template <typename F>
Vector<typename F::Elem> mat_apply(const F& f, const Matrix<typename F::Elem>& a,
                                   const Vector<typename F::Elem>& v) {
    if (a.cols() != v.size())
        throw ShapeMismatch("apply: " + std::to_string(a.cols()) + " cols vs vector length " +
                            std::to_string(v.size()));
    Vector<typename F::Elem> out(a.rows(), f.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out[i] = f.add(out[i], f.mul(a(i, j), v[j]));
    return out;
}

template <typename F>
Matrix<typename F::Elem> mat_pow(const F& f, Matrix<typename F::Elem> a, std::size_t e) {
    if (!a.is_square()) throw NotSquare("mat_pow");
    auto r = mat_identity(f, a.rows());
    while (e) {
        if (e & 1) r = mat_mul(f, r, a);
        a = mat_mul(f, a, a);
        e >>= 1;
    }
    return r;
}

template <typename F>
bool vec_eq(const F& f, const Vector<typename F::Elem>& a, const Vector<typename F::Elem>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!f.eq(a[i], b[i])) return false;
    return true;
}

template <typename F>
bool vec_is_zero(const F& f, const Vector<typename F::Elem>& a) {
    for (const auto& x : a)
        if (!f.is_zero(x)) return false;
    return true;
}

template <typename F>
Vector<typename F::Elem> vec_add(const F& f, const Vector<typename F::Elem>& a,
                                 const Vector<typename F::Elem>& b) {
    if (a.size() != b.size()) throw ShapeMismatch("vec_add");
    Vector<typename F::Elem> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = f.add(a[i], b[i]);
    return c;
}

template <typename F>
Vector<typename F::Elem> vec_sub(const F& f, const Vector<typename F::Elem>& a,
                                 const Vector<typename F::Elem>& b) {
    if (a.size() != b.size()) throw ShapeMismatch("vec_sub");
    Vector<typename F::Elem> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = f.sub(a[i], b[i]);
    return c;
}

template <typename F>
Vector<typename F::Elem> vec_scale(const F& f, const typename F::Elem& s,
                                   const Vector<typename F::Elem>& a) {
    Vector<typename F::Elem> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = f.mul(s, a[i]);
    return c;
}

}  // namespace bialg

#endif  // BIALG_MATRIX_HPP
