#ifndef BIALG_LINALG_HPP
#define BIALG_LINALG_HPP

#include <optional>
#include <vector>

#include "bialg/matrix.hpp"
#include "bialg/polynomial.hpp"

namespace bialg {

template <typename E>
struct Rref {
    Matrix<E> mat;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

// Reduced row echelon form by exact Gauss-Jordan elimination.
template <typename F>
Rref<typename F::Elem> rref(const F& f, Matrix<typename F::Elem> m) {
    Rref<typename F::Elem> out;
    std::size_t lead = 0;
    for (std::size_t r = 0; r < m.rows() && lead < m.cols(); ++r) {
        std::size_t i = r;
        while (i < m.rows() && f.is_zero(m(i, lead))) ++i;
        if (i == m.rows()) {
            --r;        // retry this row with the next column
            ++lead;
            continue;
        }
        if (i != r) m.swap_rows(i, r);
        const auto pivot_inv = f.inv(m(r, lead));
        for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = f.mul(pivot_inv, m(r, j));
        for (std::size_t k = 0; k < m.rows(); ++k) {
            if (k == r || f.is_zero(m(k, lead))) continue;
            const auto factor = m(k, lead);
            for (std::size_t j = 0; j < m.cols(); ++j)
                m(k, j) = f.sub(m(k, j), f.mul(factor, m(r, j)));
        }
        out.pivot_cols.push_back(lead);
        ++lead;
    }
    out.rank = out.pivot_cols.size();
    out.mat = std::move(m);
    return out;
}

template <typename F>
std::size_t mat_rank(const F& f, const Matrix<typename F::Elem>& m) {
    return rref(f, m).rank;
}

// Null-space basis from the RREF, one vector per free column, free variable
// set to one in column-index order.
template <typename F>
std::vector<Vector<typename F::Elem>> nullspace_basis(const F& f,
                                                      const Matrix<typename F::Elem>& m) {
    const auto r = rref(f, m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : r.pivot_cols) is_pivot[c] = true;
    std::vector<Vector<typename F::Elem>> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        Vector<typename F::Elem> v(m.cols(), f.zero());
        v[free_col] = f.one();
        for (std::size_t pr = 0; pr < r.pivot_cols.size(); ++pr)
            v[r.pivot_cols[pr]] = f.neg(r.mat(pr, free_col));
        basis.push_back(std::move(v));
    }
    return basis;
}

/*
 * Determinant by Bareiss fraction-free elimination. Every division is exact,
 * so the routine is valid over any integral domain with exact division; over
 * a field it simply avoids denominator growth.
 */
template <typename F>
typename F::Elem det_bareiss(const F& f, Matrix<typename F::Elem> m) {
    if (!m.is_square()) throw NotSquare("determinant");
    const std::size_t n = m.rows();
    if (n == 0) return f.one();
    auto prev = f.one();
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (f.is_zero(m(k, k))) {
            std::size_t i = k + 1;
            while (i < n && f.is_zero(m(i, k))) ++i;
            if (i == n) return f.zero();
            m.swap_rows(i, k);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                auto num = f.sub(f.mul(m(i, j), m(k, k)), f.mul(m(i, k), m(k, j)));
                m(i, j) = f.div(num, prev);
            }
            m(i, k) = f.zero();
        }
        prev = m(k, k);
    }
    auto d = m(n - 1, n - 1);
    return negate ? f.neg(d) : d;
}

template <typename F>
std::optional<Matrix<typename F::Elem>> mat_inverse(const F& f,
                                                    const Matrix<typename F::Elem>& m) {
    if (!m.is_square()) throw NotSquare("inverse");
    const std::size_t n = m.rows();
    Matrix<typename F::Elem> aug(n, 2 * n, f.zero());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = f.one();
    }
    const auto r = rref(f, aug);
    if (r.rank < n || r.pivot_cols[n - 1] >= n) return std::nullopt;
    Matrix<typename F::Elem> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.mat(i, n + j);
    return inv;
}

// Solves A x = b; empty when inconsistent. Free variables are set to zero.
template <typename F>
std::optional<Vector<typename F::Elem>> solve(const F& f, const Matrix<typename F::Elem>& a,
                                              const Vector<typename F::Elem>& b) {
    if (a.rows() != b.size()) throw ShapeMismatch("solve: rhs length");
    Matrix<typename F::Elem> aug(a.rows(), a.cols() + 1, f.zero());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    const auto r = rref(f, aug);
    for (auto c : r.pivot_cols)
        if (c == a.cols()) return std::nullopt;  // row [0 ... 0 | 1]
    Vector<typename F::Elem> x(a.cols(), f.zero());
    for (std::size_t pr = 0; pr < r.pivot_cols.size(); ++pr)
        x[r.pivot_cols[pr]] = r.mat(pr, a.cols());
    return x;
}

/*
 * Characteristic polynomial det(xI - A), monic, by the Berkowitz vector
 * recurrence. Division-free, so it is exact over any commutative ring --
 * rationals, prime fields (any p), and the neutrosophic ring alike.
 */
template <typename R>
Polynomial<typename R::Elem> charpoly_berkowitz(const R& ring,
                                                const Matrix<typename R::Elem>& a) {
    using E = typename R::Elem;
    if (!a.is_square()) throw NotSquare("charpoly");
    const std::size_t n = a.rows();
    // coefficients low-to-high; start with the 0x0 charpoly "1"
    std::vector<E> poly{ring.one()};
    for (std::size_t k = 1; k <= n; ++k) {
        // Leading principal submatrix of size k, partitioned as
        //   [ a_kk  R ]
        //   [ C     M ]  with M of size (k-1).
        const std::size_t m = k - 1;
        // Toeplitz column: t_0 = 1, t_1 = -a(0,0)... built from traces of the
        // form R M^j C for the submatrix anchored at row/col (n-k).
        const std::size_t off = n - k;
        std::vector<E> t(k + 1, ring.zero());
        t[0] = ring.one();
        t[1] = ring.neg(a(off, off));
        if (m > 0) {
            Vector<E> c(m), rrow(m);
            for (std::size_t i = 0; i < m; ++i) {
                c[i] = a(off + 1 + i, off);
                rrow[i] = a(off, off + 1 + i);
            }
            Matrix<E> M(m, m);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) M(i, j) = a(off + 1 + i, off + 1 + j);
            Vector<E> v = c;
            for (std::size_t j = 2; j <= k; ++j) {
                // t_j = - R M^(j-2) C
                E dot = ring.zero();
                for (std::size_t i = 0; i < m; ++i) dot = ring.add(dot, ring.mul(rrow[i], v[i]));
                t[j] = ring.neg(dot);
                if (j < k) v = mat_apply(ring, M, v);
            }
        }
        // poly <- conv(t, poly), truncated naturally (degrees add up to k)
        std::vector<E> next(k + 1, ring.zero());
        // poly holds charpoly of M (degree m) high-to-low? Keep high-to-low:
        // we maintain poly with poly[0] = leading coefficient.
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t j = 0; j < poly.size(); ++j)
                if (i + j <= k) next[i + j] = ring.add(next[i + j], ring.mul(t[i], poly[j]));
        poly = std::move(next);
    }
    // poly is high-to-low (poly[0] = x^n coefficient); flip to low-to-high.
    std::vector<E> coeffs(n + 1, ring.zero());
    for (std::size_t i = 0; i <= n; ++i) coeffs[n - i] = poly[i];
    return Polynomial<E>(std::move(coeffs));
}

// Evaluates p(A) exactly (Horner on matrices).
template <typename F>
Matrix<typename F::Elem> poly_eval_matrix(const F& f, const Polynomial<typename F::Elem>& p,
                                          const Matrix<typename F::Elem>& a) {
    if (!a.is_square()) throw NotSquare("poly_eval_matrix");
    const std::size_t n = a.rows();
    Matrix<typename F::Elem> acc(n, n, f.zero());
    for (std::size_t i = p.c.size(); i-- > 0;) {
        acc = mat_mul(f, acc, a);
        for (std::size_t d = 0; d < n; ++d) acc(d, d) = f.add(acc(d, d), p.c[i]);
    }
    return acc;
}

}  // namespace bialg

#endif  // BIALG_LINALG_HPP
