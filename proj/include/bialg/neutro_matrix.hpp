#ifndef BIALG_NEUTRO_MATRIX_HPP
#define BIALG_NEUTRO_MATRIX_HPP

#include <optional>
#include <utility>
#include <vector>

#include "bialg/eigen.hpp"
#include "bialg/fuzzy.hpp"
#include "bialg/linalg.hpp"
#include "bialg/matrix.hpp"
#include "bialg/neutrosophic.hpp"

namespace bialg {

using NeutroMatrix = Matrix<Neutro>;
using FuzzyMatrix = Matrix<Fuzzy>;

// Entrywise evaluation of I at 0 and at 1: the two rational shadows of a
// neutrosophic matrix. Every ring operation commutes with the split.
inline std::pair<Matrix<Rational>, Matrix<Rational>> neutro_split_matrix(const NeutroMatrix& a) {
    Matrix<Rational> at0(a.rows(), a.cols()), at1(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            auto [u, v] = neutro_split(a(i, j));
            at0(i, j) = u;
            at1(i, j) = v;
        }
    return {at0, at1};
}

inline NeutroMatrix neutro_unsplit_matrix(const Matrix<Rational>& at0,
                                          const Matrix<Rational>& at1) {
    if (at0.rows() != at1.rows() || at0.cols() != at1.cols())
        throw ShapeMismatch("unsplit of unequal shapes");
    NeutroMatrix a(at0.rows(), at0.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = neutro_unsplit(at0(i, j), at1(i, j));
    return a;
}

inline NeutroMatrix neutro_matmul(const NeutroMatrix& a, const NeutroMatrix& b) {
    return mat_mul(NeutroRing{}, a, b);
}

inline NeutroMatrix neutro_mat_add(const NeutroMatrix& a, const NeutroMatrix& b) {
    return mat_add(NeutroRing{}, a, b);
}

// Determinant through the split isomorphism: two rational Bareiss
// eliminations, recombined.
inline Neutro neutro_det(const NeutroMatrix& a) {
    if (!a.is_square()) throw NotSquare("neutro determinant");
    RationalField f;
    auto [at0, at1] = neutro_split_matrix(a);
    return neutro_unsplit(det_bareiss(f, at0), det_bareiss(f, at1));
}

inline std::optional<NeutroMatrix> neutro_inverse_matrix(const NeutroMatrix& a) {
    if (!a.is_square()) throw NotSquare("neutro inverse");
    RationalField f;
    auto [at0, at1] = neutro_split_matrix(a);
    auto inv0 = mat_inverse(f, at0);
    auto inv1 = mat_inverse(f, at1);
    if (!inv0 || !inv1) return std::nullopt;
    return neutro_unsplit_matrix(*inv0, *inv1);
}

/*
 * Characteristic polynomial det(A - xI) with leading coefficient (-1)^n:
 * split, take the two monic rational characteristic polynomials, recombine
 * the coefficients, and flip the sign for odd n.
 */
inline Polynomial<Neutro> neutro_char_poly(const NeutroMatrix& a) {
    if (!a.is_square()) throw NotSquare("neutro characteristic polynomial");
    RationalField f;
    auto [at0, at1] = neutro_split_matrix(a);
    auto p0 = charpoly_berkowitz(f, at0);  // monic det(xI - A0)
    auto p1 = charpoly_berkowitz(f, at1);
    const std::size_t n = a.rows();
    const bool flip = n % 2 == 1;  // det(A - xI) = (-1)^n det(xI - A)
    std::vector<Neutro> coeffs(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        Rational c0 = p0.c[i], c1 = p1.c[i];
        if (flip) {
            c0 = -c0;
            c1 = -c1;
        }
        coeffs[i] = neutro_unsplit(c0, c1);
    }
    return Polynomial<Neutro>(std::move(coeffs));
}

struct NeutroEigenvalue {
    Neutro value;
    bool classical = false;  // arises from the matched-pair factorization
};

struct NeutroEigenResult {
    // all values in Q(I): unsplit(r0, r1) over the rational spectra R0 x R1
    std::vector<NeutroEigenvalue> values;
    bool split0_has_roots = false;
    bool split1_has_roots = false;
};

/*
 * Eigenvalues over Q(I). A scalar L = g + dI makes A - L I singular exactly
 * when both split determinants vanish, i.e. split0(L) is an eigenvalue of the
 * I->0 shadow and split1(L) of the I->1 shadow, so the full set is the
 * recombination of the two rational spectra. The classical subset pairs the
 * two spectra as a factorization would: equal roots first (plain rational
 * eigenvalues), the leftovers matched in ascending order.
 */
inline NeutroEigenResult neutro_eigenvalues(const NeutroMatrix& a) {
    if (!a.is_square()) throw NotSquare("neutro eigenvalues");
    RationalField f;
    auto [at0, at1] = neutro_split_matrix(a);
    auto r0 = rational_roots(charpoly_berkowitz(f, at0));
    auto r1 = rational_roots(charpoly_berkowitz(f, at1));

    NeutroEigenResult out;
    out.split0_has_roots = !r0.roots.empty();
    out.split1_has_roots = !r1.roots.empty();
    if (!out.split0_has_roots || !out.split1_has_roots) return out;  // no value in Q(I)

    // root multisets, ascending
    std::vector<Rational> m0, m1;
    for (const auto& [v, mult] : r0.roots) m0.insert(m0.end(), mult, v);
    for (const auto& [v, mult] : r1.roots) m1.insert(m1.end(), mult, v);

    // classical pairing: match equal roots, then the remainders in order
    std::vector<std::pair<Rational, Rational>> classical;
    {
        auto rem0 = m0, rem1 = m1;
        for (auto it0 = rem0.begin(); it0 != rem0.end();) {
            auto it1 = std::find(rem1.begin(), rem1.end(), *it0);
            if (it1 != rem1.end()) {
                classical.emplace_back(*it0, *it1);
                rem1.erase(it1);
                it0 = rem0.erase(it0);
            } else {
                ++it0;
            }
        }
        for (std::size_t i = 0; i < std::min(rem0.size(), rem1.size()); ++i)
            classical.emplace_back(rem0[i], rem1[i]);
    }

    for (const auto& [v0, mult0] : r0.roots) {
        (void)mult0;
        for (const auto& [v1, mult1] : r1.roots) {
            (void)mult1;
            NeutroEigenvalue ev{neutro_unsplit(v0, v1), false};
            for (const auto& [c0, c1] : classical)
                if (c0 == v0 && c1 == v1) ev.classical = true;
            out.values.push_back(ev);
        }
    }
    return out;
}

inline FuzzyMatrix fuzzy_compose(const FuzzyMatrix& p, const FuzzyMatrix& q) {
    if (p.cols() != q.rows())
        throw ShapeMismatch("fuzzy compose: inner dimensions " + std::to_string(p.cols()) +
                            " vs " + std::to_string(q.rows()));
    for (const auto& x : p.entries()) require_integral(x);
    for (const auto& x : q.entries()) require_integral(x);
    FuzzyMatrix r(p.rows(), q.cols());
    for (std::size_t i = 0; i < p.rows(); ++i)
        for (std::size_t j = 0; j < q.cols(); ++j) {
            Fuzzy acc = fuzzy_min(p(i, 0), q(0, j));
            for (std::size_t k = 1; k < p.cols(); ++k)
                acc = fuzzy_max(acc, fuzzy_min(p(i, k), q(k, j)));
            r(i, j) = acc;
        }
    return r;
}

}  // namespace bialg

#endif  // BIALG_NEUTRO_MATRIX_HPP
