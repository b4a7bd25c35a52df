#ifndef BIALG_BIMATRIX_HPP
#define BIALG_BIMATRIX_HPP

#include <string>
#include <utility>

#include "bialg/eigen.hpp"
#include "bialg/linalg.hpp"
#include "bialg/matrix.hpp"
#include "bialg/polynomial.hpp"

namespace bialg {

/*
 * The central pair types. A bimatrix A = A1 u A2 is an ordered pair of dense
 * matrices over one scalar kind; the components may have different shapes
 * ("mixed" bimatrix). Everything acts componentwise and the two components
 * never mix.
 */
template <typename E>
struct Bimatrix {
    Matrix<E> first, second;

    Bimatrix() = default;
    Bimatrix(Matrix<E> a, Matrix<E> b) : first(std::move(a)), second(std::move(b)) {}
};

template <typename E>
struct Bivector {
    Vector<E> first, second;

    Bivector() = default;
    Bivector(Vector<E> a, Vector<E> b) : first(std::move(a)), second(std::move(b)) {}
};

template <typename E>
struct Bipolynomial {
    Polynomial<E> first, second;
};

enum class BimatrixShape { Square, MixedSquare, MixedRectangular };

template <typename E>
BimatrixShape bimatrix_shape(const Bimatrix<E>& a) {
    if (a.first.is_square() && a.second.is_square())
        return a.first.rows() == a.second.rows() ? BimatrixShape::Square
                                                 : BimatrixShape::MixedSquare;
    return BimatrixShape::MixedRectangular;
}

inline std::string bimatrix_shape_name(BimatrixShape s) {
    switch (s) {
        case BimatrixShape::Square: return "square";
        case BimatrixShape::MixedSquare: return "mixed-square";
        default: return "mixed-rectangular";
    }
}

// Bidimension bookkeeping (ordered pairs). Two bispaces can share m+n without
// being the same space; they are identical only when the ordered pairs match.
struct Bidimension {
    std::size_t m = 0, n = 0;
    bool operator==(const Bidimension&) const = default;
};

inline bool same_total_dimension(const Bidimension& a, const Bidimension& b) {
    return a.m + a.n == b.m + b.n;
}

inline bool identical_bidimension(const Bidimension& a, const Bidimension& b) { return a == b; }

// Free-entry count of the representation of a bitransformation between
// bispaces of bidimension (m, n) and (m1, n1): the block form wastes nothing,
// so exactly m*m1 + n*n1 entries are free.
inline std::size_t bitransformation_free_entries(const Bidimension& from, const Bidimension& to) {
    return from.m * to.m + from.n * to.n;
}

template <typename E>
std::size_t bimatrix_free_entries(const Bimatrix<E>& a) {
    return a.first.rows() * a.first.cols() + a.second.rows() * a.second.cols();
}

template <typename F>
Bimatrix<typename F::Elem> bi_add(const F& f, const Bimatrix<typename F::Elem>& a,
                                  const Bimatrix<typename F::Elem>& b) {
    return {mat_add(f, a.first, b.first), mat_add(f, a.second, b.second)};
}

template <typename F>
Bimatrix<typename F::Elem> bi_sub(const F& f, const Bimatrix<typename F::Elem>& a,
                                  const Bimatrix<typename F::Elem>& b) {
    return {mat_sub(f, a.first, b.first), mat_sub(f, a.second, b.second)};
}

template <typename F>
Bimatrix<typename F::Elem> bi_mul(const F& f, const Bimatrix<typename F::Elem>& a,
                                  const Bimatrix<typename F::Elem>& b) {
    return {mat_mul(f, a.first, b.first), mat_mul(f, a.second, b.second)};
}

template <typename F>
Bimatrix<typename F::Elem> bi_scale(const F& f, const typename F::Elem& s,
                                    const Bimatrix<typename F::Elem>& a) {
    return {mat_scale(f, s, a.first), mat_scale(f, s, a.second)};
}

template <typename F>
Bimatrix<typename F::Elem> bi_transpose(const F&, const Bimatrix<typename F::Elem>& a) {
    return {a.first.transpose(), a.second.transpose()};
}

template <typename F>
Bivector<typename F::Elem> bi_apply(const F& f, const Bimatrix<typename F::Elem>& a,
                                    const Bivector<typename F::Elem>& v) {
    return {mat_apply(f, a.first, v.first), mat_apply(f, a.second, v.second)};
}

template <typename F>
bool bi_eq(const F& f, const Bimatrix<typename F::Elem>& a, const Bimatrix<typename F::Elem>& b) {
    return mat_eq(f, a.first, b.first) && mat_eq(f, a.second, b.second);
}

template <typename F>
bool bi_is_zero(const F& f, const Bimatrix<typename F::Elem>& a) {
    return mat_is_zero(f, a.first) && mat_is_zero(f, a.second);
}

template <typename F>
std::pair<typename F::Elem, typename F::Elem> bi_determinant(
    const F& f, const Bimatrix<typename F::Elem>& a) {
    if (!a.first.is_square() || !a.second.is_square())
        throw NotSquare("determinant needs square components");
    return {det_bareiss(f, a.first), det_bareiss(f, a.second)};
}

// Characteristic bipolynomial det(x1 I - A1) u det(x2 I - A2), monic in each
// component with degree exactly (n1, n2).
template <typename F>
Bipolynomial<typename F::Elem> char_bipolynomial(const F& f,
                                                 const Bimatrix<typename F::Elem>& a) {
    if (!a.first.is_square() || !a.second.is_square())
        throw NotSquare("characteristic bipolynomial needs square components");
    return {charpoly_berkowitz(f, a.first), charpoly_berkowitz(f, a.second)};
}

template <typename F>
Bipolynomial<typename F::Elem> minimal_bipolynomial(const F& f,
                                                    const Bimatrix<typename F::Elem>& a) {
    if (!a.first.is_square() || !a.second.is_square())
        throw NotSquare("minimal bipolynomial needs square components");
    return {minimal_polynomial(f, a.first), minimal_polynomial(f, a.second)};
}

// The three cases of characteristic-bivalue existence.
enum class EigenFlag { Full, Semi, None };

inline std::string eigen_flag_name(EigenFlag f) {
    switch (f) {
        case EigenFlag::Full: return "characteristic bivalues";
        case EigenFlag::Semi: return "semi characteristic bivalues";
        default: return "no characteristic bivalues";
    }
}

template <typename E>
struct EigenBianalysis {
    EigenDecomp<E> first, second;
    EigenFlag flag = EigenFlag::None;
};

template <typename F>
EigenBianalysis<typename F::Elem> eigen_bivalues(const F& f,
                                                 const Bimatrix<typename F::Elem>& a) {
    EigenBianalysis<typename F::Elem> out;
    out.first = eigen_decompose(f, a.first);
    out.second = eigen_decompose(f, a.second);
    const bool h1 = out.first.has_values(), h2 = out.second.has_values();
    out.flag = h1 && h2 ? EigenFlag::Full : (h1 || h2 ? EigenFlag::Semi : EigenFlag::None);
    return out;
}

template <typename E>
struct Bidiagonalization {
    Bimatrix<E> p;  // columns are eigenvectors
    Bimatrix<E> d;  // diagonal, eigenvalues ascending; A P = P D exactly
};

namespace detail {

inline std::pair<Matrix<Rational>, Matrix<Rational>> diagonalize_component(
    const RationalField& f, const Matrix<Rational>& a, int component_label) {
    auto dec = eigen_decompose(f, a);
    const std::size_t n = a.rows();
    std::vector<Vector<Rational>> columns;
    for (const auto& sp : dec.spaces) {
        if (sp.eigenvectors.size() < static_cast<std::size_t>(sp.multiplicity))
            throw NotBidiagonalizable(component_label, sp.value.to_string());
        for (const auto& v : sp.eigenvectors) columns.push_back(v);
    }
    if (columns.size() != n) {
        // char poly does not split: report the smallest missing factor root
        throw NotBidiagonalizable(component_label,
                                  "(irrational spectrum: " +
                                      poly_to_string(f, dec.rootless_cofactor) + ")");
    }
    Matrix<Rational> p(n, n), d(n, n, Rational(0));
    std::size_t col = 0;
    for (const auto& sp : dec.spaces)
        for (const auto& v : sp.eigenvectors) {
            for (std::size_t i = 0; i < n; ++i) p(i, col) = v[i];
            d(col, col) = sp.value;
            ++col;
        }
    return {p, d};
}

}  // namespace detail

inline Bidiagonalization<Rational> bidiagonalize(const RationalField& f,
                                                 const Bimatrix<Rational>& a) {
    if (!a.first.is_square() || !a.second.is_square())
        throw NotSquare("bidiagonalize needs square components");
    auto [p1, d1] = detail::diagonalize_component(f, a.first, 1);
    auto [p2, d2] = detail::diagonalize_component(f, a.second, 2);
    return {Bimatrix<Rational>{p1, p2}, Bimatrix<Rational>{d1, d2}};
}

struct JordanBiform {
    Bimatrix<Rational> form;
    std::vector<JordanBlock> blocks_first, blocks_second;
};

inline JordanBiform jordan_biform(const Bimatrix<Rational>& a, bool super_diagonal = false) {
    if (!a.first.is_square() || !a.second.is_square())
        throw NotSquare("jordan biform needs square components");
    auto j1 = jordan_form(a.first, super_diagonal, 1);
    auto j2 = jordan_form(a.second, super_diagonal, 2);
    return {Bimatrix<Rational>{j1.form, j2.form}, j1.blocks, j2.blocks};
}

}  // namespace bialg

#endif  // BIALG_BIMATRIX_HPP
