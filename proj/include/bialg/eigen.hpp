#ifndef BIALG_EIGEN_HPP
#define BIALG_EIGEN_HPP

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "bialg/linalg.hpp"
#include "bialg/matrix.hpp"
#include "bialg/polynomial.hpp"
#include "bialg/prime_field.hpp"
#include "bialg/rational.hpp"

namespace bialg {

// Rescales a rational vector to the primitive integer representative: integer
// entries, gcd 1, first nonzero entry positive.
inline Vector<Rational> primitive_rescale(const Vector<Rational>& v) {
    mpz_class lcm_den = 1;
    for (const auto& x : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.denominator().get_mpz_t());
    mpz_class gcd_num = 0;
    for (const auto& x : v) {
        mpz_class n = x.numerator() * lcm_den / x.denominator();
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), n.get_mpz_t());
    }
    if (gcd_num == 0) return v;  // zero vector
    Rational scale{mpq_class(lcm_den, gcd_num)};
    Vector<Rational> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * scale;
    for (const auto& x : out) {
        if (x.is_zero()) continue;
        if (x.sign() < 0)
            for (auto& y : out) y = -y;
        break;
    }
    return out;
}

namespace detail {

inline std::vector<mpz_class> positive_divisors(mpz_class n) {
    n = abs(n);
    std::vector<mpz_class> divs;
    if (n == 0) return divs;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            divs.push_back(d);
            if (d * d != n) divs.push_back(n / d);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace detail

struct RootsResult {
    // (root, multiplicity) sorted ascending by root value
    std::vector<std::pair<Rational, int>> roots;
    // monic rootless cofactor left after deflating every rational root
    Polynomial<Rational> cofactor;
};

/*
 * All rational roots of a rational polynomial, with multiplicity. Denominators
 * are cleared and candidates come from the divisor pairs of the trailing and
 * leading integer coefficients; each found root is deflated out before the
 * search continues.
 */
inline RootsResult rational_roots(const Polynomial<Rational>& p) {
    RationalField f;
    RootsResult out;
    auto work = p;
    if (work.is_zero() || work.degree() == 0) {
        out.cofactor = work;
        return out;
    }
    std::map<Rational, int> found;
    // strip roots at zero first
    while (!work.is_zero() && work.degree() >= 1 && work.c[0].is_zero()) {
        work = poly_deflate(f, work, Rational(0));
        ++found[Rational(0)];
    }
    bool progress = true;
    while (progress && work.degree() >= 1) {
        progress = false;
        // integer polynomial: multiply by lcm of denominators
        mpz_class lcm_den = 1;
        for (const auto& c : work.c)
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.denominator().get_mpz_t());
        std::vector<mpz_class> ic(work.c.size());
        for (std::size_t i = 0; i < work.c.size(); ++i)
            ic[i] = work.c[i].numerator() * (lcm_den / work.c[i].denominator());
        const auto ps = detail::positive_divisors(ic.front());
        const auto qs = detail::positive_divisors(ic.back());
        for (const auto& num : ps) {
            for (const auto& den : qs) {
                mpz_class g;
                mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
                if (g != 1) continue;
                for (int s : {1, -1}) {
                    Rational cand{mpq_class(s * num, den)};
                    while (work.degree() >= 1 && poly_eval(f, work, cand).is_zero()) {
                        work = poly_deflate(f, work, cand);
                        ++found[cand];
                        progress = true;
                    }
                }
            }
            if (work.degree() < 1) break;
        }
    }
    out.roots.assign(found.begin(), found.end());
    out.cofactor = poly_monic(f, work);
    if (out.cofactor.is_zero()) out.cofactor = poly_const(f, Rational(1));
    return out;
}

struct GfRootsResult {
    std::vector<std::pair<std::uint64_t, int>> roots;  // ascending residues
    Polynomial<std::uint64_t> cofactor;
};

// Exhaustive residue scan with deflation; exact over GF(p).
inline GfRootsResult gf_roots(const PrimeField& f, const Polynomial<std::uint64_t>& p) {
    GfRootsResult out;
    auto work = p;
    for (std::uint64_t r = 0; r < f.p() && work.degree() >= 1; ++r) {
        int mult = 0;
        while (work.degree() >= 1 && f.is_zero(poly_eval(f, work, r))) {
            work = poly_deflate(f, work, r);
            ++mult;
        }
        if (mult > 0) out.roots.emplace_back(r, mult);
    }
    out.cofactor = poly_monic(f, work);
    if (out.cofactor.is_zero()) out.cofactor = poly_const(f, f.one());
    return out;
}

// Eigen-decomposition of one matrix over a field with exact root machinery.
template <typename E>
struct EigenDecomp {
    struct Space {
        E value;
        int multiplicity = 0;                // algebraic
        std::vector<Vector<E>> eigenvectors; // basis of ker(A - value I)
    };
    std::vector<Space> spaces;  // sorted by eigenvalue ascending
    Polynomial<E> charpoly;     // monic det(xI - A)
    Polynomial<E> rootless_cofactor;
    bool splits() const { return rootless_cofactor.degree() <= 0; }
    bool has_values() const { return !spaces.empty(); }
};

template <typename F>
std::vector<Vector<typename F::Elem>> eigenspace_basis(const F& f,
                                                       const Matrix<typename F::Elem>& a,
                                                       const typename F::Elem& lambda) {
    auto shifted = a;
    for (std::size_t i = 0; i < a.rows(); ++i) shifted(i, i) = f.sub(shifted(i, i), lambda);
    return nullspace_basis(f, shifted);
}

inline EigenDecomp<Rational> eigen_decompose(const RationalField& f,
                                             const Matrix<Rational>& a) {
    if (!a.is_square()) throw NotSquare("eigen");
    EigenDecomp<Rational> out;
    out.charpoly = charpoly_berkowitz(f, a);
    auto rr = rational_roots(out.charpoly);
    out.rootless_cofactor = rr.cofactor;
    for (const auto& [value, mult] : rr.roots) {
        auto basis = eigenspace_basis(f, a, value);
        for (auto& v : basis) v = primitive_rescale(v);
        out.spaces.push_back({value, mult, std::move(basis)});
    }
    return out;
}

inline EigenDecomp<std::uint64_t> eigen_decompose(const PrimeField& f,
                                                  const Matrix<std::uint64_t>& a) {
    if (!a.is_square()) throw NotSquare("eigen");
    EigenDecomp<std::uint64_t> out;
    out.charpoly = charpoly_berkowitz(f, a);
    auto rr = gf_roots(f, out.charpoly);
    out.rootless_cofactor = rr.cofactor;
    for (const auto& [value, mult] : rr.roots)
        out.spaces.push_back({value, mult, eigenspace_basis(f, a, value)});
    return out;
}

/*
 * Minimal polynomial: the lowest-degree monic dependency among
 * I, A, A^2, ..., found by exact rank checks on the flattened powers. By
 * Cayley-Hamilton the loop terminates at or before the characteristic degree,
 * and the result divides the characteristic polynomial.
 */
template <typename F>
Polynomial<typename F::Elem> minimal_polynomial(const F& f, const Matrix<typename F::Elem>& a) {
    using E = typename F::Elem;
    if (!a.is_square()) throw NotSquare("minimal polynomial");
    const std::size_t n = a.rows();
    std::vector<Matrix<E>> powers{mat_identity(f, n)};
    for (std::size_t k = 1; k <= n; ++k) {
        powers.push_back(mat_mul(f, powers.back(), a));
        // rows = flattened powers 0..k; seek c with sum c_i A^i = 0, c_k = 1
        Matrix<E> sys(n * n, k, f.zero());
        Vector<E> rhs(n * n, f.zero());
        for (std::size_t i = 0; i <= k; ++i) {
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) {
                    if (i < k) sys(r * n + c, i) = powers[i](r, c);
                    else rhs[r * n + c] = f.neg(powers[k](r, c));
                }
        }
        if (auto sol = solve(f, sys, rhs)) {
            std::vector<E> coeffs(k + 1, f.zero());
            for (std::size_t i = 0; i < k; ++i) coeffs[i] = (*sol)[i];
            coeffs[k] = f.one();
            return Polynomial<E>(std::move(coeffs));
        }
    }
    throw Error("minimal polynomial: no dependency up to the matrix size");  // unreachable
}

// --- Jordan form (componentwise building block) ---

struct JordanBlock {
    Rational eigenvalue;
    std::size_t size = 0;
};

struct JordanResult {
    Matrix<Rational> form;
    std::vector<JordanBlock> blocks;
};

/*
 * Jordan canonical form over Q. Block sizes for eigenvalue L come from the
 * rank sequence r_k = rank((A - L I)^k): the count of blocks of size >= k is
 * r_{k-1} - r_k. Blocks are ordered by eigenvalue descending, then size
 * descending, with the 1 on the sub-diagonal (set super_diagonal to flip).
 */
inline JordanResult jordan_form(const Matrix<Rational>& a, bool super_diagonal = false,
                                int component_label = 1) {
    RationalField f;
    if (!a.is_square()) throw NotSquare("jordan");
    const std::size_t n = a.rows();
    auto cp = charpoly_berkowitz(f, a);
    auto rr = rational_roots(cp);
    if (rr.cofactor.degree() > 0)
        throw CharPolyDoesNotSplit(component_label, poly_to_string(f, rr.cofactor));

    JordanResult out;
    // eigenvalues descending
    std::vector<std::pair<Rational, int>> roots(rr.roots.rbegin(), rr.roots.rend());
    for (const auto& [lambda, mult] : roots) {
        auto shifted = a;
        for (std::size_t i = 0; i < n; ++i) shifted(i, i) = shifted(i, i) - lambda;
        std::vector<std::size_t> rank_seq{n};
        auto power = mat_identity(f, n);
        while (true) {
            power = mat_mul(f, power, shifted);
            rank_seq.push_back(mat_rank(f, power));
            if (rank_seq.back() == n - static_cast<std::size_t>(mult)) break;
        }
        // blocks_ge[k] = number of blocks of size >= k
        std::vector<std::size_t> blocks_ge;
        for (std::size_t k = 1; k < rank_seq.size(); ++k)
            blocks_ge.push_back(rank_seq[k - 1] - rank_seq[k]);
        // push from the largest size down, so blocks stay size-descending
        for (std::size_t size = blocks_ge.size(); size >= 1; --size) {
            const std::size_t count =
                blocks_ge[size - 1] - (size < blocks_ge.size() ? blocks_ge[size] : 0);
            for (std::size_t c = 0; c < count; ++c) out.blocks.push_back({lambda, size});
        }
    }

    out.form = Matrix<Rational>(n, n, Rational(0));
    std::size_t pos = 0;
    for (const auto& blk : out.blocks) {
        for (std::size_t i = 0; i < blk.size; ++i) {
            out.form(pos + i, pos + i) = blk.eigenvalue;
            if (i + 1 < blk.size) {
                if (super_diagonal) out.form(pos + i, pos + i + 1) = Rational(1);
                else out.form(pos + i + 1, pos + i) = Rational(1);
            }
        }
        pos += blk.size;
    }
    return out;
}

}  // namespace bialg

#endif  // BIALG_EIGEN_HPP
