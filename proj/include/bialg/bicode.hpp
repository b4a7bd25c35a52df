#ifndef BIALG_BICODE_HPP
#define BIALG_BICODE_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bialg/bimatrix.hpp"
#include "bialg/bispace.hpp"
#include "bialg/linalg.hpp"
#include "bialg/matrix.hpp"
#include "bialg/polynomial.hpp"
#include "bialg/prime_field.hpp"

namespace bialg {

using Word = Vector<std::uint64_t>;

/*
 * Linear bicode over GF(q): a pair of [n_i, k_i] codes used jointly. The
 * generator components have full row rank k_i, the parity components full row
 * rank n_i - k_i, and G_i H_i^T = 0 always holds by construction.
 */
struct Bicode {
    PrimeField field;
    Bimatrix<std::uint64_t> generator;  // k_i x n_i
    Bimatrix<std::uint64_t> parity;     // (n_i - k_i) x n_i
    std::optional<Bipolynomial<std::uint64_t>> generator_poly;  // cyclic codes only
    std::optional<Bipolynomial<std::uint64_t>> check_poly;

    std::size_t n1() const { return generator.first.cols(); }
    std::size_t k1() const { return generator.first.rows(); }
    std::size_t n2() const { return generator.second.cols(); }
    std::size_t k2() const { return generator.second.rows(); }
};

struct Biword {
    Word first, second;
};

namespace detail {

// Canonical row-space basis: reduced row echelon rows of the stacked input.
inline std::vector<Word> canonical_rows(const PrimeField& f, const std::vector<Word>& rows) {
    auto r = rref(f, Matrix<std::uint64_t>::from_rows(rows));
    std::vector<Word> out;
    for (std::size_t i = 0; i < r.rank; ++i) out.push_back(r.mat.row(i));
    return out;
}

// Standard form (A | I) detection; the canonical generator is then (I | -A^T).
inline std::optional<Matrix<std::uint64_t>> generator_from_standard_parity(
    const PrimeField& f, const Matrix<std::uint64_t>& h) {
    const std::size_t m = h.rows(), n = h.cols();
    if (n < m) return std::nullopt;
    const std::size_t k = n - m;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (h(i, k + j) != (i == j ? f.one() : f.zero())) return std::nullopt;
    Matrix<std::uint64_t> g(k, n, f.zero());
    for (std::size_t i = 0; i < k; ++i) {
        g(i, i) = f.one();
        for (std::size_t j = 0; j < m; ++j) g(i, k + j) = f.neg(h(j, i));
    }
    return g;
}

inline Matrix<std::uint64_t> generator_from_parity(const PrimeField& f,
                                                   const Matrix<std::uint64_t>& h,
                                                   int component) {
    if (mat_rank(f, h) != h.rows()) throw RankDeficientParity(component);
    if (auto g = generator_from_standard_parity(f, h)) return *g;
    auto basis = nullspace_basis(f, h);
    return Matrix<std::uint64_t>::from_rows(canonical_rows(f, basis));
}

inline void check_orthogonal(const PrimeField& f, const Bicode& c) {
    const auto z1 = mat_mul(f, c.generator.first, c.parity.first.transpose());
    const auto z2 = mat_mul(f, c.generator.second, c.parity.second.transpose());
    if (!mat_is_zero(f, z1) || !mat_is_zero(f, z2))
        throw InvariantViolation("G H^T != 0 on a constructed bicode");
}

}  // namespace detail

inline Bicode bicode_from_parity(const Bimatrix<std::uint64_t>& h, std::uint64_t q) {
    PrimeField f(q);
    Bicode c{f,
             {detail::generator_from_parity(f, h.first, 1),
              detail::generator_from_parity(f, h.second, 2)},
             h,
             std::nullopt,
             std::nullopt};
    detail::check_orthogonal(f, c);
    return c;
}

inline Bicode bicode_from_generator(const Bimatrix<std::uint64_t>& g, std::uint64_t q) {
    PrimeField f(q);
    // the parity bimatrix is any canonical basis of the dual row space
    Bicode c{f,
             g,
             {detail::generator_from_parity(f, g.first, 1),
              detail::generator_from_parity(f, g.second, 2)},
             std::nullopt,
             std::nullopt};
    detail::check_orthogonal(f, c);
    return c;
}

/*
 * Cyclic bicode from a generator bipolynomial g = g1 u g2 with g_i | x^n_i - 1.
 * G rows are the cyclic shifts g, xg, ..., x^(k-1)g; the check bipolynomial is
 * h_i = (x^n_i - 1)/g_i and the parity rows carry the reversed h coefficients,
 * validated by G H^T = 0.
 */
inline Bicode cyclic_bicode(const Bipolynomial<std::uint64_t>& g,
                            std::pair<std::size_t, std::size_t> n, std::uint64_t q) {
    PrimeField f(q);
    auto build = [&f](const Polynomial<std::uint64_t>& gi, std::size_t ni, int component) {
        auto xn1 = poly_sub(f, poly_monomial(f, ni), poly_const(f, f.one()));
        if (gi.is_zero() || !poly_divides(f, gi, xn1)) throw GeneratorDoesNotDivide(component);
        const std::size_t deg = static_cast<std::size_t>(gi.degree());
        const std::size_t k = ni - deg;
        Matrix<std::uint64_t> gmat(k, ni, f.zero());
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j <= deg; ++j) gmat(i, i + j) = gi.c[j];
        auto h = poly_divmod(f, xn1, gi).first;  // degree k
        Matrix<std::uint64_t> hmat(ni - k, ni, f.zero());
        for (std::size_t i = 0; i < ni - k; ++i) {
            const std::size_t offset = ni - k - 1 - i;
            for (std::size_t j = 0; j <= k; ++j) hmat(i, offset + j) = h.c[k - j];
        }
        return std::make_tuple(gmat, hmat, h);
    };
    auto [g1, h1, hp1] = build(g.first, n.first, 1);
    auto [g2, h2, hp2] = build(g.second, n.second, 2);
    Bicode c{f, {g1, g2}, {h1, h2}, g, Bipolynomial<std::uint64_t>{hp1, hp2}};
    detail::check_orthogonal(f, c);
    return c;
}

inline Biword encode(const Bicode& c, const Word& a1, const Word& a2) {
    if (a1.size() != c.k1() || a2.size() != c.k2())
        throw ShapeMismatch("message lengths vs (k1, k2)");
    const auto& f = c.field;
    auto enc = [&f](const Word& a, const Matrix<std::uint64_t>& g) {
        Word x(g.cols(), 0);
        for (std::size_t i = 0; i < g.rows(); ++i) {
            if (f.is_zero(a[i])) continue;
            for (std::size_t j = 0; j < g.cols(); ++j)
                x[j] = f.add(x[j], f.mul(a[i], g(i, j)));
        }
        return x;
    };
    return {enc(a1, c.generator.first), enc(a2, c.generator.second)};
}

struct Syndrome {
    Word first, second;
    bool is_bicodeword = false;
};

inline Syndrome syndrome(const Bicode& c, const Biword& y) {
    if (y.first.size() != c.n1() || y.second.size() != c.n2())
        throw ShapeMismatch("word lengths vs (n1, n2)");
    const auto& f = c.field;
    Syndrome s{mat_apply(f, c.parity.first, y.first), mat_apply(f, c.parity.second, y.second),
               false};
    s.is_bicodeword = vec_is_zero(f, s.first) && vec_is_zero(f, s.second);
    return s;
}

inline std::uint64_t default_enumeration_cap() { return 1ull << 20; }

struct Enumeration {
    std::vector<Word> first, second;  // lexicographically sorted
};

inline std::vector<Word> enumerate_component(const PrimeField& f,
                                             const Matrix<std::uint64_t>& g,
                                             std::uint64_t cap) {
    const std::size_t k = g.rows();
    unsigned __int128 size = 1;
    for (std::size_t i = 0; i < k; ++i) {
        size *= f.p();
        if (size > cap) throw EnumerationTooLarge(static_cast<unsigned long long>(size), cap);
    }
    std::vector<Word> words;
    Word msg(k, 0);
    while (true) {
        Word x(g.cols(), 0);
        for (std::size_t i = 0; i < k; ++i) {
            if (f.is_zero(msg[i])) continue;
            for (std::size_t j = 0; j < g.cols(); ++j)
                x[j] = f.add(x[j], f.mul(msg[i], g(i, j)));
        }
        words.push_back(std::move(x));
        // odometer increment
        std::size_t pos = k;
        while (pos > 0) {
            --pos;
            msg[pos] = f.add(msg[pos], 1);
            if (msg[pos] != 0) break;
        }
        if (pos == 0 && msg[0] == 0) break;
        if (k == 0) break;
    }
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return words;
}

inline Enumeration enumerate(const Bicode& c, std::uint64_t cap = default_enumeration_cap()) {
    return {enumerate_component(c.field, c.generator.first, cap),
            enumerate_component(c.field, c.generator.second, cap)};
}

inline Bicode dual_bicode(const Bicode& c) {
    Bicode d{c.field, c.parity, c.generator, std::nullopt, std::nullopt};
    detail::check_orthogonal(c.field, d);
    return d;
}

struct HammingBidistance {
    std::size_t first = 0, second = 0;
    std::size_t total() const { return first + second; }
};

inline HammingBidistance hamming_bidistance(const Biword& x, const Biword& y) {
    if (x.first.size() != y.first.size() || x.second.size() != y.second.size())
        throw ShapeMismatch("hamming distance of unequal shapes");
    HammingBidistance d;
    for (std::size_t i = 0; i < x.first.size(); ++i) d.first += x.first[i] != y.first[i];
    for (std::size_t i = 0; i < x.second.size(); ++i) d.second += x.second[i] != y.second[i];
    return d;
}

/*
 * Decoder basis policy. The default walk starts from the rows of G and at
 * step j >= 1 replaces row (j-1 mod k) with its sum with the cyclically next
 * row; every step keeps rank k. Explicit per-component bases override the
 * walk (each explicit vector must be a codeword). The walk is bounded at 4k
 * bases per component.
 */
struct DecodePolicy {
    std::vector<std::vector<Word>> first_bases, second_bases;  // empty -> generator walk
    bool exhaustive = false;  // scan every policy basis, keep the closest result
};

struct ComponentDecodeReport {
    bool was_codeword = false;
    std::size_t bases_tried = 0;
    Word result;
};

struct DecodeReport {
    ComponentDecodeReport first, second;
    std::string decode_case;  // "accepted", "case-1", "case-2", "case-3"
    HammingBidistance distance;
};

namespace detail {

inline std::vector<Word> walk_basis(const PrimeField& f, const Matrix<std::uint64_t>& g,
                                    std::size_t step) {
    std::vector<Word> basis;
    for (std::size_t i = 0; i < g.rows(); ++i) basis.push_back(g.row(i));
    const std::size_t k = basis.size();
    for (std::size_t j = 1; j <= step; ++j) {
        const std::size_t r = (j - 1) % k;
        const std::size_t s = (r + 1) % k;
        for (std::size_t t = 0; t < basis[r].size(); ++t)
            basis[r][t] = f.add(basis[r][t], basis[s][t]);
    }
    return basis;
}

inline ComponentDecodeReport decode_component(const PrimeField& f,
                                              const Matrix<std::uint64_t>& g,
                                              const Matrix<std::uint64_t>& h, const Word& beta,
                                              const std::vector<std::vector<Word>>& explicit_bases,
                                              bool exhaustive, int component) {
    ComponentDecodeReport rep;
    if (vec_is_zero(f, mat_apply(f, h, beta))) {
        rep.was_codeword = true;
        rep.result = beta;
        return rep;
    }
    const std::size_t k = g.rows();
    const std::size_t walk_bound = 4 * std::max<std::size_t>(k, 1);
    const std::size_t total = explicit_bases.empty() ? walk_bound : explicit_bases.size();
    std::optional<Word> best;
    std::size_t best_dist = 0;
    for (std::size_t j = 0; j < total; ++j) {
        std::vector<Word> basis =
            explicit_bases.empty() ? walk_basis(f, g, j) : explicit_bases[j];
        for (const auto& v : basis)
            if (!vec_is_zero(f, mat_apply(f, h, v)))
                throw InvariantViolation("decoder basis vector is not a codeword");
        ++rep.bases_tried;
        auto approx = pseudo_best_approximation(f, GfWeightedDot{}, basis, beta);
        if (!approx) continue;
        if (!exhaustive) {
            rep.result = *approx;
            return rep;
        }
        std::size_t dist = 0;
        for (std::size_t i = 0; i < beta.size(); ++i) dist += beta[i] != (*approx)[i];
        if (!best || dist < best_dist || (dist == best_dist && *approx < *best)) {
            best = *approx;
            best_dist = dist;
        }
    }
    if (!best) throw DecoderExhausted(component);
    rep.result = *best;
    return rep;
}

}  // namespace detail

inline DecodeReport pseudo_decode(const Bicode& c, const Biword& beta,
                                  const DecodePolicy& policy = {}) {
    if (beta.first.size() != c.n1() || beta.second.size() != c.n2())
        throw ShapeMismatch("received word lengths vs (n1, n2)");
    DecodeReport rep;
    rep.first = detail::decode_component(c.field, c.generator.first, c.parity.first, beta.first,
                                         policy.first_bases, policy.exhaustive, 1);
    rep.second = detail::decode_component(c.field, c.generator.second, c.parity.second,
                                          beta.second, policy.second_bases, policy.exhaustive, 2);
    if (rep.first.was_codeword && rep.second.was_codeword) rep.decode_case = "accepted";
    else if (rep.first.was_codeword) rep.decode_case = "case-1";
    else if (rep.second.was_codeword) rep.decode_case = "case-2";
    else rep.decode_case = "case-3";
    rep.distance = hamming_bidistance(beta, {rep.first.result, rep.second.result});
    return rep;
}

}  // namespace bialg

#endif  // BIALG_BICODE_HPP
