#ifndef BIALG_BISPACE_HPP
#define BIALG_BISPACE_HPP

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bialg/bimatrix.hpp"
#include "bialg/matrix.hpp"
#include "bialg/prime_field.hpp"
#include "bialg/rational.hpp"

namespace bialg {

/*
 * Inner-product descriptors. Over Q a descriptor is positive definite
 * (weights strictly positive, L2 over a nondegenerate interval); over GF(p)
 * the same shape of bilinear form is only "pseudo": <a,a> = 0 can happen for
 * a != 0, which is exactly what the decoding machinery exploits.
 *
 * Polynomial components are coefficient vectors (index i = coefficient of
 * x^i); the L2 product is evaluated with the exact moment formula
 * <x^i, x^j> = (b^(i+j+1) - a^(i+j+1)) / (i+j+1), never by quadrature.
 */
struct StandardDot {};

struct WeightedDot {
    std::vector<Rational> weights;
};

struct PolyL2 {
    Rational a, b;  // interval endpoints
};

struct GfWeightedDot {
    std::vector<std::uint64_t> weights;  // empty = all ones (standard dot)
};

using InnerProductDesc = std::variant<StandardDot, WeightedDot, PolyL2, GfWeightedDot>;

struct InnerBiproduct {
    InnerProductDesc first, second;
};

inline void validate_rational_desc(const InnerProductDesc& d) {
    if (std::holds_alternative<GfWeightedDot>(d))
        throw UnsupportedComponentFamily("gf descriptor in a rational inner biproduct");
    if (const auto* w = std::get_if<WeightedDot>(&d)) {
        for (const auto& wi : w->weights)
            if (wi.sign() <= 0) throw InvariantViolation("weighted dot needs positive weights");
    }
    if (const auto* l2 = std::get_if<PolyL2>(&d)) {
        if (!(l2->a < l2->b)) throw InvariantViolation("l2 interval must satisfy a < b");
    }
}

inline Rational ip_eval(const InnerProductDesc& d, const Vector<Rational>& u,
                        const Vector<Rational>& v) {
    if (u.size() != v.size()) throw ShapeMismatch("inner product of unequal lengths");
    if (std::holds_alternative<StandardDot>(d)) {
        Rational acc(0);
        for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i];
        return acc;
    }
    if (const auto* w = std::get_if<WeightedDot>(&d)) {
        if (w->weights.size() != u.size()) throw ShapeMismatch("weight count");
        Rational acc(0);
        for (std::size_t i = 0; i < u.size(); ++i) acc += w->weights[i] * u[i] * v[i];
        return acc;
    }
    if (const auto* l2 = std::get_if<PolyL2>(&d)) {
        Rational acc(0);
        for (std::size_t i = 0; i < u.size(); ++i)
            for (std::size_t j = 0; j < v.size(); ++j) {
                if (u[i].is_zero() || v[j].is_zero()) continue;
                const long e = static_cast<long>(i + j) + 1;
                const Rational moment = (l2->b.pow(e) - l2->a.pow(e)) / Rational(e);
                acc += u[i] * v[j] * moment;
            }
        return acc;
    }
    throw UnsupportedComponentFamily("gf descriptor evaluated over the rationals");
}

inline std::uint64_t gf_ip_eval(const PrimeField& f, const GfWeightedDot& d,
                                const Vector<std::uint64_t>& u, const Vector<std::uint64_t>& v) {
    if (u.size() != v.size()) throw ShapeMismatch("inner product of unequal lengths");
    if (!d.weights.empty() && d.weights.size() != u.size())
        throw ShapeMismatch("weight count");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        std::uint64_t term = f.mul(u[i], v[i]);
        if (!d.weights.empty()) term = f.mul(d.weights[i], term);
        acc = f.add(acc, term);
    }
    return acc;
}

inline std::pair<Rational, Rational> inner_biproduct(const InnerBiproduct& ip,
                                                     const Bivector<Rational>& u,
                                                     const Bivector<Rational>& v) {
    return {ip_eval(ip.first, u.first, v.first), ip_eval(ip.second, u.second, v.second)};
}

inline std::pair<Rational, Rational> binorm_squared(const InnerBiproduct& ip,
                                                    const Bivector<Rational>& v) {
    return inner_biproduct(ip, v, v);
}

enum class Orthogonality { Biorthogonal, SemiBiorthogonal, Neither };

inline std::string orthogonality_name(Orthogonality o) {
    switch (o) {
        case Orthogonality::Biorthogonal: return "biorthogonal";
        case Orthogonality::SemiBiorthogonal: return "semi-biorthogonal";
        default: return "neither";
    }
}

inline Orthogonality classify_orthogonality(const Rational& c1, const Rational& c2) {
    const int zeros = int(c1.is_zero()) + int(c2.is_zero());
    if (zeros == 2) return Orthogonality::Biorthogonal;
    if (zeros == 1) return Orthogonality::SemiBiorthogonal;
    return Orthogonality::Neither;
}

inline Orthogonality is_biorthogonal(const InnerBiproduct& ip, const Bivector<Rational>& u,
                                     const Bivector<Rational>& v) {
    auto [c1, c2] = inner_biproduct(ip, u, v);
    return classify_orthogonality(c1, c2);
}

/*
 * Gram-Schmidt biorthogonalization: a_1 = b_1 and
 *   a_{m+1} = b_{m+1} - sum_k <b_{m+1}, a_k> a_k / ||a_k||^2
 * componentwise. Output is deliberately not normalized; prefix spans are
 * preserved per component. A vanishing component means the inputs were
 * dependent in that component.
 */
inline std::vector<Bivector<Rational>> gram_schmidt_biorthogonalize(
    const InnerBiproduct& ip, const std::vector<Bivector<Rational>>& input) {
    validate_rational_desc(ip.first);
    validate_rational_desc(ip.second);
    RationalField f;
    std::vector<Bivector<Rational>> out;
    for (std::size_t idx = 0; idx < input.size(); ++idx) {
        Bivector<Rational> a = input[idx];
        for (const auto& prev : out) {
            const auto [num1, num2] = inner_biproduct(ip, input[idx], prev);
            const auto [den1, den2] = binorm_squared(ip, prev);
            if (den1.is_zero() || den2.is_zero()) throw ZeroNormEncountered();
            a.first = vec_sub(f, a.first, vec_scale(f, num1 / den1, prev.first));
            a.second = vec_sub(f, a.second, vec_scale(f, num2 / den2, prev.second));
        }
        if (vec_is_zero(f, a.first)) throw LinearlyDependentInput(idx, 1);
        if (vec_is_zero(f, a.second)) throw LinearlyDependentInput(idx, 2);
        out.push_back(std::move(a));
    }
    return out;
}

// Optional pass: rescale every component vector to its primitive integer
// representative. Spans and orthogonality are unchanged.
inline std::vector<Bivector<Rational>> primitive_rescale_set(
    const std::vector<Bivector<Rational>>& vs) {
    std::vector<Bivector<Rational>> out;
    out.reserve(vs.size());
    for (const auto& v : vs)
        out.push_back({primitive_rescale(v.first), primitive_rescale(v.second)});
    return out;
}

/*
 * Best biapproximation of beta by the biorthogonal basis W:
 *   alpha = sum_k <beta, w_k> w_k / ||w_k||^2,
 * the orthogonal projection onto span(W), componentwise. Unique, and
 * beta - alpha is biorthogonal to every element of W.
 */
inline Bivector<Rational> best_biapproximation(const InnerBiproduct& ip,
                                               const std::vector<Bivector<Rational>>& w,
                                               const Bivector<Rational>& beta) {
    validate_rational_desc(ip.first);
    validate_rational_desc(ip.second);
    for (std::size_t i = 0; i < w.size(); ++i) {
        const auto [n1, n2] = binorm_squared(ip, w[i]);
        if (n1.is_zero() || n2.is_zero())
            throw BasisNotBiorthogonal("basis vector " + std::to_string(i) + " has zero norm");
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (is_biorthogonal(ip, w[i], w[j]) != Orthogonality::Biorthogonal)
                throw BasisNotBiorthogonal("vectors " + std::to_string(i) + " and " +
                                           std::to_string(j) + " are not biorthogonal");
    }
    RationalField f;
    Bivector<Rational> alpha{Vector<Rational>(beta.first.size(), Rational(0)),
                             Vector<Rational>(beta.second.size(), Rational(0))};
    for (const auto& wk : w) {
        const auto [c1, c2] = inner_biproduct(ip, beta, wk);
        const auto [d1, d2] = binorm_squared(ip, wk);
        alpha.first = vec_add(f, alpha.first, vec_scale(f, c1 / d1, wk.first));
        alpha.second = vec_add(f, alpha.second, vec_scale(f, c2 / d2, wk.second));
    }
    return alpha;
}

/*
 * Biorthogonal bicomplement: basis of { v : <v, s> = (0,0) for all s in S },
 * componentwise, in ambient components of finite dimension (row spaces and
 * bounded-degree polynomial spaces). Solves the Gram system exactly.
 */
inline std::vector<Vector<Rational>> orthogonal_complement_component(
    const InnerProductDesc& desc, const std::vector<Vector<Rational>>& s,
    std::size_t ambient_dim) {
    validate_rational_desc(desc);
    RationalField f;
    // unit coordinate vectors of the ambient component
    auto unit = [&](std::size_t j) {
        Vector<Rational> e(ambient_dim, Rational(0));
        e[j] = Rational(1);
        return e;
    };
    if (s.empty()) {
        std::vector<Vector<Rational>> full;
        for (std::size_t j = 0; j < ambient_dim; ++j) full.push_back(unit(j));
        return full;
    }
    Matrix<Rational> gram(s.size(), ambient_dim);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i].size() != ambient_dim)
            throw ShapeMismatch("set vector length vs ambient dimension");
        for (std::size_t j = 0; j < ambient_dim; ++j) gram(i, j) = ip_eval(desc, s[i], unit(j));
    }
    auto basis = nullspace_basis(f, gram);
    for (auto& v : basis) v = primitive_rescale(v);
    return basis;
}

struct BivectorSetPair {
    std::vector<Vector<Rational>> first, second;
};

inline BivectorSetPair biorthogonal_bicomplement(const InnerBiproduct& ip,
                                                 const BivectorSetPair& s,
                                                 const Bidimension& ambient) {
    return {orthogonal_complement_component(ip.first, s.first, ambient.m),
            orthogonal_complement_component(ip.second, s.second, ambient.n)};
}

/*
 * Pseudo best approximation over GF(p): the literal sum
 *   sum_i <beta, c_i>_p c_i
 * over the chosen basis. Empty result means the sum vanished and the caller
 * should retry with another basis; this routine stays policy-free.
 */
inline std::optional<Vector<std::uint64_t>> pseudo_best_approximation(
    const PrimeField& f, const GfWeightedDot& desc,
    const std::vector<Vector<std::uint64_t>>& basis, const Vector<std::uint64_t>& beta) {
    Vector<std::uint64_t> acc(beta.size(), 0);
    for (const auto& c : basis) {
        if (c.size() != beta.size()) throw ShapeMismatch("basis vector length");
        const auto coef = gf_ip_eval(f, desc, beta, c);
        if (coef == 0) continue;
        for (std::size_t i = 0; i < beta.size(); ++i) acc[i] = f.add(acc[i], f.mul(coef, c[i]));
    }
    if (vec_is_zero(f, acc)) return std::nullopt;
    return acc;
}

}  // namespace bialg

#endif  // BIALG_BISPACE_HPP
