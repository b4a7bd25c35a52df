#ifndef BIALG_POLYNOMIAL_HPP
#define BIALG_POLYNOMIAL_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bialg/errors.hpp"

namespace bialg {

/*
 * Dense univariate polynomial, coefficient of x^i at index i. Canonical form:
 * no trailing zero coefficient; the zero polynomial is the empty list, with
 * degree() == -1. Arithmetic is parameterized over the coefficient
 * field/ring, which supplies the element operations.
 */
template <typename E>
struct Polynomial {
    std::vector<E> c;

    Polynomial() = default;
    explicit Polynomial(std::vector<E> coeffs) : c(std::move(coeffs)) {}

    long degree() const { return static_cast<long>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
};

template <typename F>
Polynomial<typename F::Elem> poly_trim(const F& f, Polynomial<typename F::Elem> p) {
    while (!p.c.empty() && f.is_zero(p.c.back())) p.c.pop_back();
    return p;
}

template <typename F>
Polynomial<typename F::Elem> poly_from(const F& f, std::vector<typename F::Elem> coeffs) {
    return poly_trim(f, Polynomial<typename F::Elem>(std::move(coeffs)));
}

template <typename F>
Polynomial<typename F::Elem> poly_zero(const F&) {
    return {};
}

template <typename F>
Polynomial<typename F::Elem> poly_const(const F& f, const typename F::Elem& a) {
    return poly_from(f, std::vector<typename F::Elem>{a});
}

// x^n with unit coefficient.
template <typename F>
Polynomial<typename F::Elem> poly_monomial(const F& f, std::size_t n) {
    std::vector<typename F::Elem> c(n + 1, f.zero());
    c[n] = f.one();
    return Polynomial<typename F::Elem>(std::move(c));
}

template <typename F>
bool poly_eq(const F& f, const Polynomial<typename F::Elem>& a,
             const Polynomial<typename F::Elem>& b) {
    if (a.c.size() != b.c.size()) return false;
    for (std::size_t i = 0; i < a.c.size(); ++i)
        if (!f.eq(a.c[i], b.c[i])) return false;
    return true;
}

template <typename F>
Polynomial<typename F::Elem> poly_add(const F& f, const Polynomial<typename F::Elem>& a,
                                      const Polynomial<typename F::Elem>& b) {
    std::vector<typename F::Elem> c(std::max(a.c.size(), b.c.size()), f.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) c[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) c[i] = f.add(c[i], b.c[i]);
    return poly_from(f, std::move(c));
}

template <typename F>
Polynomial<typename F::Elem> poly_neg(const F& f, const Polynomial<typename F::Elem>& a) {
    auto c = a.c;
    for (auto& x : c) x = f.neg(x);
    return Polynomial<typename F::Elem>(std::move(c));
}

template <typename F>
Polynomial<typename F::Elem> poly_sub(const F& f, const Polynomial<typename F::Elem>& a,
                                      const Polynomial<typename F::Elem>& b) {
    return poly_add(f, a, poly_neg(f, b));
}

template <typename F>
Polynomial<typename F::Elem> poly_mul(const F& f, const Polynomial<typename F::Elem>& a,
                                      const Polynomial<typename F::Elem>& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<typename F::Elem> c(a.c.size() + b.c.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j)
            c[i + j] = f.add(c[i + j], f.mul(a.c[i], b.c[j]));
    return poly_from(f, std::move(c));
}

template <typename F>
Polynomial<typename F::Elem> poly_scale(const F& f, const typename F::Elem& s,
                                        const Polynomial<typename F::Elem>& a) {
    auto c = a.c;
    for (auto& x : c) x = f.mul(s, x);
    return poly_from(f, std::move(c));
}

template <typename F>
typename F::Elem poly_eval(const F& f, const Polynomial<typename F::Elem>& a,
                           const typename F::Elem& x) {
    typename F::Elem acc = f.zero();
    for (std::size_t i = a.c.size(); i-- > 0;) acc = f.add(f.mul(acc, x), a.c[i]);
    return acc;
}

// Euclidean division over a field: f = q*g + r with deg r < deg g.
template <typename F>
std::pair<Polynomial<typename F::Elem>, Polynomial<typename F::Elem>> poly_divmod(
    const F& f, const Polynomial<typename F::Elem>& num,
    const Polynomial<typename F::Elem>& den) {
    if (den.is_zero()) throw DivisionByZeroPolynomial();
    auto r = num;
    const long dd = den.degree();
    const auto lead_inv = f.inv(den.c.back());
    std::vector<typename F::Elem> q;
    if (num.degree() >= dd) q.assign(static_cast<std::size_t>(num.degree() - dd) + 1, f.zero());
    while (!r.is_zero() && r.degree() >= dd) {
        const long k = r.degree() - dd;
        const auto coef = f.mul(r.c.back(), lead_inv);
        q[static_cast<std::size_t>(k)] = coef;
        for (long i = 0; i <= dd; ++i) {
            auto& ri = r.c[static_cast<std::size_t>(k + i)];
            ri = f.sub(ri, f.mul(coef, den.c[static_cast<std::size_t>(i)]));
        }
        r = poly_trim(f, std::move(r));
    }
    return {poly_from(f, std::move(q)), r};
}

template <typename F>
bool poly_divides(const F& f, const Polynomial<typename F::Elem>& g,
                  const Polynomial<typename F::Elem>& num) {
    return poly_divmod(f, num, g).second.is_zero();
}

template <typename F>
Polynomial<typename F::Elem> poly_monic(const F& f, const Polynomial<typename F::Elem>& a) {
    if (a.is_zero()) return a;
    return poly_scale(f, f.inv(a.c.back()), a);
}

// Divides out a known root: returns f / (x - root). The remainder must vanish.
template <typename F>
Polynomial<typename F::Elem> poly_deflate(const F& f, const Polynomial<typename F::Elem>& a,
                                          const typename F::Elem& root) {
    std::vector<typename F::Elem> lin{f.neg(root), f.one()};
    auto [q, r] = poly_divmod(f, a, Polynomial<typename F::Elem>(std::move(lin)));
    if (!r.is_zero()) throw Error("poly_deflate: not a root");
    return q;
}

template <typename F>
std::string poly_to_string(const F& f, const Polynomial<typename F::Elem>& a,
                           const std::string& var = "x") {
    if (a.is_zero()) return "0";
    std::string out;
    for (std::size_t i = a.c.size(); i-- > 0;) {
        if (f.is_zero(a.c[i])) continue;
        std::string coef = f.to_string(a.c[i]);
        // coefficients with interior signs (e.g. neutrosophic a+bI) get parens
        if (coef.find_first_of("+-", 1) != std::string::npos) coef = "(" + coef + ")";
        std::string term;
        if (i == 0) {
            term = coef;
        } else {
            std::string xs = i == 1 ? var : var + "^" + std::to_string(i);
            if (coef == "1") term = xs;
            else if (coef == "-1") term = "-" + xs;
            else term = coef + xs;
        }
        if (out.empty()) {
            out = term;
        } else if (!term.empty() && term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

}  // namespace bialg

#endif  // BIALG_POLYNOMIAL_HPP
