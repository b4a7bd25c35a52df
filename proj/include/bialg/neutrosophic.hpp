#ifndef BIALG_NEUTROSOPHIC_HPP
#define BIALG_NEUTROSOPHIC_HPP

#include <string>
#include <utility>

#include "bialg/errors.hpp"
#include "bialg/rational.hpp"

namespace bialg {

/*
 * Neutrosophic number a + bI over the rationals, where the indeterminate I is
 * an idempotent: I*I = I. The ring Q(I) is isomorphic to Q x Q through
 *
 *     split(a + bI)  = (a, a + b)       (evaluate I at 0 and at 1)
 *     unsplit(u, v)  = u + (v - u) I
 *
 * and the isomorphism makes products, inverses, determinants and root-finding
 * componentwise rational problems.
 */
struct Neutro {
    Rational a;  // determinate part
    Rational b;  // coefficient of I

    Neutro() : a(0), b(0) {}
    Neutro(Rational real, Rational indet) : a(std::move(real)), b(std::move(indet)) {}
    Neutro(long real) : a(real), b(0) {}  // NOLINT: implicit for integer literals

    bool operator==(const Neutro& o) const { return a == o.a && b == o.b; }
    bool operator!=(const Neutro& o) const { return !(*this == o); }

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    bool is_rational() const { return b.is_zero(); }

    std::string to_string() const;
};

inline Neutro neutro_add(const Neutro& x, const Neutro& y) { return {x.a + y.a, x.b + y.b}; }
inline Neutro neutro_sub(const Neutro& x, const Neutro& y) { return {x.a - y.a, x.b - y.b}; }
inline Neutro neutro_neg(const Neutro& x) { return {-x.a, -x.b}; }

// (a+bI)(c+dI) = ac + (ad+bc+bd)I, the expansion forced by I*I = I.
inline Neutro neutro_mul(const Neutro& x, const Neutro& y) {
    return {x.a * y.a, x.a * y.b + x.b * y.a + x.b * y.b};
}

inline std::pair<Rational, Rational> neutro_split(const Neutro& x) {
    return {x.a, x.a + x.b};
}

inline Neutro neutro_unsplit(const Rational& u, const Rational& v) { return {u, v - u}; }

// Unit iff both split components are nonzero; the inverse is the unsplit of
// the componentwise reciprocals.
inline bool neutro_is_unit(const Neutro& x) {
    auto [u, v] = neutro_split(x);
    return !u.is_zero() && !v.is_zero();
}

inline Neutro neutro_inverse(const Neutro& x) {
    auto [u, v] = neutro_split(x);
    if (u.is_zero() || v.is_zero()) throw NotAUnit(x.to_string() + " has a zero split component");
    return neutro_unsplit(u.inverse(), v.inverse());
}

inline std::string Neutro::to_string() const {
    if (b.is_zero()) return a.to_string();
    std::string istr;
    if (b.is_one()) istr = "I";
    else if (b == Rational(-1)) istr = "-I";
    else istr = b.to_string() + "I";
    if (a.is_zero()) return istr;
    if (b.sign() < 0) {
        std::string mag = (-b).is_one() ? "I" : (-b).to_string() + "I";
        return a.to_string() + "-" + mag;
    }
    return a.to_string() + "+" + istr;
}

// Commutative-ring interface for the generic kernels (Berkowitz char-poly,
// matrix arithmetic). inv() is partial: only units have inverses.
struct NeutroRing {
    using Elem = Neutro;
    Elem zero() const { return Neutro(); }
    Elem one() const { return Neutro(1); }
    Elem add(const Elem& x, const Elem& y) const { return neutro_add(x, y); }
    Elem sub(const Elem& x, const Elem& y) const { return neutro_sub(x, y); }
    Elem mul(const Elem& x, const Elem& y) const { return neutro_mul(x, y); }
    Elem neg(const Elem& x) const { return neutro_neg(x); }
    Elem inv(const Elem& x) const { return neutro_inverse(x); }
    Elem div(const Elem& x, const Elem& y) const { return neutro_mul(x, neutro_inverse(y)); }
    bool is_zero(const Elem& x) const { return x.is_zero(); }
    bool eq(const Elem& x, const Elem& y) const { return x == y; }
    Elem from_int(long n) const { return Neutro(n); }
    std::string to_string(const Elem& x) const { return x.to_string(); }
};

}  // namespace bialg

#endif  // BIALG_NEUTROSOPHIC_HPP
