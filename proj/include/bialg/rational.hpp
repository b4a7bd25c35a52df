#ifndef BIALG_RATIONAL_HPP
#define BIALG_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

#include "bialg/errors.hpp"

namespace bialg {

/*
 * Arbitrary-precision rational backed by GMP. Canonical form (denominator
 * positive, gcd(|num|, den) = 1) is restored after every operation, so two
 * equal values always compare bit-equal.
 */
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    Rational(long num, long den);
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    // Parses "p/q" or "n" (optionally signed). Throws ParseError / DivisionByZero.
    static Rational from_string(const std::string& s);

    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const;
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    Rational inverse() const;
    // Integer power; negative exponents invert (throws DivisionByZero on 0).
    Rational pow(long e) const;

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    std::string to_string() const;

    friend struct std::hash<Rational>;

  private:
    mpq_class v_;
};

inline Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw DivisionByZero();
    v_.canonicalize();
}

inline Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw DivisionByZero();
    return Rational(mpq_class(v_ / o.v_));
}

inline Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return Rational(mpq_class(1 / v_));
}

inline Rational Rational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(mpq_class(num, den));
}

inline std::string Rational::to_string() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

inline Rational Rational::from_string(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    const auto slash = s.find('/');
    const std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto check_int = [&](const std::string& t) {
        if (t.empty()) throw ParseError("bad rational literal '" + s + "'");
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) throw ParseError("bad rational literal '" + s + "'");
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') throw ParseError("bad rational literal '" + s + "'");
    };
    check_int(num);
    check_int(den);
    mpz_class n(num), d(den);
    if (d == 0) throw DivisionByZero();
    return Rational(mpq_class(n, d));
}

// Field interface used by the generic linear-algebra kernels. All methods are
// pure; an instance carries no state for the rationals.
struct RationalField {
    using Elem = Rational;
    Elem zero() const { return Rational(0); }
    Elem one() const { return Rational(1); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const { return a.inverse(); }
    Elem div(const Elem& a, const Elem& b) const { return a / b; }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem from_int(long n) const { return Rational(n); }
    std::string to_string(const Elem& a) const { return a.to_string(); }
};

}  // namespace bialg

template <>
struct std::hash<bialg::Rational> {
    std::size_t operator()(const bialg::Rational& r) const {
        return std::hash<std::string>()(r.v_.get_str());
    }
};

#endif  // BIALG_RATIONAL_HPP
