#ifndef BIALG_MODELS_HPP
#define BIALG_MODELS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bialg/bimatrix.hpp"
#include "bialg/linalg.hpp"
#include "bialg/matrix.hpp"
#include "bialg/neutro_matrix.hpp"
#include "bialg/rational.hpp"

namespace bialg {

/*
 * Markov bichains. Strict mode is the classical setting: nonnegative entries,
 * every column of each component sums to one, states are probability
 * bivectors. The relaxed (smarandache) mode admits entries in [-1,1] with
 * column sums in [-1,1]; the update rule is unchanged but states are no
 * longer guaranteed to stay probability vectors, so their invariants are only
 * validated, never enforced, there.
 */
enum class MarkovMode { Strict, Smarandache };

struct TransitionBimatrix {
    Bimatrix<Rational> p;
    MarkovMode mode = MarkovMode::Strict;
};

inline void validate_transition(const TransitionBimatrix& t) {
    for (const auto* m : {&t.p.first, &t.p.second}) {
        if (!m->is_square()) throw NotSquare("transition components must be square");
        for (std::size_t j = 0; j < m->cols(); ++j) {
            Rational colsum(0);
            for (std::size_t i = 0; i < m->rows(); ++i) {
                const Rational& e = (*m)(i, j);
                if (t.mode == MarkovMode::Strict && e.sign() < 0)
                    throw InvariantViolation("strict transition entry < 0");
                if (t.mode == MarkovMode::Smarandache &&
                    (e < Rational(-1) || e > Rational(1)))
                    throw InvariantViolation("smarandache transition entry outside [-1,1]");
                colsum += e;
            }
            if (t.mode == MarkovMode::Strict && colsum != Rational(1))
                throw InvariantViolation("strict transition column sum != 1");
            if (t.mode == MarkovMode::Smarandache &&
                (colsum < Rational(-1) || colsum > Rational(1)))
                throw InvariantViolation("smarandache column sum outside [-1,1]");
        }
    }
}

struct StateBivector {
    Bivector<Rational> x;
};

inline void validate_state(const StateBivector& s, MarkovMode mode) {
    for (const auto* v : {&s.x.first, &s.x.second}) {
        Rational sum(0);
        for (const auto& e : *v) {
            if (mode == MarkovMode::Strict && e.sign() < 0)
                throw InvariantViolation("strict state entry < 0");
            sum += e;
        }
        if (mode == MarkovMode::Strict && sum != Rational(1))
            throw InvariantViolation("strict state sum != 1");
        if (mode == MarkovMode::Smarandache && (sum < Rational(-1) || sum > Rational(1)))
            throw InvariantViolation("smarandache state sum outside [-1,1]");
    }
}

inline StateBivector markov_step(const TransitionBimatrix& t, const StateBivector& s) {
    validate_transition(t);
    if (t.mode == MarkovMode::Strict) validate_state(s, t.mode);
    StateBivector next{bi_apply(RationalField{}, t.p, s.x)};
    if (t.mode == MarkovMode::Strict) validate_state(next, t.mode);
    return next;
}

inline StateBivector markov_iterate(const TransitionBimatrix& t, StateBivector s,
                                    std::size_t steps) {
    validate_transition(t);
    if (t.mode == MarkovMode::Strict) validate_state(s, t.mode);
    RationalField f;
    for (std::size_t i = 0; i < steps; ++i) {
        s.x = bi_apply(f, t.p, s.x);
        if (t.mode == MarkovMode::Strict) validate_state(s, t.mode);
    }
    return s;
}

struct StationaryResult {
    // basis of ker(P - I) per component; vectors rescaled to sum 1 whenever a
    // nonnegative representative exists, else reported raw (primitive form)
    std::vector<Vector<Rational>> first, second;
    std::vector<bool> first_is_probability, second_is_probability;
};

namespace detail {

inline void stationary_component(const Matrix<Rational>& p, std::vector<Vector<Rational>>& out,
                                 std::vector<bool>& flags) {
    RationalField f;
    auto shifted = p;
    for (std::size_t i = 0; i < p.rows(); ++i) shifted(i, i) = shifted(i, i) - Rational(1);
    for (auto v : nullspace_basis(f, shifted)) {
        v = primitive_rescale(v);
        bool nonneg = true, nonpos = true;
        Rational sum(0);
        for (const auto& e : v) {
            if (e.sign() < 0) nonneg = false;
            if (e.sign() > 0) nonpos = false;
            sum += e;
        }
        if (nonpos && !nonneg)
            for (auto& e : v) e = -e;  // flip an all-nonpositive representative
        if ((nonneg || nonpos) && !sum.is_zero()) {
            const Rational scale = (nonpos && !nonneg ? -sum : sum).inverse();
            for (auto& e : v) e = e * scale;
            flags.push_back(true);
        } else {
            flags.push_back(false);
        }
        out.push_back(std::move(v));
    }
}

}  // namespace detail

inline StationaryResult stationary_bivector(const TransitionBimatrix& t) {
    if (t.mode != MarkovMode::Strict)
        throw InvariantViolation("stationary bivectors are defined in strict mode");
    validate_transition(t);
    StationaryResult r;
    detail::stationary_component(t.p.first, r.first, r.first_is_probability);
    detail::stationary_component(t.p.second, r.second, r.second_is_probability);
    return r;
}

/*
 * Leontief closed exchange model: A column-stochastic and nonnegative, solve
 * (I - A)p = 0. When some power A^m (m <= n^2) is entrywise positive the
 * solution ray is unique and can be chosen positive; otherwise the whole
 * basis is returned with a multiplicity warning.
 */
struct ClosedLeontiefResult {
    std::vector<Vector<Rational>> price_basis;
    bool unique_positive = false;
    std::string warning;
};

inline ClosedLeontiefResult leontief_closed_solve(const Matrix<Rational>& a) {
    if (!a.is_square()) throw NotSquare("closed model matrix");
    const std::size_t n = a.rows();
    for (std::size_t j = 0; j < n; ++j) {
        Rational colsum(0);
        for (std::size_t i = 0; i < n; ++i) {
            if (a(i, j).sign() < 0) throw InvariantViolation("exchange matrix entry < 0");
            colsum += a(i, j);
        }
        if (colsum != Rational(1)) throw InvariantViolation("exchange matrix column sum != 1");
    }
    RationalField f;
    auto shifted = mat_sub(f, mat_identity(f, n), a);
    ClosedLeontiefResult out;
    for (auto v : nullspace_basis(f, shifted)) out.price_basis.push_back(primitive_rescale(v));

    bool eventually_positive = false;
    auto power = a;
    for (std::size_t m = 1; m <= n * n && !eventually_positive; ++m) {
        bool all_pos = true;
        for (std::size_t i = 0; i < n && all_pos; ++i)
            for (std::size_t j = 0; j < n && all_pos; ++j)
                if (power(i, j).sign() <= 0) all_pos = false;
        if (all_pos) eventually_positive = true;
        else power = mat_mul(f, power, a);
    }
    if (eventually_positive && out.price_basis.size() == 1) {
        out.unique_positive = true;
        auto& v = out.price_basis.front();
        bool nonpos = true;
        for (const auto& e : v)
            if (e.sign() > 0) nonpos = false;
        if (nonpos)
            for (auto& e : v) e = -e;
    } else {
        out.warning = "A^m never positive for m <= n^2; solution space dimension " +
                      std::to_string(out.price_basis.size());
    }
    return out;
}

/*
 * Leontief open production model: solve (I - C)x = d exactly. C is productive
 * when (I - C)^{-1} exists and is entrywise nonnegative; the classical
 * sufficient conditions (every row sum < 1, every column sum < 1) are
 * reported as flags.
 */
struct OpenLeontiefResult {
    Vector<Rational> production;
    bool productive = false;
    bool row_sums_lt_1 = false;
    bool col_sums_lt_1 = false;
};

inline OpenLeontiefResult leontief_open_solve(const Matrix<Rational>& c,
                                              const Vector<Rational>& d) {
    if (!c.is_square()) throw NotSquare("consumption matrix");
    if (c.rows() != d.size()) throw ShapeMismatch("demand length vs matrix size");
    RationalField f;
    const std::size_t n = c.rows();
    auto system = mat_sub(f, mat_identity(f, n), c);
    auto inv = mat_inverse(f, system);
    if (!inv) throw SingularSystem(mat_rank(f, system), n);
    OpenLeontiefResult out;
    out.production = mat_apply(f, *inv, d);
    out.productive = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if ((*inv)(i, j).sign() < 0) out.productive = false;
    out.row_sums_lt_1 = out.col_sums_lt_1 = true;
    for (std::size_t i = 0; i < n; ++i) {
        Rational rs(0), cs(0);
        for (std::size_t j = 0; j < n; ++j) {
            rs += c(i, j);
            cs += c(j, i);
        }
        if (!(rs < Rational(1))) out.row_sums_lt_1 = false;
        if (!(cs < Rational(1))) out.col_sums_lt_1 = false;
    }
    return out;
}

/*
 * Neutrosophic Leontief bimodel: the consumption bimatrix c = c1 u c2 holds
 * the two study periods. Each period classifies through the split of
 * (I - c_i): productive when both split inverses exist and are nonnegative,
 * non-productive when both exist and both carry a negative entry,
 * indeterminate when exactly one split is singular or the signs disagree
 * between the splits. Both splits singular is an error, not a class.
 */
enum class Productivity { Productive, NonProductive, Indeterminate };

inline std::string productivity_name(Productivity p) {
    switch (p) {
        case Productivity::Productive: return "productive";
        case Productivity::NonProductive: return "non-productive";
        default: return "indeterminate";
    }
}

struct NeutroLeontiefResult {
    Productivity first, second;
    std::string label;  // "X" when equal, "quasi-X/Y" when the periods differ
};

namespace detail {

inline Productivity classify_period(const NeutroMatrix& c, int component) {
    if (!c.is_square()) throw NotSquare("consumption bimatrix component");
    RationalField f;
    const std::size_t n = c.rows();
    auto [c0, c1] = neutro_split_matrix(c);
    auto m0 = mat_sub(f, mat_identity(f, n), c0);
    auto m1 = mat_sub(f, mat_identity(f, n), c1);
    auto inv0 = mat_inverse(f, m0);
    auto inv1 = mat_inverse(f, m1);
    if (!inv0 && !inv1) throw BothSplitsSingular(component);
    if (!inv0 || !inv1) return Productivity::Indeterminate;
    auto nonneg = [](const Matrix<Rational>& m) {
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (m(i, j).sign() < 0) return false;
        return true;
    };
    const bool ok0 = nonneg(*inv0), ok1 = nonneg(*inv1);
    if (ok0 && ok1) return Productivity::Productive;
    if (!ok0 && !ok1) return Productivity::NonProductive;
    return Productivity::Indeterminate;  // the two shadows disagree
}

}  // namespace detail

inline NeutroLeontiefResult neutro_leontief_classify(const NeutroMatrix& c1,
                                                     const NeutroMatrix& c2) {
    NeutroLeontiefResult out{detail::classify_period(c1, 1), detail::classify_period(c2, 2), ""};
    if (out.first == out.second) {
        out.label = productivity_name(out.first);
    } else {
        out.label =
            "quasi-" + productivity_name(out.first) + "/" + productivity_name(out.second);
    }
    return out;
}

}  // namespace bialg

#endif  // BIALG_MODELS_HPP
