#ifndef BIALG_FUZZY_HPP
#define BIALG_FUZZY_HPP

#include <cstdint>
#include <string>

#include "bialg/errors.hpp"

namespace bialg {

/*
 * Fuzzy-neutrosophic value: either a real grade r in [0,1] or an indeterminate
 * nI with grade n in (0,1]. Grades are exact decimals stored as integers
 * scaled by 10^6, so literals like 0.1 stay exact.
 *
 * min/max follow the integral-set rules: ordinary min/max on reals,
 * min(0,I)=0, max(1,I)=1, and I absorbs otherwise. The rules are only defined
 * for the integral set [0,1] u {I}; a graded indeterminate nI with n < 1 is
 * storable but rejected by min/max.
 */
class Fuzzy {
  public:
    static constexpr std::int64_t kScale = 1000000;

    Fuzzy() : micro_(0), indet_(false) {}

    static Fuzzy real(std::int64_t micro) {
        if (micro < 0 || micro > kScale)
            throw ParseError("fuzzy real grade out of [0,1]");
        return Fuzzy(micro, false);
    }
    static Fuzzy indeterminate(std::int64_t micro = kScale) {
        if (micro <= 0 || micro > kScale)
            throw ParseError("fuzzy indeterminate grade out of (0,1]");
        return Fuzzy(micro, true);
    }

    bool is_indeterminate() const { return indet_; }
    // The unit indeterminate I, the only indeterminate in the integral set.
    bool is_full_indeterminate() const { return indet_ && micro_ == kScale; }
    bool in_integral_set() const { return !indet_ || micro_ == kScale; }
    std::int64_t micro() const { return micro_; }

    bool operator==(const Fuzzy& o) const { return micro_ == o.micro_ && indet_ == o.indet_; }
    bool operator!=(const Fuzzy& o) const { return !(*this == o); }

    std::string to_string() const;

  private:
    Fuzzy(std::int64_t micro, bool indet) : micro_(micro), indet_(indet) {}

    std::int64_t micro_;
    bool indet_;
};

inline void require_integral(const Fuzzy& x) {
    if (!x.in_integral_set()) throw GradedIndeterminateUnsupported();
}

inline Fuzzy fuzzy_min(const Fuzzy& x, const Fuzzy& y) {
    require_integral(x);
    require_integral(y);
    if (x.is_indeterminate() && y.is_indeterminate()) return Fuzzy::indeterminate();
    if (x.is_indeterminate() || y.is_indeterminate()) {
        const Fuzzy& r = x.is_indeterminate() ? y : x;
        return r.micro() == 0 ? Fuzzy::real(0) : Fuzzy::indeterminate();  // min(0,I)=0
    }
    return Fuzzy::real(std::min(x.micro(), y.micro()));
}

inline Fuzzy fuzzy_max(const Fuzzy& x, const Fuzzy& y) {
    require_integral(x);
    require_integral(y);
    if (x.is_indeterminate() && y.is_indeterminate()) return Fuzzy::indeterminate();
    if (x.is_indeterminate() || y.is_indeterminate()) {
        const Fuzzy& r = x.is_indeterminate() ? y : x;
        return r.micro() == Fuzzy::kScale ? Fuzzy::real(Fuzzy::kScale)
                                          : Fuzzy::indeterminate();  // max(1,I)=1
    }
    return Fuzzy::real(std::max(x.micro(), y.micro()));
}

inline std::string Fuzzy::to_string() const {
    std::string grade;
    std::int64_t whole = micro_ / kScale;
    std::int64_t frac = micro_ % kScale;
    if (frac == 0) {
        grade = std::to_string(whole);
    } else {
        std::string digits = std::to_string(frac);
        digits.insert(0, 6 - digits.size(), '0');
        while (digits.back() == '0') digits.pop_back();
        grade = std::to_string(whole) + "." + digits;
    }
    if (!indet_) return grade;
    return micro_ == kScale ? "I" : grade + "I";
}

}  // namespace bialg

#endif  // BIALG_FUZZY_HPP
