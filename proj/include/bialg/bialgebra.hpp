#ifndef BIALG_BIALGEBRA_HPP
#define BIALG_BIALGEBRA_HPP

#include <cstddef>
#include <string>

#include "bialg/errors.hpp"

namespace bialg {

/*
 * Validation predicate for the bialgebra hierarchy: a bivector space whose
 * components are both closed under an internal product is a linear bialgebra;
 * exactly one closed component gives a semi linear bialgebra; neither leaves
 * a plain bivector space.
 */
struct ComponentFamily {
    enum class Kind { RowSpace, SquareMatrices, RectMatrices, BoundedPolynomials, FullPolynomials };
    Kind kind;
    std::size_t m = 0;  // RowSpace n / SquareMatrices n / RectMatrices rows / polys degree bound
    std::size_t n = 0;  // RectMatrices cols

    static ComponentFamily row_space(std::size_t dim) { return {Kind::RowSpace, dim, 0}; }
    static ComponentFamily square_matrices(std::size_t size) {
        return {Kind::SquareMatrices, size, 0};
    }
    static ComponentFamily rect_matrices(std::size_t rows, std::size_t cols) {
        return {Kind::RectMatrices, rows, cols};
    }
    static ComponentFamily bounded_polynomials(std::size_t degree) {
        return {Kind::BoundedPolynomials, degree, 0};
    }
    static ComponentFamily full_polynomials() { return {Kind::FullPolynomials, 0, 0}; }

    bool product_closed() const {
        switch (kind) {
            case Kind::RowSpace: return true;          // coordinatewise product
            case Kind::SquareMatrices: return true;    // matrix product
            case Kind::RectMatrices: return m == n;
            case Kind::BoundedPolynomials: return m == 0;  // constants only
            case Kind::FullPolynomials: return true;
        }
        throw UnknownFamily("unhandled component family");
    }

    std::string describe() const {
        switch (kind) {
            case Kind::RowSpace: return "F^" + std::to_string(m);
            case Kind::SquareMatrices:
                return std::to_string(m) + "x" + std::to_string(m) + " matrices";
            case Kind::RectMatrices:
                return std::to_string(m) + "x" + std::to_string(n) + " matrices";
            case Kind::BoundedPolynomials: return "polynomials of degree <= " + std::to_string(m);
            case Kind::FullPolynomials: return "polynomials";
        }
        throw UnknownFamily("unhandled component family");
    }
};

enum class BialgebraClass { LinearBialgebra, SemiLinearBialgebra, BivectorSpace };

inline std::string bialgebra_class_name(BialgebraClass c) {
    switch (c) {
        case BialgebraClass::LinearBialgebra: return "linear bialgebra";
        case BialgebraClass::SemiLinearBialgebra: return "semi linear bialgebra";
        default: return "bivector space";
    }
}

inline BialgebraClass validate_linear_bialgebra(const ComponentFamily& first,
                                                const ComponentFamily& second) {
    const int closed = int(first.product_closed()) + int(second.product_closed());
    if (closed == 2) return BialgebraClass::LinearBialgebra;
    if (closed == 1) return BialgebraClass::SemiLinearBialgebra;
    return BialgebraClass::BivectorSpace;
}

}  // namespace bialg

#endif  // BIALG_BIALGEBRA_HPP
