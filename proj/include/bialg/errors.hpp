#ifndef BIALG_ERRORS_HPP
#define BIALG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bialg {

// Base class for every domain error the library raises. The CLI maps these
// to exit code 1; anything else escaping is a bug.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DivisionByZero : public Error {
  public:
    DivisionByZero() : Error("DivisionByZero: division by zero") {}
};

class NotAUnit : public Error {
  public:
    explicit NotAUnit(const std::string& what) : Error("NotAUnit: " + what) {}
};

class NotPrime : public Error {
  public:
    explicit NotPrime(unsigned long long p)
        : Error("NotPrime: modulus " + std::to_string(p) + " is not prime") {}
};

class GradedIndeterminateUnsupported : public Error {
  public:
    GradedIndeterminateUnsupported()
        : Error("GradedIndeterminateUnsupported: min/max with a graded "
                "indeterminate nI (n < 1) is undefined") {}
};

class DivisionByZeroPolynomial : public Error {
  public:
    DivisionByZeroPolynomial()
        : Error("DivisionByZeroPolynomial: polynomial division by zero") {}
};

class ShapeMismatch : public Error {
  public:
    explicit ShapeMismatch(const std::string& what) : Error("ShapeMismatch: " + what) {}
};

class ScalarKindMismatch : public Error {
  public:
    explicit ScalarKindMismatch(const std::string& what)
        : Error("ScalarKindMismatch: " + what) {}
};

class NotSquare : public Error {
  public:
    explicit NotSquare(const std::string& what) : Error("NotSquare: " + what) {}
};

class NotBidiagonalizable : public Error {
  public:
    NotBidiagonalizable(int component, const std::string& eigenvalue)
        : Error("NotBidiagonalizable: component " + std::to_string(component) +
                " defective at eigenvalue " + eigenvalue),
          component_(component), eigenvalue_(eigenvalue) {}
    int component() const { return component_; }
    const std::string& eigenvalue() const { return eigenvalue_; }

  private:
    int component_;
    std::string eigenvalue_;
};

class CharPolyDoesNotSplit : public Error {
  public:
    CharPolyDoesNotSplit(int component, const std::string& factor)
        : Error("CharPolyDoesNotSplit: component " + std::to_string(component) +
                " has rootless factor " + factor),
          component_(component), factor_(factor) {}
    int component() const { return component_; }
    const std::string& factor() const { return factor_; }

  private:
    int component_;
    std::string factor_;
};

class LinearlyDependentInput : public Error {
  public:
    LinearlyDependentInput(std::size_t index, int component)
        : Error("LinearlyDependentInput: vector " + std::to_string(index) +
                " is dependent in component " + std::to_string(component)),
          index_(index), component_(component) {}
    std::size_t index() const { return index_; }
    int component() const { return component_; }

  private:
    std::size_t index_;
    int component_;
};

class ZeroNormEncountered : public Error {
  public:
    ZeroNormEncountered() : Error("ZeroNormEncountered: zero norm during orthogonalization") {}
};

class BasisNotBiorthogonal : public Error {
  public:
    explicit BasisNotBiorthogonal(const std::string& what)
        : Error("BasisNotBiorthogonal: " + what) {}
};

class UnsupportedComponentFamily : public Error {
  public:
    explicit UnsupportedComponentFamily(const std::string& what)
        : Error("UnsupportedComponentFamily: " + what) {}
};

class UnknownFamily : public Error {
  public:
    explicit UnknownFamily(const std::string& what) : Error("UnknownFamily: " + what) {}
};

class RankDeficientParity : public Error {
  public:
    explicit RankDeficientParity(int component)
        : Error("RankDeficientParity: parity component " + std::to_string(component) +
                " is not full row rank") {}
};

class GeneratorDoesNotDivide : public Error {
  public:
    explicit GeneratorDoesNotDivide(int component)
        : Error("GeneratorDoesNotDivide: g" + std::to_string(component) +
                " does not divide x^n - 1") {}
};

class EnumerationTooLarge : public Error {
  public:
    EnumerationTooLarge(unsigned long long size, unsigned long long cap)
        : Error("EnumerationTooLarge: " + std::to_string(size) + " codewords exceed cap " +
                std::to_string(cap)) {}
};

class DecoderExhausted : public Error {
  public:
    explicit DecoderExhausted(int component)
        : Error("DecoderExhausted: every basis in the policy gave a zero projection for "
                "component " +
                std::to_string(component)) {}
};

class InvariantViolation : public Error {
  public:
    explicit InvariantViolation(const std::string& what)
        : Error("InvariantViolation: " + what) {}
};

class SingularSystem : public Error {
  public:
    SingularSystem(std::size_t rank, std::size_t size)
        : Error("SingularSystem: I - C is singular (rank " + std::to_string(rank) + " of " +
                std::to_string(size) + ")"),
          rank_(rank) {}
    std::size_t rank() const { return rank_; }

  private:
    std::size_t rank_;
};

class BothSplitsSingular : public Error {
  public:
    explicit BothSplitsSingular(int component)
        : Error("BothSplitsSingular: component " + std::to_string(component) +
                " has both split matrices singular") {}
};

class ParseError : public Error {
  public:
    explicit ParseError(const std::string& what) : Error("ParseError: " + what) {}
};

}  // namespace bialg

#endif  // BIALG_ERRORS_HPP
