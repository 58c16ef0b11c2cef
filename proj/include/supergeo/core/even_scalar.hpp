#pragma once

#include "supergeo/core/polynomial.hpp"
#include "supergeo/core/rational.hpp"

#include <string>

namespace supergeo {

class VariableTable;

// Canonical fraction of polynomials over the rationals: numerator and
// denominator are coprime and the denominator is monic under graded-lex
// order (and equals 1 when the numerator is zero).  Equality of values
// is therefore equality of representations.
class EvenScalar {
public:
    EvenScalar() : num_(), den_(Polynomial::constant(1)) {}
    EvenScalar(Polynomial num, Polynomial den);

    static EvenScalar constant(Rational c);
    static EvenScalar variable(int var);

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }

    bool isZero() const { return num_.isZero(); }
    bool isOne() const;
    bool isConstant() const;
    Rational constantValue() const;

    EvenScalar operator-() const;
    EvenScalar operator+(const EvenScalar& o) const;
    EvenScalar operator-(const EvenScalar& o) const;
    EvenScalar operator*(const EvenScalar& o) const;
    EvenScalar operator/(const EvenScalar& o) const;  // throws DivisionByZeroError
    bool operator==(const EvenScalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const EvenScalar& o) const { return !(*this == o); }
    bool operator<(const EvenScalar& o) const;

    // Multiplicative inverse; throws DivisionByZeroError on zero.
    EvenScalar inverse() const;
    // Integer powers, negative allowed for nonzero values.
    EvenScalar pow(int e) const;

    // Derivative along an even coordinate, with the chain rule routed
    // through the variable table (jet creation / registered derivatives).
    EvenScalar derivative(int coordVar, const VariableTable& vars) const;

    std::string render(const VariableTable& vars) const;

private:
    void normalize();
    Polynomial num_;
    Polynomial den_;
};

// Derivative of a bare polynomial along an even coordinate; the result is
// rational whenever a registered symbol derivative is rational.
EvenScalar polyDerivative(const Polynomial& p, int coordVar, const VariableTable& vars);

}  // namespace supergeo
