#pragma once

#include "supergeo/core/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace supergeo {

class VariableTable;

// A monomial is a sorted, duplicate-free list of (variable id, exponent>0)
// pairs.  The empty list is the constant monomial 1.
using Monomial = std::vector<std::pair<int, int>>;

int totalDegree(const Monomial& m);

// Three-way graded-lexicographic comparison: higher total degree first,
// ties broken lexicographically on exponent vectors (lower variable ids
// weigh more).  Returns <0, 0, >0 like strcmp.
int grlexCompare(const Monomial& a, const Monomial& b);

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return grlexCompare(a, b) > 0;
    }
};

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are kept in descending graded-lex order, so begin() is the
// leading term; zero coefficients are never stored.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexGreater>;

    Polynomial() = default;
    static Polynomial constant(Rational c);
    static Polynomial variable(int var);

    bool isZero() const { return terms_.empty(); }
    bool isConstant() const;
    // Constant value of a constant polynomial (zero polynomial gives 0).
    Rational constantValue() const;

    const TermMap& terms() const { return terms_; }
    const Monomial& leadingMonomial() const;
    const Rational& leadingCoefficient() const;
    int totalDegree() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator*(const Rational& c) const;
    bool operator==(const Polynomial& other) const { return terms_ == other.terms_; }
    bool operator!=(const Polynomial& other) const { return !(*this == other); }
    bool operator<(const Polynomial& other) const { return terms_ < other.terms_; }

    Polynomial pow(int e) const;

    // Formal partial derivative with respect to one table variable
    // (exponent rule only; jet chain rule lives in EvenScalar).
    Polynomial formalPartial(int var) const;

    // Degree in one variable and the coefficient of var^k (a polynomial
    // in the remaining variables).  Used by the gcd machinery.
    int degreeIn(int var) const;
    Polynomial coefficientOfPower(int var, int k) const;

    // Largest variable id that occurs, or -1 for constants.
    int mainVariable() const;

    void addTerm(const Monomial& m, const Rational& c);
    std::size_t termCount() const { return terms_.size(); }

private:
    void checkSize() const;
    TermMap terms_;
};

// Greatest common divisor by the primitive polynomial remainder sequence,
// recursing on the coefficient ring.  Result is monic in graded-lex order.
Polynomial polyGcd(const Polynomial& a, const Polynomial& b);

// Exact division: throws Error if b does not divide a.
Polynomial polyDivideExact(const Polynomial& a, const Polynomial& b);

// Pseudo-remainder of a by b viewed as polynomials in `var`.
Polynomial polyPseudoRem(const Polynomial& a, const Polynomial& b, int var);

// Content (gcd of coefficients in `var`) and primitive part.
Polynomial polyContent(const Polynomial& p, int var);
Polynomial polyPrimitivePart(const Polynomial& p, int var);

// Deterministic canonical rendering ("2*x^2*h_x - 1/3").
std::string renderPolynomial(const Polynomial& p, const VariableTable& vars);

// Configured expression-size cap (terms per polynomial), read once from
// the SUPERGEO_MAX_TERMS environment variable.
std::size_t expressionTermCap();

}  // namespace supergeo
