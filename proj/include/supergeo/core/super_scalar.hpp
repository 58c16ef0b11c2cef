#pragma once

#include "supergeo/core/chart.hpp"
#include "supergeo/core/even_scalar.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace supergeo {

// A superfunction on a chart: a finite sum of canonical odd monomials
// (bitmasks over the chart's odd generators, bit i = generator i) with
// EvenScalar coefficients.  Zero coefficients are never stored.  The
// default-constructed value is a chart-less universal zero that any
// operation may absorb; mixing two different non-null charts throws.
class SuperScalar {
public:
    using Mask = std::uint64_t;
    using TermMap = std::map<Mask, EvenScalar>;

    SuperScalar() = default;
    static SuperScalar zero(const Chart* chart);
    static SuperScalar constant(const Chart* chart, Rational c);
    static SuperScalar fromEven(const Chart* chart, EvenScalar c);
    static SuperScalar variable(const Chart* chart, int var);
    static SuperScalar oddGenerator(const Chart* chart, int oddIndex);
    static SuperScalar oddMonomial(const Chart* chart, Mask mask, EvenScalar c);

    const Chart* chart() const { return chart_; }
    const TermMap& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    bool isOne() const;

    SuperScalar operator-() const;
    SuperScalar operator+(const SuperScalar& o) const;
    SuperScalar operator-(const SuperScalar& o) const;
    SuperScalar operator*(const SuperScalar& o) const;
    SuperScalar operator*(const Rational& c) const;
    bool operator==(const SuperScalar& o) const;
    bool operator!=(const SuperScalar& o) const { return !(*this == o); }

    SuperScalar pow(int e) const;

    // Parity: 0 even, 1 odd, nullopt when the value mixes both (zero
    // reports even by convention).
    std::optional<int> parity() const;
    bool isHomogeneous() const { return parity().has_value(); }

    // Coefficient of the empty odd monomial (the body map).
    EvenScalar body() const;

    // Parts of even / odd total parity; their sum is the value.
    SuperScalar evenPart() const;
    SuperScalar oddPart() const;

    // Multiplies every odd-parity term by (-1)^p: the sign a parity-p
    // object picks up moving across this value, applied term by term so
    // inhomogeneous values need no splitting.
    SuperScalar signFlipOdd(int p) const;

    // Derivatives.  Even direction is a coordinate variable id; odd
    // direction is the generator index (left derivative).
    SuperScalar derivativeEven(int coordVar) const;
    SuperScalar derivativeOdd(int oddIndex) const;
    SuperScalar derivativeFrame(int fid) const;

    // Multiplicative inverse of an even value with nonzero body, via the
    // finite Neumann series over the nilpotent part.
    SuperScalar invert() const;

    std::string render() const;

private:
    const Chart* unifyChart(const SuperScalar& o) const;
    void insertTerm(Mask m, EvenScalar c);

    const Chart* chart_ = nullptr;
    TermMap terms_;
};

// Sign picked up when multiplying the generator sets a and b into one
// sorted monomial: +1 or -1 (parity of the merge permutation).
int oddMergeSign(SuperScalar::Mask a, SuperScalar::Mask b);

}  // namespace supergeo
