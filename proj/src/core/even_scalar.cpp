#include "supergeo/core/even_scalar.hpp"

#include "supergeo/core/errors.hpp"
#include "supergeo/core/variables.hpp"

#include <set>

namespace supergeo {

EvenScalar::EvenScalar(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

EvenScalar EvenScalar::constant(Rational c) {
    return EvenScalar(Polynomial::constant(std::move(c)), Polynomial::constant(1));
}

EvenScalar EvenScalar::variable(int var) {
    return EvenScalar(Polynomial::variable(var), Polynomial::constant(1));
}

void EvenScalar::normalize() {
    if (den_.isZero()) throw DivisionByZeroError("zero denominator");
    if (num_.isZero()) {
        den_ = Polynomial::constant(1);
        return;
    }
    Polynomial g = polyGcd(num_, den_);
    if (!g.isConstant()) {
        num_ = polyDivideExact(num_, g);
        den_ = polyDivideExact(den_, g);
    }
    Rational lc = den_.leadingCoefficient();
    if (lc != 1) {
        Rational inv = Rational(1) / lc;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

bool EvenScalar::isOne() const { return num_ == den_; }

bool EvenScalar::isConstant() const { return num_.isConstant() && den_.isConstant(); }

Rational EvenScalar::constantValue() const {
    if (!isConstant()) throw Error("constantValue() on a non-constant scalar");
    return num_.constantValue() / den_.constantValue();
}

EvenScalar EvenScalar::operator-() const {
    EvenScalar r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

EvenScalar EvenScalar::operator+(const EvenScalar& o) const {
    if (isZero()) return o;
    if (o.isZero()) return *this;
    if (den_ == o.den_) return EvenScalar(num_ + o.num_, den_);
    return EvenScalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

EvenScalar EvenScalar::operator-(const EvenScalar& o) const { return *this + (-o); }

EvenScalar EvenScalar::operator*(const EvenScalar& o) const {
    if (isZero() || o.isZero()) return EvenScalar();
    return EvenScalar(num_ * o.num_, den_ * o.den_);
}

EvenScalar EvenScalar::operator/(const EvenScalar& o) const {
    if (o.isZero()) throw DivisionByZeroError("division by zero scalar");
    if (isZero()) return EvenScalar();
    return EvenScalar(num_ * o.den_, den_ * o.num_);
}

bool EvenScalar::operator<(const EvenScalar& o) const {
    if (num_ != o.num_) return num_ < o.num_;
    return den_ < o.den_;
}

EvenScalar EvenScalar::inverse() const {
    if (isZero()) throw DivisionByZeroError("inverse of zero");
    return EvenScalar(den_, num_);
}

EvenScalar EvenScalar::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    EvenScalar r = EvenScalar::constant(1);
    EvenScalar base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return r;
}

EvenScalar polyDerivative(const Polynomial& p, int coordVar, const VariableTable& vars) {
    std::set<int> occurring;
    for (const auto& [m, c] : p.terms())
        for (const auto& [v, e] : m) occurring.insert(v);
    EvenScalar acc;
    for (int v : occurring) {
        VariableDerivative d = vars.derivativeOf(v, coordVar);
        if (d.kind == VariableDerivative::Kind::Zero) continue;
        Polynomial fp = p.formalPartial(v);
        switch (d.kind) {
            case VariableDerivative::Kind::One:
                acc = acc + EvenScalar(std::move(fp), Polynomial::constant(1));
                break;
            case VariableDerivative::Kind::Variable:
                acc = acc + EvenScalar(fp * Polynomial::variable(d.var), Polynomial::constant(1));
                break;
            case VariableDerivative::Kind::Expression:
                acc = acc + EvenScalar(std::move(fp), Polynomial::constant(1)) * (*d.expr);
                break;
            case VariableDerivative::Kind::Zero:
                break;
        }
    }
    return acc;
}

EvenScalar EvenScalar::derivative(int coordVar, const VariableTable& vars) const {
    // Denominators are monic, so a constant denominator is exactly 1.
    if (den_.isConstant()) return polyDerivative(num_, coordVar, vars);
    EvenScalar a(num_, Polynomial::constant(1));
    EvenScalar b(den_, Polynomial::constant(1));
    EvenScalar da = polyDerivative(num_, coordVar, vars);
    EvenScalar db = polyDerivative(den_, coordVar, vars);
    return (da * b - a * db) / (b * b);
}

namespace {

// A denominator may appear bare after '/': exactly one term, coefficient
// 1, one variable (any power).  Anything else gets parentheses.
bool denNeedsParens(const Polynomial& den) {
    if (den.termCount() != 1) return true;
    const auto& [m, c] = *den.terms().begin();
    return c != 1 || m.size() != 1;
}

}  // namespace

std::string EvenScalar::render(const VariableTable& vars) const {
    std::string num = renderPolynomial(num_, vars);
    if (den_.isConstant()) return num;
    if (num_.termCount() > 1) num = "(" + num + ")";
    std::string den = renderPolynomial(den_, vars);
    if (denNeedsParens(den_)) den = "(" + den + ")";
    return num + "/" + den;
}

}  // namespace supergeo
