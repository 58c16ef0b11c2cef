#include "supergeo/core/polynomial.hpp"

#include "supergeo/core/errors.hpp"
#include "supergeo/core/variables.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace supergeo {

int totalDegree(const Monomial& m) {
    int d = 0;
    for (const auto& [var, exp] : m) d += exp;
    return d;
}

int grlexCompare(const Monomial& a, const Monomial& b) {
    int da = totalDegree(a), db = totalDegree(b);
    if (da != db) return da < db ? -1 : 1;
    // Same degree: lexicographic, smaller variable ids first; a higher
    // exponent on the earliest differing variable wins.
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first != b[j].first) {
            // The monomial owning the smaller variable id is larger.
            return a[i].first < b[j].first ? 1 : -1;
        }
        if (a[i].second != b[j].second) return a[i].second < b[j].second ? -1 : 1;
        ++i;
        ++j;
    }
    if (i < a.size()) return 1;
    if (j < b.size()) return -1;
    return 0;
}

std::size_t expressionTermCap() {
    static const std::size_t cap = [] {
        if (const char* env = std::getenv("SUPERGEO_MAX_TERMS")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        }
        return static_cast<std::size_t>(100000);
    }();
    return cap;
}

void Polynomial::checkSize() const {
    if (terms_.size() > expressionTermCap())
        throw ExpressionTooLargeError(terms_.size(), expressionTermCap());
}

Polynomial Polynomial::constant(Rational c) {
    Polynomial p;
    if (c != 0) p.terms_.emplace(Monomial{}, std::move(c));
    return p;
}

Polynomial Polynomial::variable(int var) {
    Polynomial p;
    p.terms_.emplace(Monomial{{var, 1}}, Rational(1));
    return p;
}

bool Polynomial::isConstant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Polynomial::constantValue() const {
    if (terms_.empty()) return Rational(0);
    if (!isConstant()) throw Error("constantValue() on a non-constant polynomial");
    return terms_.begin()->second;
}

const Monomial& Polynomial::leadingMonomial() const {
    if (terms_.empty()) throw Error("leading term of the zero polynomial");
    return terms_.begin()->first;
}

const Rational& Polynomial::leadingCoefficient() const {
    if (terms_.empty()) throw Error("leading term of the zero polynomial");
    return terms_.begin()->second;
}

int Polynomial::totalDegree() const {
    return terms_.empty() ? -1 : supergeo::totalDegree(terms_.begin()->first);
}

void Polynomial::addTerm(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    checkSize();
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    Polynomial r = *this;
    for (const auto& [m, c] : other.terms_) r.addTerm(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    Polynomial r = *this;
    for (const auto& [m, c] : other.terms_) r.addTerm(m, -c);
    return r;
}

namespace {

Monomial mulMonomials(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first == b[j].first) {
            r.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        } else if (a[i].first < b[j].first) {
            r.push_back(a[i++]);
        } else {
            r.push_back(b[j++]);
        }
    }
    for (; i < a.size(); ++i) r.push_back(a[i]);
    for (; j < b.size(); ++j) r.push_back(b[j]);
    return r;
}

}  // namespace

Polynomial Polynomial::operator*(const Polynomial& other) const {
    Polynomial r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_) r.addTerm(mulMonomials(ma, mb), ca * cb);
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    if (c == 0) return Polynomial();
    Polynomial r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw Error("negative exponent on a bare polynomial");
    Polynomial r = Polynomial::constant(1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return r;
}

Polynomial Polynomial::formalPartial(int var) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        for (std::size_t k = 0; k < m.size(); ++k) {
            if (m[k].first != var) continue;
            Monomial dm = m;
            Rational dc = c * m[k].second;
            if (m[k].second == 1)
                dm.erase(dm.begin() + static_cast<long>(k));
            else
                dm[k].second -= 1;
            r.addTerm(dm, dc);
            break;
        }
    }
    return r;
}

int Polynomial::degreeIn(int var) const {
    int d = 0;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m)
            if (v == var) d = std::max(d, e);
    return d;
}

Polynomial Polynomial::coefficientOfPower(int var, int k) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        int e = 0;
        Monomial rest;
        for (const auto& [v, x] : m) {
            if (v == var)
                e = x;
            else
                rest.emplace_back(v, x);
        }
        if (e == k) r.addTerm(rest, c);
    }
    return r;
}

int Polynomial::mainVariable() const {
    int best = -1;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m) best = std::max(best, v);
    return best;
}

namespace {

std::vector<Polynomial> decompose(const Polynomial& p, int var) {
    std::vector<Polynomial> coeffs(static_cast<std::size_t>(p.degreeIn(var)) + 1);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        coeffs[k] = p.coefficientOfPower(var, static_cast<int>(k));
    return coeffs;
}

Polynomial makeMonic(const Polynomial& p) {
    if (p.isZero()) return p;
    return p * (Rational(1) / p.leadingCoefficient());
}

}  // namespace

Polynomial polyPseudoRem(const Polynomial& a, const Polynomial& b, int var) {
    if (b.isZero()) throw Error("pseudo-remainder by zero");
    int db = b.degreeIn(var);
    Polynomial lb = b.coefficientOfPower(var, db);
    Polynomial r = a;
    int dr = r.degreeIn(var);
    while (!r.isZero() && dr >= db) {
        Polynomial lr = r.coefficientOfPower(var, dr);
        Polynomial shift = Polynomial::variable(var).pow(dr - db);
        // Leading terms in `var` cancel exactly, so the degree strictly drops.
        r = r * lb - lr * shift * b;
        int next = r.degreeIn(var);
        if (!r.isZero() && next >= dr) throw Error("pseudo-remainder failed to reduce degree");
        dr = next;
    }
    return r;
}

Polynomial polyContent(const Polynomial& p, int var) {
    Polynomial g;
    for (const Polynomial& c : decompose(p, var)) {
        if (c.isZero()) continue;
        g = polyGcd(g, c);
        if (g.isConstant() && !g.isZero()) return Polynomial::constant(1);
    }
    return g.isZero() ? Polynomial() : g;
}

Polynomial polyPrimitivePart(const Polynomial& p, int var) {
    if (p.isZero()) return p;
    Polynomial c = polyContent(p, var);
    return polyDivideExact(p, c);
}

Polynomial polyGcd(const Polynomial& a, const Polynomial& b) {
    if (a.isZero()) return makeMonic(b);
    if (b.isZero()) return makeMonic(a);
    if (a.isConstant() || b.isConstant()) return Polynomial::constant(1);
    int var = std::max(a.mainVariable(), b.mainVariable());
    int da = a.degreeIn(var), db = b.degreeIn(var);
    if (da == 0) return polyGcd(a, polyContent(b, var));
    if (db == 0) return polyGcd(polyContent(a, var), b);

    Polynomial ca = polyContent(a, var), cb = polyContent(b, var);
    Polynomial c = polyGcd(ca, cb);
    Polynomial pa = polyDivideExact(a, ca), pb = polyDivideExact(b, cb);
    if (da < db) std::swap(pa, pb);
    while (true) {
        Polynomial r = polyPseudoRem(pa, pb, var);
        if (r.isZero()) return makeMonic(c * polyPrimitivePart(pb, var));
        if (r.degreeIn(var) == 0) return makeMonic(c);
        pa = pb;
        pb = polyPrimitivePart(r, var);
    }
}

Polynomial polyDivideExact(const Polynomial& a, const Polynomial& b) {
    if (b.isZero()) throw Error("exact division by zero polynomial");
    Polynomial q, r = a;
    const Monomial& lmB = b.leadingMonomial();
    const Rational& lcB = b.leadingCoefficient();
    while (!r.isZero()) {
        const Monomial& lmR = r.leadingMonomial();
        // lmR must be divisible by lmB.
        Monomial quot;
        std::size_t i = 0;
        bool divisible = true;
        for (const auto& [v, e] : lmB) {
            while (i < lmR.size() && lmR[i].first < v) {
                quot.push_back(lmR[i]);
                ++i;
            }
            if (i >= lmR.size() || lmR[i].first != v || lmR[i].second < e) {
                divisible = false;
                break;
            }
            if (lmR[i].second > e) quot.emplace_back(v, lmR[i].second - e);
            ++i;
        }
        if (divisible)
            for (; i < lmR.size(); ++i) quot.push_back(lmR[i]);
        if (!divisible) throw Error("exact polynomial division left a remainder");
        Rational qc = r.leadingCoefficient() / lcB;
        Polynomial t;
        t.addTerm(quot, qc);
        q = q + t;
        r = r - t * b;
    }
    return q;
}

std::string renderPolynomial(const Polynomial& p, const VariableTable& vars) {
    if (p.isZero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational ac = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::string factors;
        for (const auto& [v, e] : m) {
            if (!factors.empty()) factors += "*";
            factors += vars.nameOf(v);
            if (e > 1) factors += "^" + std::to_string(e);
        }
        if (factors.empty()) {
            out << toString(ac);
        } else if (ac == 1) {
            out << factors;
        } else {
            out << toString(ac) << "*" << factors;
        }
    }
    return out.str();
}

}  // namespace supergeo
