#include "supergeo/core/super_scalar.hpp"

#include "supergeo/core/errors.hpp"

#include <bit>

namespace supergeo {

int oddMergeSign(SuperScalar::Mask a, SuperScalar::Mask b) {
    // Concatenating the sorted generator lists of a and b and resorting
    // costs one transposition per pair (i, j) with i in a, j in b, i > j.
    int inversions = 0;
    while (b) {
        int j = std::countr_zero(b);
        inversions += std::popcount(a >> (j + 1));
        b &= b - 1;
    }
    return inversions % 2 == 0 ? 1 : -1;
}

SuperScalar SuperScalar::zero(const Chart* chart) {
    SuperScalar s;
    s.chart_ = chart;
    return s;
}

SuperScalar SuperScalar::constant(const Chart* chart, Rational c) {
    return fromEven(chart, EvenScalar::constant(std::move(c)));
}

SuperScalar SuperScalar::fromEven(const Chart* chart, EvenScalar c) {
    SuperScalar s;
    s.chart_ = chart;
    if (!c.isZero()) s.terms_.emplace(Mask{0}, std::move(c));
    return s;
}

SuperScalar SuperScalar::variable(const Chart* chart, int var) {
    return fromEven(chart, EvenScalar::variable(var));
}

SuperScalar SuperScalar::oddGenerator(const Chart* chart, int oddIndex) {
    if (!chart || oddIndex < 0 || oddIndex >= chart->oddCount())
        throw Error("odd generator index out of range");
    SuperScalar s;
    s.chart_ = chart;
    s.terms_.emplace(Mask{1} << oddIndex, EvenScalar::constant(1));
    return s;
}

SuperScalar SuperScalar::oddMonomial(const Chart* chart, Mask mask, EvenScalar c) {
    SuperScalar s;
    s.chart_ = chart;
    if (!c.isZero()) s.terms_.emplace(mask, std::move(c));
    return s;
}

bool SuperScalar::isOne() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.isOne();
}

const Chart* SuperScalar::unifyChart(const SuperScalar& o) const {
    if (!chart_) return o.chart_;
    if (!o.chart_) return chart_;
    if (chart_ != o.chart_)
        throw ChartMismatchError("operands belong to different charts");
    return chart_;
}

void SuperScalar::insertTerm(Mask m, EvenScalar c) {
    if (c.isZero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, std::move(c));
        return;
    }
    it->second = it->second + c;
    if (it->second.isZero()) terms_.erase(it);
}

SuperScalar SuperScalar::operator-() const {
    SuperScalar r;
    r.chart_ = chart_;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

SuperScalar SuperScalar::operator+(const SuperScalar& o) const {
    SuperScalar r;
    r.chart_ = unifyChart(o);
    r.terms_ = terms_;
    for (const auto& [m, c] : o.terms_) r.insertTerm(m, c);
    return r;
}

SuperScalar SuperScalar::operator-(const SuperScalar& o) const {
    SuperScalar r;
    r.chart_ = unifyChart(o);
    r.terms_ = terms_;
    for (const auto& [m, c] : o.terms_) r.insertTerm(m, -c);
    return r;
}

SuperScalar SuperScalar::operator*(const SuperScalar& o) const {
    SuperScalar r;
    r.chart_ = unifyChart(o);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            if (ma & mb) continue;  // repeated generator squares to zero
            EvenScalar c = ca * cb;
            if (oddMergeSign(ma, mb) < 0) c = -c;
            r.insertTerm(ma | mb, std::move(c));
        }
    }
    return r;
}

SuperScalar SuperScalar::operator*(const Rational& c) const {
    if (c == 0) return zero(chart_);
    SuperScalar r;
    r.chart_ = chart_;
    EvenScalar k = EvenScalar::constant(c);
    for (const auto& [m, x] : terms_) r.terms_.emplace(m, x * k);
    return r;
}

bool SuperScalar::operator==(const SuperScalar& o) const {
    if (terms_.empty() && o.terms_.empty()) return true;
    return chart_ == o.chart_ && terms_ == o.terms_;
}

SuperScalar SuperScalar::pow(int e) const {
    if (e < 0) return invert().pow(-e);
    SuperScalar r = constant(chart_, 1);
    SuperScalar base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return r;
}

std::optional<int> SuperScalar::parity() const {
    if (terms_.empty()) return 0;
    int p = std::popcount(terms_.begin()->first) % 2;
    for (const auto& [m, c] : terms_)
        if (std::popcount(m) % 2 != p) return std::nullopt;
    return p;
}

EvenScalar SuperScalar::body() const {
    auto it = terms_.find(Mask{0});
    return it == terms_.end() ? EvenScalar() : it->second;
}

SuperScalar SuperScalar::evenPart() const {
    SuperScalar r;
    r.chart_ = chart_;
    for (const auto& [m, c] : terms_)
        if (std::popcount(m) % 2 == 0) r.terms_.emplace(m, c);
    return r;
}

SuperScalar SuperScalar::oddPart() const {
    SuperScalar r;
    r.chart_ = chart_;
    for (const auto& [m, c] : terms_)
        if (std::popcount(m) % 2 == 1) r.terms_.emplace(m, c);
    return r;
}

SuperScalar SuperScalar::signFlipOdd(int p) const {
    if (p % 2 == 0) return *this;
    SuperScalar r;
    r.chart_ = chart_;
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, std::popcount(m) % 2 == 1 ? -c : c);
    return r;
}

SuperScalar SuperScalar::derivativeEven(int coordVar) const {
    if (!chart_) return *this;
    SuperScalar r;
    r.chart_ = chart_;
    const VariableTable& vars = chart_->vars();
    for (const auto& [m, c] : terms_) r.insertTerm(m, c.derivative(coordVar, vars));
    return r;
}

SuperScalar SuperScalar::derivativeOdd(int oddIndex) const {
    SuperScalar r;
    r.chart_ = chart_;
    const Mask bit = Mask{1} << oddIndex;
    const Mask before = bit - 1;
    for (const auto& [m, c] : terms_) {
        if (!(m & bit)) continue;
        // Left derivative: move the generator to the front first.
        bool flip = std::popcount(m & before) % 2 == 1;
        r.insertTerm(m & ~bit, flip ? -c : c);
    }
    return r;
}

SuperScalar SuperScalar::derivativeFrame(int fid) const {
    if (!chart_) return *this;
    const FrameInfo& f = chart_->frame(fid);
    return f.odd ? derivativeOdd(f.index) : derivativeEven(chart_->evenVariable(f.index));
}

SuperScalar SuperScalar::invert() const {
    EvenScalar b = body();
    if (b.isZero())
        throw NotInvertibleError("value has zero body and cannot be inverted");
    SuperScalar binv = fromEven(chart_, b.inverse());
    SuperScalar x = -(binv * (*this - fromEven(chart_, b)));
    SuperScalar acc = constant(chart_, 1);
    SuperScalar t = constant(chart_, 1);
    int rounds = chart_ ? chart_->oddCount() : 0;
    for (int k = 0; k < rounds; ++k) {
        t = t * x;
        if (t.isZero()) break;
        acc = acc + t;
    }
    return acc * binv;
}

std::string SuperScalar::render() const {
    if (terms_.empty()) return "0";
    const VariableTable& vars = chart_->vars();
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string gens;
        for (Mask rest = m; rest;) {
            int i = std::countr_zero(rest);
            rest &= rest - 1;
            if (!gens.empty()) gens += "*";
            gens += chart_->oddName(i);
        }
        std::string cs = c.render(vars);
        bool negative = false;
        if (cs.size() > 1 && cs[0] == '-' && c.numerator().termCount() == 1) {
            negative = true;
            cs = cs.substr(1);
        }
        std::string body;
        if (gens.empty()) {
            body = cs;
        } else if (cs == "1") {
            body = gens;
        } else {
            if (c.numerator().termCount() > 1) cs = "(" + cs + ")";
            body = cs + "*" + gens;
        }
        if (first) {
            out = negative ? "-" + body : body;
            first = false;
        } else {
            out += negative ? " - " + body : " + " + body;
        }
    }
    return out;
}

}  // namespace supergeo
