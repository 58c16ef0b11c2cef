#include "supergeo/geometry/vector_field.hpp"

#include "supergeo/core/errors.hpp"

namespace supergeo {

VectorField VectorField::zero(const Chart* chart) {
    VectorField v;
    v.chart_ = chart;
    return v;
}

VectorField VectorField::frame(const Chart* chart, int fid) {
    if (!chart || fid < 0 || fid >= chart->frameCount())
        throw Error("frame index out of range");
    VectorField v;
    v.chart_ = chart;
    v.components_.emplace(fid, SuperScalar::constant(chart, 1));
    return v;
}

SuperScalar VectorField::coefficient(int fid) const {
    auto it = components_.find(fid);
    return it == components_.end() ? SuperScalar::zero(chart_) : it->second;
}

void VectorField::setComponent(int fid, SuperScalar value) {
    if (chart_ && value.chart() && value.chart() != chart_)
        throw ChartMismatchError("component belongs to a different chart");
    if (!chart_) chart_ = value.chart();
    if (value.isZero())
        components_.erase(fid);
    else
        components_.insert_or_assign(fid, std::move(value));
}

const Chart* VectorField::unifyChart(const VectorField& o) const {
    if (!chart_) return o.chart_;
    if (!o.chart_) return chart_;
    if (chart_ != o.chart_)
        throw ChartMismatchError("vector fields belong to different charts");
    return chart_;
}

VectorField VectorField::operator-() const {
    VectorField r;
    r.chart_ = chart_;
    for (const auto& [fid, c] : components_) r.components_.emplace(fid, -c);
    return r;
}

VectorField VectorField::operator+(const VectorField& o) const {
    VectorField r;
    r.chart_ = unifyChart(o);
    r.components_ = components_;
    for (const auto& [fid, c] : o.components_) {
        auto it = r.components_.find(fid);
        if (it == r.components_.end()) {
            r.components_.emplace(fid, c);
            continue;
        }
        it->second = it->second + c;
        if (it->second.isZero()) r.components_.erase(it);
    }
    return r;
}

VectorField VectorField::operator-(const VectorField& o) const { return *this + (-o); }

bool VectorField::operator==(const VectorField& o) const {
    if (components_.empty() && o.components_.empty()) return true;
    return chart_ == o.chart_ && components_ == o.components_;
}

std::optional<int> VectorField::parity() const {
    if (components_.empty()) return 0;
    std::optional<int> p;
    for (const auto& [fid, c] : components_) {
        auto cp = c.parity();
        if (!cp) return std::nullopt;
        int total = (*cp + chart_->frameParity(fid)) % 2;
        if (!p)
            p = total;
        else if (*p != total)
            return std::nullopt;
    }
    return p;
}

VectorField VectorField::parityPart(int p) const {
    VectorField r;
    r.chart_ = chart_;
    for (const auto& [fid, c] : components_) {
        // A coefficient term of parity s sits on a component of total
        // parity s + |frame|; keep the part with total parity p.
        int want = (p + chart_->frameParity(fid)) % 2;
        SuperScalar part = want == 0 ? c.evenPart() : c.oddPart();
        if (!part.isZero()) r.components_.emplace(fid, std::move(part));
    }
    return r;
}

SuperScalar VectorField::apply(const SuperScalar& f) const {
    SuperScalar acc = SuperScalar::zero(chart_);
    for (const auto& [fid, c] : components_) acc = acc + c * f.derivativeFrame(fid);
    return acc;
}

std::string VectorField::render() const {
    if (components_.empty()) return "0";
    std::string out;
    for (const auto& [fid, c] : components_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.render() + ") " + chart_->frameDisplay(fid);
    }
    return out;
}

VectorField scalarTimes(const SuperScalar& f, const VectorField& X) {
    VectorField r = VectorField::zero(X.chart() ? X.chart() : f.chart());
    for (const auto& [fid, c] : X.components()) r.setComponent(fid, f * c);
    return r;
}

VectorField timesScalarRight(const VectorField& X, const SuperScalar& f) {
    VectorField r = VectorField::zero(X.chart() ? X.chart() : f.chart());
    for (const auto& [fid, c] : X.components()) {
        int p = X.chart()->frameParity(fid);
        r.setComponent(fid, c * f.signFlipOdd(p));
    }
    return r;
}

namespace {

VectorField lieBracketHomogeneous(const VectorField& X, const VectorField& Y) {
    const Chart* chart = X.chart() ? X.chart() : Y.chart();
    int px = X.parity().value();
    int py = Y.parity().value();
    bool flip = px == 1 && py == 1;
    VectorField r = VectorField::zero(chart);
    if (!chart) return r;
    for (int fid = 0; fid < chart->frameCount(); ++fid) {
        SuperScalar c = X.apply(Y.coefficient(fid)) -
                        (flip ? -Y.apply(X.coefficient(fid)) : Y.apply(X.coefficient(fid)));
        if (!c.isZero()) r.setComponent(fid, std::move(c));
    }
    return r;
}

}  // namespace

VectorField lieBracket(const VectorField& X, const VectorField& Y) {
    VectorField acc = VectorField::zero(X.chart() ? X.chart() : Y.chart());
    for (int px = 0; px < 2; ++px) {
        VectorField Xp = X.parityPart(px);
        if (Xp.isZero()) continue;
        for (int py = 0; py < 2; ++py) {
            VectorField Yp = Y.parityPart(py);
            if (Yp.isZero()) continue;
            acc = acc + lieBracketHomogeneous(Xp, Yp);
        }
    }
    return acc;
}

}  // namespace supergeo
