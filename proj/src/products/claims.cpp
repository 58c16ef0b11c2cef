#include "supergeo/core/errors.hpp"
#include "supergeo/products/twisted_product.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace supergeo {

namespace {

struct ClaimInfo {
    ClaimId id;
    const char* name;
    ClaimTier tier;
    std::vector<int> signature;  // factor per frame slot
};

const std::vector<ClaimInfo>& claimTable() {
    static const std::vector<ClaimInfo> table = {
        {ClaimId::L311, "L3.1.1", ClaimTier::MustPass, {1, 1}},
        {ClaimId::L312, "L3.1.2", ClaimTier::MustPass, {1, 2}},
        {ClaimId::L313, "L3.1.3", ClaimTier::MustPass, {2, 1}},
        {ClaimId::L314, "L3.1.4", ClaimTier::MustPass, {2, 2}},
        {ClaimId::P321, "P3.2.1", ClaimTier::MustPass, {1, 1, 1}},
        {ClaimId::P322, "P3.2.2", ClaimTier::MustPass, {2, 1, 1}},
        {ClaimId::P323, "P3.2.3", ClaimTier::MustPass, {1, 1, 2}},
        {ClaimId::P324, "P3.2.4", ClaimTier::MustPass, {2, 2, 1}},
        {ClaimId::P325, "P3.2.5", ClaimTier::MustPass, {1, 2, 2}},
        {ClaimId::P326, "P3.2.6", ClaimTier::MustPass, {2, 2, 2}},
        {ClaimId::P331, "P3.3.1", ClaimTier::MustPass, {1, 1}},
        {ClaimId::P332, "P3.3.2", ClaimTier::MustPass, {1, 2}},
        {ClaimId::P333, "P3.3.3", ClaimTier::MustPass, {2, 1}},
        {ClaimId::P334, "P3.3.4", ClaimTier::MustPass, {2, 2}},
        {ClaimId::T341, "T3.4.1", ClaimTier::MustPass, {1, 1, 1}},
        {ClaimId::T342, "T3.4.2", ClaimTier::MustPass, {1, 1, 2}},
        {ClaimId::T343, "T3.4.3", ClaimTier::Report, {2, 2, 1}},
        {ClaimId::T344, "T3.4.4", ClaimTier::Report, {1, 2, 1}},
        {ClaimId::T345, "T3.4.5", ClaimTier::Report, {1, 2, 2}},
        {ClaimId::T346, "T3.4.6", ClaimTier::Report, {2, 2, 2}},
        {ClaimId::T42, "T4.2", ClaimTier::MustPass, {}},
        {ClaimId::C44, "C4.4", ClaimTier::MustPass, {}},
    };
    return table;
}

const ClaimInfo& info(ClaimId id) {
    for (const auto& row : claimTable())
        if (row.id == id) return row;
    throw Error("internal: unknown claim id");
}

VectorField signed_(int exponent, VectorField v) { return exponent % 2 ? -v : v; }
SuperScalar signed_(int exponent, SuperScalar s) { return exponent % 2 ? -s : s; }

}  // namespace

const std::vector<ClaimId>& allClaims() {
    static const std::vector<ClaimId> ids = [] {
        std::vector<ClaimId> v;
        for (const auto& row : claimTable()) v.push_back(row.id);
        return v;
    }();
    return ids;
}

std::string claimName(ClaimId id) { return info(id).name; }

std::optional<ClaimId> parseClaimId(const std::string& name) {
    if (name == "T4.3") return ClaimId::C44;
    for (const auto& row : claimTable())
        if (name == row.name) return row.id;
    return std::nullopt;
}

ClaimTier claimTier(ClaimId id) { return info(id).tier; }

const std::vector<int>& claimSignature(ClaimId id) { return info(id).signature; }

ClaimValue ClaimValue::vector(VectorField v) {
    ClaimValue cv;
    cv.vectorValued = true;
    cv.vec = std::move(v);
    return cv;
}

ClaimValue ClaimValue::scalar(SuperScalar s) {
    ClaimValue cv;
    cv.vectorValued = false;
    cv.scal = std::move(s);
    return cv;
}

bool ClaimValue::isZero() const { return vectorValued ? vec.isZero() : scal.isZero(); }

ClaimValue ClaimValue::operator-(const ClaimValue& o) const {
    if (vectorValued != o.vectorValued) throw Error("internal: mixed claim value kinds");
    return vectorValued ? vector(vec - o.vec) : scalar(scal - o.scal);
}

std::string ClaimValue::render() const { return vectorValued ? vec.render() : scal.render(); }

ProductContext::ProductContext(TwistedProductSpec spec) : spec_(std::move(spec)) {
    hInv_ = spec_.twist.invert();
    product_ = std::make_unique<Geometry>(buildTwistedMetric(spec_));
    factor1_ = std::make_unique<Geometry>(spec_.m1.metric);
    factor2_ = std::make_unique<Geometry>(spec_.m2.metric);
}

VectorField ProductContext::unit(int fid) const {
    return VectorField::frame(spec_.chart.get(), fid);
}

SuperScalar ProductContext::lnhDerivative(int fid) const {
    return spec_.twist.derivativeFrame(fid) * hInv_;
}

SuperScalar ProductContext::lnhSecond(int fidFirst, int fidSecond) const {
    return lnhDerivative(fidFirst).derivativeFrame(fidSecond);
}

ClaimValue ProductContext::closedForm(ClaimId claim, const std::vector<int>& frames) const {
    const std::vector<int>& sig = claimSignature(claim);
    if (frames.size() != sig.size())
        throw Error("claim " + claimName(claim) + " takes " + std::to_string(sig.size()) +
                    " frame arguments");
    for (std::size_t i = 0; i < sig.size(); ++i) {
        const std::vector<int>& own =
            sig[i] == 1 ? spec_.m1.frames : spec_.m2.frames;
        if (std::find(own.begin(), own.end(), frames[i]) == own.end())
            throw Error("claim " + claimName(claim) + ": frame argument " +
                        std::to_string(i + 1) + " must come from factor " +
                        std::to_string(sig[i]));
    }

    const Geometry& g1 = *factor1_;
    const Geometry& g2m = *factor2_;
    const SuperScalar& h = spec_.twist;
    const Chart& chart = *spec_.chart;
    auto p = [&](int fid) { return chart.frameParity(fid); };
    auto u = [&](std::size_t i) { return unit(frames[i]); };
    auto gmu = [&](int a, int b) { return product_->metric().apply(unit(a), unit(b)); };
    auto g2 = [&](int a, int b) { return spec_.m2.metric.apply(unit(a), unit(b)); };
    auto lnh = [&](int fid) { return lnhDerivative(fid); };
    auto lnh2 = [&](int first, int second) { return lnhSecond(first, second); };
    // Statement denominators: graded dimensions of the product and the
    // factors, shifted by one.
    int mn1 = productDimension() - 1;
    auto needMn1 = [&] {
        if (mn1 == 0)
            throw UndefinedDenominatorError("statement divides by m - n - 1 = 0");
    };
    Rational qm2(qMinusM2());
    Rational qm21(qMinusM2() - 1);

    switch (claim) {
        case ClaimId::L311:
            return ClaimValue::vector(g1.covariantDerivative(u(0), u(1)));
        case ClaimId::L312:
            return ClaimValue::vector(scalarTimes(lnh(frames[0]), u(1)));
        case ClaimId::L313:
            return ClaimValue::vector(
                signed_(p(frames[0]) * p(frames[1]), scalarTimes(lnh(frames[1]), u(0))));
        case ClaimId::L314: {
            int pu = p(frames[0]), pw = p(frames[1]);
            SuperScalar guw = g2(frames[0], frames[1]);
            VectorField r = scalarTimes(lnh(frames[0]), u(1));
            r = r + signed_(pu * pw, scalarTimes(lnh(frames[1]), u(0)));
            r = r - scalarTimes(guw * hInv_, g2m.gradient(h));
            r = r - scalarTimes(h * guw, g1.gradient(h));
            r = r + g2m.covariantDerivative(u(0), u(1));
            return ClaimValue::vector(r);
        }
        case ClaimId::P321:
            return ClaimValue::vector(g1.curvature(u(0), u(1), u(2)));
        case ClaimId::P322: {
            int pv = p(frames[0]), px = p(frames[1]), py = p(frames[2]);
            SuperScalar hess = g1.hessian(h, u(1), u(2));
            return ClaimValue::vector(
                signed_(1 + pv * (px + py), scalarTimes(hess * hInv_, u(0))));
        }
        case ClaimId::P323:
            return ClaimValue::vector(VectorField::zero(spec_.chart.get()));
        case ClaimId::P324: {
            int pv = p(frames[0]), pw = p(frames[1]), px = p(frames[2]);
            VectorField r =
                signed_(pw * px, scalarTimes(lnh2(frames[2], frames[0]), u(1)));
            r = r - signed_(pv * (pw + px),
                            scalarTimes(lnh2(frames[2], frames[1]), u(0)));
            return ClaimValue::vector(r);
        }
        case ClaimId::P325: {
            int px = p(frames[0]), pv = p(frames[1]), pw = p(frames[2]);
            VectorField r = signed_((px + pv) * pw,
                                    scalarTimes(lnh2(frames[0], frames[2]), u(1)));
            r = r - signed_(px * (pv + pw) + pv * pw,
                            scalarTimes(g2(frames[2], frames[1]),
                                        g2m.gradient(lnh(frames[0]))));
            r = r - signed_(px * (pv + pw),
                            scalarTimes(gmu(frames[1], frames[2]) * hInv_,
                                        g1.covariantDerivative(u(0), g1.gradient(h))));
            return ClaimValue::vector(r);
        }
        case ClaimId::P326: {
            int pv = p(frames[0]), pw = p(frames[1]), pu = p(frames[2]);
            SuperScalar gradH = g1.gradient(h).apply(h) * hInv_ * hInv_;
            VectorField r = g2m.curvature(u(0), u(1), u(2));
            r = r + signed_(pu * pw, scalarTimes(gmu(frames[0], frames[2]),
                                                 g1.gradient(lnh(frames[1]))));
            r = r - signed_((pu + pw) * pv, scalarTimes(gmu(frames[1], frames[2]),
                                                        g1.gradient(lnh(frames[0]))));
            r = r - signed_(pv * (pw + pu),
                            scalarTimes(gradH * g2(frames[1], frames[2]), u(0)));
            r = r + signed_(pw * pu,
                            scalarTimes(gradH * g2(frames[0], frames[2]), u(1)));
            return ClaimValue::vector(r);
        }
        case ClaimId::P331: {
            SuperScalar hess = g1.hessian(h, u(0), u(1));
            return ClaimValue::scalar(g1.ricci(u(0), u(1)) - hess * hInv_ * qm2);
        }
        case ClaimId::P332: {
            int px = p(frames[0]), pv = p(frames[1]);
            return ClaimValue::scalar(
                signed_(1 + px * pv, lnh2(frames[0], frames[1]) * qm21));
        }
        case ClaimId::P333:
            return ClaimValue::scalar(-(lnh2(frames[1], frames[0]) * qm21));
        case ClaimId::P334: {
            SuperScalar bracket = g1.laplacian(h) * hInv_ +
                                  g1.gradient(h).apply(h) * hInv_ * hInv_ * qm21;
            return ClaimValue::scalar(g2m.ricci(u(0), u(1)) -
                                      gmu(frames[0], frames[1]) * bracket);
        }
        case ClaimId::T341: {
            needMn1();
            if (n1() - 1 == 0)
                throw UndefinedDenominatorError("statement divides by n1 - 1 = 0");
            int py = p(frames[1]), pz = p(frames[2]);
            Rational c1 = Rational(n2()) / (Rational(mn1) * Rational(n1() - 1));
            SuperScalar c2 = SuperScalar::constant(spec_.chart.get(), qm2 / Rational(mn1)) *
                             hInv_;
            VectorField ric = timesScalarRight(u(0), g1.ricci(u(1), u(2))) -
                              signed_(py * pz, scalarTimes(g1.ricci(u(0), u(2)), u(1)));
            VectorField hes =
                timesScalarRight(u(0), g1.hessian(h, u(1), u(2))) -
                signed_(py * pz, scalarTimes(g1.hessian(h, u(0), u(2)), u(1)));
            VectorField r = g1.kTensor(u(0), u(1), u(2));
            r = r + scalarTimes(SuperScalar::constant(spec_.chart.get(), c1), ric);
            r = r + scalarTimes(c2, hes);
            return ClaimValue::vector(r);
        }
        case ClaimId::T342: {
            needMn1();
            int py = p(frames[1]), pq = p(frames[2]);
            Rational c = qm21 / Rational(mn1);
            VectorField br =
                signed_(py * pq, scalarTimes(lnh2(frames[0], frames[2]), u(1))) -
                timesScalarRight(u(0), lnh2(frames[1], frames[2]));
            return ClaimValue::vector(
                -scalarTimes(SuperScalar::constant(spec_.chart.get(), c), br));
        }
        case ClaimId::T343: {
            needMn1();
            int pu = p(frames[0]), pv = p(frames[1]), px = p(frames[2]);
            Rational c = qm21 / Rational(mn1);
            VectorField r =
                signed_(pv * px, scalarTimes(lnh2(frames[2], frames[0]), u(1)));
            r = r + signed_(pu * (pv + px),
                            scalarTimes(lnh2(frames[2], frames[1]), u(0)));
            VectorField br =
                signed_(pv * px,
                        timesScalarRight(u(0), lnh2(frames[2], frames[2]))) -
                signed_(px * (pv + pu),
                        scalarTimes(lnh2(frames[0], frames[2]), u(1)));
            r = r + scalarTimes(SuperScalar::constant(spec_.chart.get(), c), br);
            return ClaimValue::vector(r);
        }
        case ClaimId::T344: {
            needMn1();
            int pv = p(frames[1]), py = p(frames[2]);
            Rational lead = Rational(1) / Rational(mn1);
            Rational coef(productDimension() - qMinusM2() - 1);
            SuperScalar bracket =
                g1.hessian(h, u(0), u(2)) * coef + g1.ricci(u(0), u(2));
            VectorField r = signed_(
                pv * py,
                scalarTimes(bracket * lead, u(1)));
            r = r + timesScalarRight(
                        u(0), lnh2(frames[1], frames[2]) * (qm21 / Rational(mn1)));
            return ClaimValue::vector(r);
        }
        case ClaimId::T345: {
            needMn1();
            int px = p(frames[0]), pu = p(frames[1]), pv = p(frames[2]);
            VectorField r = signed_(px * (pv + pu),
                                    scalarTimes(lnh2(frames[0], frames[2]), u(1)));
            SuperScalar brack = h * g1.laplacian(h) +
                                g1.gradient(h).apply(h) * qm21;
            SuperScalar s = signed_(1 + px * (pv + pu) + pu * pv,
                                    g2(frames[1], frames[2]) * brack);
            r = r + timesScalarRight(u(0), s);
            r = r + signed_(pv * pu,
                            scalarTimes(lnh2(frames[0], frames[2]) *
                                            (qm21 / Rational(mn1)),
                                        u(1)));
            return ClaimValue::vector(r);
        }
        case ClaimId::T346: {
            needMn1();
            if (n2() - 1 == 0)
                throw UndefinedDenominatorError("statement divides by n2 - 1 = 0");
            int pu = p(frames[0]), pv = p(frames[1]), pq = p(frames[2]);
            Rational c6 = Rational(n1()) / (Rational(mn1) * Rational(n2() - 1));
            Rational lead = Rational(1) / Rational(mn1);
            SuperScalar gradH = g1.gradient(h).apply(h) * hInv_ * hInv_;
            SuperScalar brack = h * g1.laplacian(h) +
                                g1.gradient(h).apply(h) * qm21;
            VectorField r = g2m.kTensor(u(0), u(1), u(2));
            VectorField ric = timesScalarRight(u(0), g2m.ricci(u(1), u(2))) -
                              signed_(pv * pq, scalarTimes(g2m.ricci(u(0), u(2)), u(1)));
            r = r + scalarTimes(SuperScalar::constant(spec_.chart.get(), c6), ric);
            r = r + signed_(pv * pq, scalarTimes(gmu(frames[0], frames[2]),
                                                 g2m.gradient(lnh(frames[1]))));
            r = r - signed_(pu * (pv + pq), scalarTimes(gmu(frames[1], frames[2]),
                                                        g2m.gradient(lnh(frames[0]))));
            r = r - signed_(pu * (pv + pq),
                            scalarTimes(gradH * g2(frames[1], frames[2]), u(0)));
            r = r + signed_(pv * pq,
                            scalarTimes(gradH * g2(frames[0], frames[2]), u(1)));
            r = r + timesScalarRight(u(0), g2(frames[1], frames[2]) * brack * lead);
            r = r - signed_(pv * pq,
                            scalarTimes(g2(frames[0], frames[2]) * brack * lead, u(1)));
            return ClaimValue::vector(r);
        }
        default:
            throw Error("claim " + claimName(claim) +
                        " is an equivalence; it has no per-tuple closed form");
    }
}

ClaimValue ProductContext::directValue(ClaimId claim, const std::vector<int>& frames) const {
    const std::vector<int>& sig = claimSignature(claim);
    if (frames.size() != sig.size())
        throw Error("claim " + claimName(claim) + " takes " + std::to_string(sig.size()) +
                    " frame arguments");
    auto u = [&](std::size_t i) { return unit(frames[i]); };
    switch (claim) {
        case ClaimId::L311:
        case ClaimId::L312:
        case ClaimId::L313:
        case ClaimId::L314:
            return ClaimValue::vector(product_->covariantDerivative(u(0), u(1)));
        case ClaimId::P321:
        case ClaimId::P322:
        case ClaimId::P323:
        case ClaimId::P324:
        case ClaimId::P325:
        case ClaimId::P326:
            return ClaimValue::vector(product_->curvature(u(0), u(1), u(2)));
        case ClaimId::P331:
        case ClaimId::P332:
        case ClaimId::P333:
        case ClaimId::P334:
            return ClaimValue::scalar(product_->ricci(u(0), u(1)));
        case ClaimId::T341:
        case ClaimId::T342:
        case ClaimId::T343:
        case ClaimId::T344:
        case ClaimId::T345:
        case ClaimId::T346:
            return ClaimValue::vector(product_->kTensor(u(0), u(1), u(2)));
        default:
            throw Error("claim " + claimName(claim) +
                        " is an equivalence; it has no per-tuple direct value");
    }
}

std::vector<MixedRicciResidual> mixedRicciFlatResiduals(const ProductContext& ctx) {
    std::vector<MixedRicciResidual> out;
    const Chart& chart = ctx.chart();
    Rational pre(-(ctx.qMinusM2() - 1));
    for (int fx : ctx.spec().m1.frames)
        for (int fv : ctx.spec().m2.frames) {
            MixedRicciResidual r;
            r.frameX = fx;
            r.frameV = fv;
            r.direct = ctx.product().ricci(ctx.unit(fx), ctx.unit(fv));
            int sign = chart.frameParity(fx) * chart.frameParity(fv);
            r.prefactor = SuperScalar::constant(&chart, sign % 2 ? -pre : pre);
            out.push_back(std::move(r));
        }
    return out;
}

namespace {

// True when every variable of the even fraction depends only on the
// block's even coordinates and no odd generator leaks in.
bool scalarBelongsTo(const SuperScalar& value, const FactorBlock& block,
                     const VariableTable& vars, SuperScalar::Mask allowedMask) {
    std::set<int> allowed(block.evenVars.begin(), block.evenVars.end());
    for (const auto& [mask, coeff] : value.terms()) {
        if (mask & ~allowedMask) return false;
        for (const Polynomial* poly : {&coeff.numerator(), &coeff.denominator()})
            for (const auto& [mono, c] : poly->terms()) {
                (void)c;
                for (const auto& [var, e] : mono) {
                    (void)e;
                    for (int dep : vars.dependsOn(var))
                        if (!allowed.count(dep)) return false;
                }
            }
    }
    return true;
}

SuperScalar::Mask blockMask(const ProductContext& ctx, bool second) {
    const FactorBlock& b1 = ctx.spec().m1;
    const FactorBlock& b2 = ctx.spec().m2;
    SuperScalar::Mask m = 0;
    int base = second ? b1.oddCount() : 0;
    int count = second ? b2.oddCount() : b1.oddCount();
    for (int i = 0; i < count; ++i) m |= SuperScalar::Mask{1} << (base + i);
    return m;
}

}  // namespace

WarpedFactorization warpedFactorization(const ProductContext& ctx) {
    WarpedFactorization out;
    const SuperScalar& h = ctx.h();
    int checked = 0;
    bool separable = true;
    for (int fi : ctx.spec().m1.frames)
        for (int fj : ctx.spec().m2.frames) {
            SuperScalar di = h.derivativeFrame(fi);
            SuperScalar crit = h * di.derivativeFrame(fj) - di * h.derivativeFrame(fj);
            ++checked;
            if (!crit.isZero()) separable = false;
        }
    out.separable = separable;
    if (!separable) {
        out.certificate = "a mixed second derivative of ln h is formally nonzero";
        return out;
    }
    out.certificate = "all " + std::to_string(checked) +
                      " mixed second derivatives of ln h vanish identically";

    const VariableTable& vars = *ctx.spec().vars;
    const Chart& chart = ctx.chart();
    SuperScalar::Mask mask1 = blockMask(ctx, false);
    SuperScalar::Mask mask2 = blockMask(ctx, true);
    SuperScalar one = SuperScalar::constant(&chart, Rational(1));
    if (scalarBelongsTo(h, ctx.spec().m1, vars, mask1)) {
        out.hasFactors = true;
        out.factor1 = h.render();
        out.factor2 = one.render();
        return out;
    }
    if (scalarBelongsTo(h, ctx.spec().m2, vars, mask2)) {
        out.hasFactors = true;
        out.factor1 = one.render();
        out.factor2 = h.render();
        return out;
    }
    // A declared product: a single even monomial fraction whose variables
    // split cleanly between the factors.
    if (h.terms().size() == 1 && h.terms().count(0)) {
        const EvenScalar& body = h.terms().at(0);
        auto splitPoly = [&](const Polynomial& poly, Polynomial& into1,
                             Polynomial& into2) -> bool {
            if (poly.terms().size() != 1) return false;
            const auto& [mono, coeff] = *poly.terms().begin();
            Monomial m1, m2;
            std::set<int> allowed1(ctx.spec().m1.evenVars.begin(),
                                   ctx.spec().m1.evenVars.end());
            std::set<int> allowed2(ctx.spec().m2.evenVars.begin(),
                                   ctx.spec().m2.evenVars.end());
            for (const auto& [var, e] : mono) {
                bool in1 = true, in2 = true;
                for (int dep : vars.dependsOn(var)) {
                    if (!allowed1.count(dep)) in1 = false;
                    if (!allowed2.count(dep)) in2 = false;
                }
                if (in1)
                    m1.push_back({var, e});
                else if (in2)
                    m2.push_back({var, e});
                else
                    return false;
            }
            into1 = Polynomial();
            into1.addTerm(m1, coeff);
            into2 = Polynomial();
            into2.addTerm(m2, Rational(1));
            return true;
        };
        Polynomial n1p, n2p, d1p, d2p;
        if (splitPoly(body.numerator(), n1p, n2p) &&
            splitPoly(body.denominator(), d1p, d2p)) {
            out.hasFactors = true;
            out.factor1 = EvenScalar(n1p, d1p).render(vars);
            out.factor2 = EvenScalar(n2p, d2p).render(vars);
            return out;
        }
    }
    out.certificate += "; no explicit factor split for this twist shape";
    return out;
}

W2FlatReport w2FlatCheck(const ProductContext& ctx) {
    W2FlatReport out;
    if (ctx.productDimension() - 1 == 0) {
        out.applicable = false;
        out.note = "K-tensor undefined: m - n - 1 = 0";
        return out;
    }
    out.applicable = true;
    out.separable = warpedFactorization(ctx).separable;
    const std::vector<int>& fr1 = ctx.spec().m1.frames;
    const std::vector<int>& fr2 = ctx.spec().m2.frames;
    auto record = [&](const std::vector<int>& frames, const VectorField& value,
                      bool& allZero) {
        CaseResult c;
        c.frames = frames;
        c.residual = value.render();
        c.pass = out.separable ? value.isZero() : true;
        if (!value.isZero()) allZero = false;
        out.cases.push_back(std::move(c));
    };
    for (int fx : fr1)
        for (int fy : fr1)
            for (int fq : fr2)
                record({fx, fy, fq},
                       ctx.product().kTensor(ctx.unit(fx), ctx.unit(fy), ctx.unit(fq)),
                       out.xyqAllZero);
    for (int fu : fr2)
        for (int fv : fr2)
            for (int fx : fr1)
                record({fu, fv, fx},
                       ctx.product().kTensor(ctx.unit(fu), ctx.unit(fv), ctx.unit(fx)),
                       out.uvxAllZero);
    bool qm21zero = ctx.qMinusM2() - 1 == 0;
    out.informative = qm21zero ? fr2.size() >= 2
                               : (fr1.size() >= 2 || fr2.size() >= 2);
    bool allZero = out.xyqAllZero && out.uvxAllZero;
    if (out.separable) {
        out.equivalenceHolds = allZero;
        out.note = allZero ? "twist separable and all mixed K components vanish"
                           : "twist separable but a mixed K component is nonzero";
    } else if (out.informative) {
        out.equivalenceHolds = !allZero;
        out.note = allZero ? "twist not separable yet all mixed K components vanish"
                           : "twist not separable and a nonzero mixed K component "
                             "witnesses it";
    } else {
        out.equivalenceHolds = true;
        out.note = "frame configuration cannot witness the equivalence (too few "
                   "frames for the informative K family); nothing to refute";
    }
    return out;
}

namespace {

std::string notApplicable(const ProductContext& ctx, ClaimId id) {
    bool needsMn1 = false, needsN11 = false, needsN21 = false;
    switch (id) {
        case ClaimId::T341:
            needsMn1 = needsN11 = true;
            break;
        case ClaimId::T342:
        case ClaimId::T343:
        case ClaimId::T344:
        case ClaimId::T345:
            needsMn1 = true;
            break;
        case ClaimId::T346:
            needsMn1 = needsN21 = true;
            break;
        default:
            return "";
    }
    if (needsMn1 && ctx.productDimension() - 1 == 0)
        return "not applicable: m - n - 1 = 0 (product K-tensor undefined)";
    if (needsN11 && ctx.n1() - 1 == 0)
        return "not applicable: n1 - 1 = 0 (factor-1 K-tensor undefined)";
    if (needsN21 && ctx.n2() - 1 == 0)
        return "not applicable: n2 - 1 = 0 (factor-2 K-tensor undefined)";
    return "";
}

ClaimResult verifyFormulaClaim(const ProductContext& ctx, ClaimId id) {
    ClaimResult result;
    result.id = id;
    result.tier = claimTier(id);
    result.note = notApplicable(ctx, id);
    if (!result.note.empty()) {
        result.pass = true;
        return result;
    }
    const std::vector<int>& sig = claimSignature(id);
    std::vector<const std::vector<int>*> pools;
    for (int factor : sig)
        pools.push_back(factor == 1 ? &ctx.spec().m1.frames : &ctx.spec().m2.frames);
    std::vector<int> tuple(sig.size());
    // Odometer over the frame pools, last slot fastest: lexicographic in
    // frame order.
    std::vector<std::size_t> idx(sig.size(), 0);
    result.pass = true;
    while (true) {
        for (std::size_t i = 0; i < sig.size(); ++i) tuple[i] = (*pools[i])[idx[i]];
        ClaimValue direct = ctx.directValue(id, tuple);
        ClaimValue closed = ctx.closedForm(id, tuple);
        ClaimValue residual = direct - closed;
        CaseResult c;
        c.frames = tuple;
        c.residual = residual.render();
        c.pass = residual.isZero();
        if (!c.pass) result.pass = false;
        result.cases.push_back(std::move(c));
        std::size_t slot = sig.size();
        while (slot > 0) {
            --slot;
            if (++idx[slot] < pools[slot]->size()) break;
            idx[slot] = 0;
            if (slot == 0) return result;
        }
    }
}

ClaimResult verifyMixedRicciClaim(const ProductContext& ctx) {
    ClaimResult result;
    result.id = ClaimId::T42;
    result.tier = claimTier(ClaimId::T42);
    bool separable = warpedFactorization(ctx).separable;
    bool allZero = true;
    for (const auto& r : mixedRicciFlatResiduals(ctx)) {
        CaseResult c;
        c.frames = {r.frameX, r.frameV};
        c.residual = r.direct.render();
        c.pass = separable ? r.direct.isZero() : true;
        if (!r.direct.isZero()) allZero = false;
        result.cases.push_back(std::move(c));
    }
    bool informative = ctx.qMinusM2() - 1 != 0;
    if (separable) {
        result.pass = allZero;
        result.note = allZero
                          ? "twist separable and all mixed Ricci components vanish"
                          : "twist separable but a mixed Ricci component is nonzero";
    } else if (informative) {
        result.pass = !allZero;
        result.note = allZero ? "twist not separable yet all mixed Ricci components "
                                "vanish"
                              : "twist not separable and a nonzero mixed Ricci "
                                "component witnesses it";
    } else {
        result.pass = true;
        result.note = "not applicable: q - m2 - 1 = 0 (mixed Ricci vanishes "
                      "identically; equivalence not witnessable)";
    }
    return result;
}

ClaimResult verifyW2Claim(const ProductContext& ctx) {
    ClaimResult result;
    result.id = ClaimId::C44;
    result.tier = claimTier(ClaimId::C44);
    W2FlatReport report = w2FlatCheck(ctx);
    if (!report.applicable) {
        result.pass = true;
        result.note = "not applicable: " + report.note;
        return result;
    }
    result.cases = report.cases;
    if (!report.separable && !report.informative) {
        result.pass = true;
        result.note = "not applicable: " + report.note;
    } else {
        result.pass = report.equivalenceHolds;
        result.note = report.note;
    }
    return result;
}

}  // namespace

VerificationReport verifyClaims(const ProductContext& ctx, std::vector<ClaimId> claims) {
    if (claims.empty()) claims = allClaims();
    VerificationReport report;
    report.scenario = ctx.spec().name;
    for (ClaimId id : allClaims()) {
        if (std::find(claims.begin(), claims.end(), id) == claims.end()) continue;
        ClaimResult result;
        if (id == ClaimId::T42)
            result = verifyMixedRicciClaim(ctx);
        else if (id == ClaimId::C44)
            result = verifyW2Claim(ctx);
        else
            result = verifyFormulaClaim(ctx, id);
        if (result.pass)
            ++report.passed;
        else if (result.tier == ClaimTier::MustPass)
            ++report.failed;
        else
            ++report.reported;
        report.claims.push_back(std::move(result));
    }
    return report;
}

}  // namespace supergeo
