#include "supergeo/geometry/geometry.hpp"

#include "supergeo/core/errors.hpp"

#include <optional>
#include <vector>

namespace supergeo {

namespace {

using SMatrix = std::vector<std::vector<SuperScalar>>;

// The frame id when the field is exactly one frame vector with unit
// coefficient; lets the tensor caches kick in.
std::optional<int> asFrame(const VectorField& X) {
    if (X.components().size() != 1) return std::nullopt;
    const auto& [fid, c] = *X.components().begin();
    if (!c.isOne()) return std::nullopt;
    return fid;
}

// Componentwise frame derivative of a field's coefficients.
VectorField frameDerivativeField(const VectorField& Y, int fid) {
    VectorField r = VectorField::zero(Y.chart());
    for (const auto& [k, c] : Y.components()) r.setComponent(k, c.derivativeFrame(fid));
    return r;
}

}  // namespace

Geometry::Geometry(Metric g) : g_(std::move(g)) {
    std::vector<std::string> findings = g_.validate();
    if (!findings.empty()) {
        std::string msg = "invalid metric:";
        for (const std::string& f : findings) msg += "\n  - " + f;
        throw DegenerateMetricError(msg);
    }

    // Invert the body matrix over the exact fraction field, then correct
    // for the nilpotent part with the finite Neumann series.
    const Chart* chart = g_.chart();
    const std::vector<int>& fr = g_.frames();
    const int n = static_cast<int>(fr.size());

    std::vector<std::vector<EvenScalar>> body(n, std::vector<EvenScalar>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) body[a][b] = g_.entry(fr[a], fr[b]).body();

    // Gauss-Jordan: [body | I] -> [I | bodyInv].
    std::vector<std::vector<EvenScalar>> aug(n, std::vector<EvenScalar>(2 * n));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) aug[a][b] = body[a][b];
        aug[a][n + a] = EvenScalar::constant(1);
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (!aug[row][col].isZero()) {
                pivot = row;
                break;
            }
        if (pivot < 0) throw DegenerateMetricError("body matrix is singular");
        std::swap(aug[col], aug[pivot]);
        EvenScalar inv = aug[col][col].inverse();
        for (int b = 0; b < 2 * n; ++b) aug[col][b] = aug[col][b] * inv;
        for (int row = 0; row < n; ++row) {
            if (row == col || aug[row][col].isZero()) continue;
            EvenScalar factor = aug[row][col];
            for (int b = 0; b < 2 * n; ++b)
                aug[row][b] = aug[row][b] - factor * aug[col][b];
        }
    }

    SMatrix bodyInv(n, std::vector<SuperScalar>(n));
    SMatrix nilpotent(n, std::vector<SuperScalar>(n));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            bodyInv[a][b] = SuperScalar::fromEven(chart, aug[a][n + b]);
            nilpotent[a][b] =
                g_.entry(fr[a], fr[b]) - SuperScalar::fromEven(chart, body[a][b]);
        }
    }

    auto matMul = [n, chart](const SMatrix& A, const SMatrix& B) {
        SMatrix C(n, std::vector<SuperScalar>(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                SuperScalar acc = SuperScalar::zero(chart);
                for (int k = 0; k < n; ++k) acc = acc + A[a][k] * B[k][b];
                C[a][b] = std::move(acc);
            }
        return C;
    };
    auto isZeroMat = [n](const SMatrix& A) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (!A[a][b].isZero()) return false;
        return true;
    };

    // (body + nil)^{-1} = sum_k (-bodyInv * nil)^k * bodyInv.
    SMatrix x = matMul(bodyInv, nilpotent);
    for (auto& row : x)
        for (auto& e : row) e = -e;
    SMatrix result = bodyInv;
    SMatrix power = bodyInv;
    int rounds = chart->oddCount();
    for (int k = 0; k < rounds; ++k) {
        power = matMul(x, power);
        if (isZeroMat(power)) break;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) result[a][b] = result[a][b] + power[a][b];
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (!result[a][b].isZero()) inverse_.emplace(std::make_pair(fr[a], fr[b]),
                                                         std::move(result[a][b]));
}

const SuperScalar& Geometry::inverseEntry(int fidI, int fidJ) const {
    static const SuperScalar zero;
    auto it = inverse_.find({fidI, fidJ});
    return it == inverse_.end() ? zero : it->second;
}

const VectorField& Geometry::gamma(int fidI, int fidJ) const {
    auto key = std::make_pair(fidI, fidJ);
    auto it = gamma_.find(key);
    if (it != gamma_.end()) return it->second;

    const Chart* chart = g_.chart();
    int pi = chart->frameParity(fidI), pj = chart->frameParity(fidJ);
    VectorField result = VectorField::zero(chart);
    for (int z : g_.frames()) {
        int pz = chart->frameParity(z);
        // 2 <nabla_I d_J, d_Z> for coordinate frames: the three metric
        // derivative terms of the Koszul formula with graded signs.
        SuperScalar t1 = g_.entry(fidJ, z).derivativeFrame(fidI);
        SuperScalar t2 = g_.entry(z, fidI).derivativeFrame(fidJ);
        if (pi * ((pj + pz) % 2) == 1) t2 = -t2;
        SuperScalar t3 = g_.entry(fidI, fidJ).derivativeFrame(z);
        if (pz * ((pi + pj) % 2) == 1) t3 = -t3;
        SuperScalar twoK = t1 + t2 - t3;
        if (twoK.isZero()) continue;
        SuperScalar k = twoK * Rational(1, 2);
        for (int w : g_.frames()) {
            const SuperScalar& ginv = inverseEntry(z, w);
            if (ginv.isZero()) continue;
            result.setComponent(w, result.coefficient(w) + k * ginv);
        }
    }
    return gamma_.emplace(key, std::move(result)).first->second;
}

VectorField Geometry::covariantDerivative(const VectorField& X, const VectorField& Y) const {
    const Chart* chart = g_.chart();
    VectorField acc = VectorField::zero(chart);
    for (const auto& [i, xi] : X.components()) {
        int pi = chart->frameParity(i);
        acc = acc + scalarTimes(xi, frameDerivativeField(Y, i));
        for (const auto& [j, yj] : Y.components()) {
            SuperScalar c = xi * yj.signFlipOdd(pi);
            if (c.isZero()) continue;
            acc = acc + scalarTimes(c, gamma(i, j));
        }
    }
    return acc;
}

VectorField Geometry::torsion(const VectorField& X, const VectorField& Y) const {
    VectorField acc = VectorField::zero(g_.chart());
    for (int px = 0; px < 2; ++px) {
        VectorField Xp = X.parityPart(px);
        if (Xp.isZero()) continue;
        for (int py = 0; py < 2; ++py) {
            VectorField Yp = Y.parityPart(py);
            if (Yp.isZero()) continue;
            VectorField t = covariantDerivative(Xp, Yp) - lieBracket(Xp, Yp);
            VectorField s = covariantDerivative(Yp, Xp);
            acc = acc + (px * py == 1 ? t + s : t - s);
        }
    }
    return acc;
}

VectorField Geometry::curvatureHomogeneous(const VectorField& X, const VectorField& Y,
                                           const VectorField& Z) const {
    int px = X.parity().value(), py = Y.parity().value();
    VectorField a = covariantDerivative(X, covariantDerivative(Y, Z));
    VectorField b = covariantDerivative(Y, covariantDerivative(X, Z));
    VectorField c = covariantDerivative(lieBracket(X, Y), Z);
    return px * py == 1 ? a + b - c : a - b - c;
}

const VectorField& Geometry::curvatureFrames(int fidX, int fidY, int fidZ) const {
    auto key = std::make_tuple(fidX, fidY, fidZ);
    auto it = curvatureCache_.find(key);
    if (it != curvatureCache_.end()) return it->second;
    const Chart* chart = g_.chart();
    int px = chart->frameParity(fidX), py = chart->frameParity(fidY);
    // Coordinate frames supercommute, so the bracket term drops.
    VectorField a = covariantDerivative(VectorField::frame(chart, fidX), gamma(fidY, fidZ));
    VectorField b = covariantDerivative(VectorField::frame(chart, fidY), gamma(fidX, fidZ));
    VectorField r = px * py == 1 ? a + b : a - b;
    return curvatureCache_.emplace(key, std::move(r)).first->second;
}

VectorField Geometry::curvature(const VectorField& X, const VectorField& Y,
                                const VectorField& Z) const {
    auto fx = asFrame(X), fy = asFrame(Y), fz = asFrame(Z);
    if (fx && fy && fz) return curvatureFrames(*fx, *fy, *fz);
    VectorField acc = VectorField::zero(g_.chart());
    for (int px = 0; px < 2; ++px) {
        VectorField Xp = X.parityPart(px);
        if (Xp.isZero()) continue;
        for (int py = 0; py < 2; ++py) {
            VectorField Yp = Y.parityPart(py);
            if (Yp.isZero()) continue;
            acc = acc + curvatureHomogeneous(Xp, Yp, Z);
        }
    }
    return acc;
}

SuperScalar Geometry::ricciHomogeneous(const VectorField& X, const VectorField& Y) const {
    const Chart* chart = g_.chart();
    int px = X.parity().value(), py = Y.parity().value();
    auto fx = asFrame(X), fy = asFrame(Y);
    SuperScalar acc = SuperScalar::zero(chart);
    for (int i : g_.frames()) {
        int pi = chart->frameParity(i);
        VectorField frameI = VectorField::frame(chart, i);
        VectorField rxy = fx && fy ? curvatureFrames(i, *fx, *fy) : curvature(frameI, X, Y);
        VectorField ryx = fx && fy ? curvatureFrames(i, *fy, *fx) : curvature(frameI, Y, X);
        SuperScalar inner = rxy.coefficient(i) + (px * py == 1 ? -ryx.coefficient(i)
                                                               : ryx.coefficient(i));
        if (inner.isZero()) continue;
        SuperScalar term = inner * Rational(1, 2);
        if (pi * ((pi + px + py) % 2) == 1) term = -term;
        acc = acc + term;
    }
    return acc;
}

const SuperScalar& Geometry::ricciFrames(int fidX, int fidY) const {
    auto key = std::make_pair(fidX, fidY);
    auto it = ricciCache_.find(key);
    if (it != ricciCache_.end()) return it->second;
    const Chart* chart = g_.chart();
    SuperScalar r = ricciHomogeneous(VectorField::frame(chart, fidX),
                                     VectorField::frame(chart, fidY));
    return ricciCache_.emplace(key, std::move(r)).first->second;
}

SuperScalar Geometry::ricci(const VectorField& X, const VectorField& Y) const {
    auto fx = asFrame(X), fy = asFrame(Y);
    if (fx && fy) return ricciFrames(*fx, *fy);
    SuperScalar acc = SuperScalar::zero(g_.chart());
    for (int px = 0; px < 2; ++px) {
        VectorField Xp = X.parityPart(px);
        if (Xp.isZero()) continue;
        for (int py = 0; py < 2; ++py) {
            VectorField Yp = Y.parityPart(py);
            if (Yp.isZero()) continue;
            acc = acc + ricciHomogeneous(Xp, Yp);
        }
    }
    return acc;
}

VectorField Geometry::gradient(const SuperScalar& f) const {
    auto pf = f.parity();
    if (!pf) throw ParityError("gradient needs a parity-homogeneous function");
    const Chart* chart = g_.chart();
    VectorField r = VectorField::zero(chart);
    for (int j : g_.frames()) {
        SuperScalar df = f.derivativeFrame(j);
        if (df.isZero()) continue;
        if (chart->frameParity(j) * *pf == 1) df = -df;
        for (int i : g_.frames()) {
            const SuperScalar& ginv = inverseEntry(j, i);
            if (ginv.isZero()) continue;
            r.setComponent(i, r.coefficient(i) + df * ginv);
        }
    }
    return r;
}

SuperScalar Geometry::divergence(const VectorField& X) const {
    const Chart* chart = g_.chart();
    SuperScalar acc = SuperScalar::zero(chart);
    for (int px = 0; px < 2; ++px) {
        VectorField Xp = X.parityPart(px);
        if (Xp.isZero()) continue;
        for (int i : g_.frames()) {
            int pi = chart->frameParity(i);
            SuperScalar term =
                covariantDerivative(VectorField::frame(chart, i), Xp).coefficient(i);
            if (term.isZero()) continue;
            if (pi * ((pi + px) % 2) == 1) term = -term;
            acc = acc + term;
        }
    }
    return acc;
}

SuperScalar Geometry::hessian(const SuperScalar& f, const VectorField& X,
                              const VectorField& Y) const {
    return X.apply(Y.apply(f)) - covariantDerivative(X, Y).apply(f);
}

VectorField Geometry::kTensor(const VectorField& X, const VectorField& Y,
                              const VectorField& T) const {
    int dim = gradedDimension();
    if (dim == 1)
        throw UndefinedDenominatorError(
            "the K tensor is undefined at graded dimension 1 (dim - 1 = 0)");
    // Negative graded dimensions make this denominator negative; the
    // division form normalizes the sign (the two-argument constructor
    // rejects negative denominators).
    SuperScalar c = SuperScalar::constant(g_.chart(), Rational(1) / Rational(dim - 1));
    VectorField acc = VectorField::zero(g_.chart());
    for (int py = 0; py < 2; ++py) {
        VectorField Yp = Y.parityPart(py);
        if (Yp.isZero()) continue;
        for (int pt = 0; pt < 2; ++pt) {
            VectorField Tp = T.parityPart(pt);
            if (Tp.isZero()) continue;
            VectorField r = curvature(X, Yp, Tp);
            VectorField first = timesScalarRight(X, ricci(Yp, Tp));
            VectorField second = scalarTimes(ricci(X, Tp), Yp);
            VectorField bracket = py * pt == 1 ? first + second : first - second;
            acc = acc + r - scalarTimes(c, bracket);
        }
    }
    return acc;
}

SuperScalar Geometry::w2(const VectorField& X, const VectorField& Y, const VectorField& Z,
                         const VectorField& T) const {
    return g_.apply(kTensor(X, Y, T), Z);
}

}  // namespace supergeo
