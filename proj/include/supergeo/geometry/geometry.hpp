#pragma once

#include "supergeo/geometry/metric.hpp"
#include "supergeo/geometry/vector_field.hpp"

#include <map>
#include <tuple>
#include <utility>

namespace supergeo {

// The Levi-Civita package of one metric: inverse metric, Christoffel
// table from the Koszul formula, and every derived operator (curvature,
// Ricci, gradient, divergence, Laplacian, Hessian, K, W2).  A Geometry
// over a factor's frame sublist is the factor's intrinsic geometry; the
// coefficients of fields it acts on may freely depend on the other
// factor's variables, which simply ride along through derivatives.
class Geometry {
public:
    explicit Geometry(Metric g);

    const Chart* chart() const { return g_.chart(); }
    const Metric& metric() const { return g_; }
    const std::vector<int>& frames() const { return g_.frames(); }
    int gradedDimension() const { return g_.gradedDimension(); }

    // Inverse metric entry g^{IJ}, satisfying sum_K g_{IK} g^{KJ} =
    // delta_I^J.
    const SuperScalar& inverseEntry(int fidI, int fidJ) const;

    SuperScalar metricApply(const VectorField& X, const VectorField& Y) const {
        return g_.apply(X, Y);
    }

    // nabla_{d_I} d_J from the Koszul formula (computed once, cached).
    const VectorField& gamma(int fidI, int fidJ) const;

    // nabla_X Y by C-infinity-linearity in X and the Leibniz rule in Y;
    // fully general in both arguments.
    VectorField covariantDerivative(const VectorField& X, const VectorField& Y) const;

    VectorField torsion(const VectorField& X, const VectorField& Y) const;

    // R(X,Y)Z = nabla_X nabla_Y Z - (-1)^{|X||Y|} nabla_Y nabla_X Z
    //           - nabla_{[X,Y]} Z.
    VectorField curvature(const VectorField& X, const VectorField& Y,
                          const VectorField& Z) const;
    const VectorField& curvatureFrames(int fidX, int fidY, int fidZ) const;

    // Ric(X,Y): the signed half-sum over this geometry's frames of
    // [R(d_I,X)Y + (-1)^{|X||Y|} R(d_I,Y)X]^I.
    SuperScalar ricci(const VectorField& X, const VectorField& Y) const;
    const SuperScalar& ricciFrames(int fidX, int fidY) const;

    // grad f: component I is sum_J (-1)^{|d_J||f|} (d_J f) g^{JI}.
    VectorField gradient(const SuperScalar& f) const;

    // Div X = sum_I (-1)^{|d_I|(|d_I|+|X|)} (nabla_{d_I} X)^I.
    SuperScalar divergence(const VectorField& X) const;

    SuperScalar laplacian(const SuperScalar& f) const { return divergence(gradient(f)); }

    // H^f(X,Y) = X(Y(f)) - (nabla_X Y)(f).
    SuperScalar hessian(const SuperScalar& f, const VectorField& X,
                        const VectorField& Y) const;

    // K(X,Y)T = R(X,Y)T - (1/(dim-1)) [X * Ric(Y,T)
    //           - (-1)^{|Y||T|} Ric(X,T) * Y], dim the graded dimension.
    VectorField kTensor(const VectorField& X, const VectorField& Y,
                        const VectorField& T) const;

    // W2(X,Y,Z,T) = g(K(X,Y)T, Z).
    SuperScalar w2(const VectorField& X, const VectorField& Y, const VectorField& Z,
                   const VectorField& T) const;

private:
    VectorField curvatureHomogeneous(const VectorField& X, const VectorField& Y,
                                     const VectorField& Z) const;
    SuperScalar ricciHomogeneous(const VectorField& X, const VectorField& Y) const;

    Metric g_;
    std::map<std::pair<int, int>, SuperScalar> inverse_;
    mutable std::map<std::pair<int, int>, VectorField> gamma_;
    mutable std::map<std::tuple<int, int, int>, VectorField> curvatureCache_;
    mutable std::map<std::pair<int, int>, SuperScalar> ricciCache_;
};

}  // namespace supergeo
