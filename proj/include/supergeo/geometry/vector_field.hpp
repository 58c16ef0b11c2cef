#pragma once

#include "supergeo/core/chart.hpp"
#include "supergeo/core/super_scalar.hpp"

#include <map>
#include <optional>
#include <string>

namespace supergeo {

// A vector field written in a chart's coordinate frame, with coefficients
// kept to the LEFT of the frame vectors: X = sum_I X^I d_I.  Components
// are stored per frame id; zero components are never stored.  The
// default-constructed field is a chart-less universal zero, mirroring
// SuperScalar.
class VectorField {
public:
    using ComponentMap = std::map<int, SuperScalar>;

    VectorField() = default;
    static VectorField zero(const Chart* chart);
    static VectorField frame(const Chart* chart, int fid);

    const Chart* chart() const { return chart_; }
    const ComponentMap& components() const { return components_; }
    // Left coefficient of d_fid (zero when absent).
    SuperScalar coefficient(int fid) const;
    void setComponent(int fid, SuperScalar value);

    bool isZero() const { return components_.empty(); }

    VectorField operator-() const;
    VectorField operator+(const VectorField& o) const;
    VectorField operator-(const VectorField& o) const;
    bool operator==(const VectorField& o) const;
    bool operator!=(const VectorField& o) const { return !(*this == o); }

    // Parity of a homogeneous field (|coefficient| + |frame| on every
    // nonzero component); zero reports even, mixed parity reports
    // nullopt.
    std::optional<int> parity() const;
    bool isHomogeneous() const { return parity().has_value(); }
    // Projections onto total parity 0 / 1; their sum is the field.
    VectorField parityPart(int p) const;

    // Derivation applied to a superfunction: X(f) = sum_I X^I d_I(f).
    SuperScalar apply(const SuperScalar& f) const;

    std::string render() const;

private:
    const Chart* unifyChart(const VectorField& o) const;

    const Chart* chart_ = nullptr;
    ComponentMap components_;
};

// f * X: plain left multiplication of every coefficient.
VectorField scalarTimes(const SuperScalar& f, const VectorField& X);

// X * f: the coefficient of d_I picks up the sign for moving f across
// d_I, i.e. (X * f)^I = X^I * sigma_{|d_I|}(f).
VectorField timesScalarRight(const VectorField& X, const SuperScalar& f);

// Graded commutator [X, Y] = XY - (-1)^{|X||Y|}YX as a derivation,
// expanded on coordinate frames.  Inhomogeneous inputs are split into
// parity parts and the brackets summed.
VectorField lieBracket(const VectorField& X, const VectorField& Y);

}  // namespace supergeo
