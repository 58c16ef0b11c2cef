#pragma once

#include "supergeo/core/chart.hpp"
#include "supergeo/geometry/vector_field.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace supergeo {

// A graded metric over a list of chart frames (the full chart for a
// total-space metric, a factor's frames for a block of a product).
// Entries g_{IJ} are stored per ordered frame-id pair; absent pairs read
// as zero, so a factor metric is implicitly extended by zero.
class Metric {
public:
    Metric() = default;
    Metric(const Chart* chart, std::vector<int> frames);

    const Chart* chart() const { return chart_; }
    const std::vector<int>& frames() const { return frames_; }

    void setEntry(int fidI, int fidJ, SuperScalar value);
    SuperScalar entry(int fidI, int fidJ) const;
    const std::map<std::pair<int, int>, SuperScalar>& entries() const { return entries_; }

    // Graded dimension (#even - #odd) of the spanned frames.
    int gradedDimension() const;

    // Human-readable findings; empty iff the metric is valid.  Checks
    // graded symmetry g_{IJ} = (-1)^{|I||J|} g_{JI}, parity homogeneity
    // |g_{IJ}| = |I| + |J|, and invertibility of the body matrix.
    std::vector<std::string> validate() const;

    // The pairing <X, Y> = sum X^I sigma_{|d_I|}(Y^J) g_{IJ}.
    SuperScalar apply(const VectorField& X, const VectorField& Y) const;

private:
    const Chart* chart_ = nullptr;
    std::vector<int> frames_;
    std::map<std::pair<int, int>, SuperScalar> entries_;
};

}  // namespace supergeo
