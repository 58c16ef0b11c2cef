#include "supergeo/geometry/metric.hpp"

#include "supergeo/core/errors.hpp"

#include <vector>

namespace supergeo {

Metric::Metric(const Chart* chart, std::vector<int> frames)
    : chart_(chart), frames_(std::move(frames)) {
    if (!chart_) throw Error("metric requires a chart");
    for (int fid : frames_)
        if (fid < 0 || fid >= chart_->frameCount()) throw Error("metric frame out of range");
}

void Metric::setEntry(int fidI, int fidJ, SuperScalar value) {
    if (value.isZero())
        entries_.erase({fidI, fidJ});
    else
        entries_.insert_or_assign({fidI, fidJ}, std::move(value));
}

SuperScalar Metric::entry(int fidI, int fidJ) const {
    auto it = entries_.find({fidI, fidJ});
    return it == entries_.end() ? SuperScalar::zero(chart_) : it->second;
}

int Metric::gradedDimension() const {
    int d = 0;
    for (int fid : frames_) d += chart_->frameParity(fid) == 0 ? 1 : -1;
    return d;
}

std::vector<std::string> Metric::validate() const {
    std::vector<std::string> findings;
    auto pairName = [&](int i, int j) {
        return "<" + chart_->frameDisplay(i) + "," + chart_->frameDisplay(j) + ">";
    };
    for (int i : frames_) {
        for (int j : frames_) {
            SuperScalar gij = entry(i, j);
            int pi = chart_->frameParity(i), pj = chart_->frameParity(j);
            SuperScalar gji = entry(j, i);
            SuperScalar expected = pi * pj == 1 ? -gji : gji;
            if (gij != expected)
                findings.push_back("graded symmetry fails for " + pairName(i, j));
            if (!gij.isZero()) {
                auto par = gij.parity();
                if (!par)
                    findings.push_back("entry " + pairName(i, j) + " mixes parities");
                else if (*par != (pi + pj) % 2)
                    findings.push_back("entry " + pairName(i, j) +
                                       " has the wrong parity for a degree-0 metric");
            }
        }
    }

    // Body-matrix invertibility by Gaussian elimination over the exact
    // fraction field.
    const int n = static_cast<int>(frames_.size());
    std::vector<std::vector<EvenScalar>> m(n, std::vector<EvenScalar>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) m[a][b] = entry(frames_[a], frames_[b]).body();
    bool singular = false;
    for (int col = 0; col < n && !singular; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (!m[row][col].isZero()) {
                pivot = row;
                break;
            }
        if (pivot < 0) {
            singular = true;
            break;
        }
        std::swap(m[col], m[pivot]);
        EvenScalar inv = m[col][col].inverse();
        for (int row = col + 1; row < n; ++row) {
            if (m[row][col].isZero()) continue;
            EvenScalar factor = m[row][col] * inv;
            for (int b = col; b < n; ++b) m[row][b] = m[row][b] - factor * m[col][b];
        }
    }
    if (singular) findings.push_back("body matrix is singular; the metric is degenerate");
    return findings;
}

SuperScalar Metric::apply(const VectorField& X, const VectorField& Y) const {
    SuperScalar acc = SuperScalar::zero(chart_);
    for (const auto& [i, xc] : X.components()) {
        int pi = chart_->frameParity(i);
        for (const auto& [j, yc] : Y.components()) {
            SuperScalar gij = entry(i, j);
            if (gij.isZero()) continue;
            acc = acc + xc * yc.signFlipOdd(pi) * gij;
        }
    }
    return acc;
}

}  // namespace supergeo
