#pragma once

#include "supergeo/core/variables.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace supergeo {

// One coordinate frame vector of a chart: either d/d(even coordinate) or
// d/d(odd generator).  Frames are addressed by their position in the
// chart's frame list everywhere else in the engine.
struct FrameInfo {
    bool odd = false;
    int index = 0;  // into evens() or odds()
};

// A coordinate chart: named even coordinates (registered as polynomial
// variables) plus named odd generators in a fixed order that every sign
// computation derives from.  The frame list fixes the traversal order
// used for sums over frames and for reports; product charts interleave
// it blockwise (factor-1 evens, factor-1 odds, factor-2 evens, factor-2
// odds) while the generator order itself stays fixed per chart.
class Chart {
public:
    // frameOrder empty means "all evens, then all odds".
    Chart(std::shared_ptr<VariableTable> vars,
          std::vector<std::string> evenNames,
          std::vector<std::string> oddNames,
          std::vector<FrameInfo> frameOrder = {});

    const VariableTable& vars() const { return *vars_; }
    VariableTable& vars() { return *vars_; }
    std::shared_ptr<VariableTable> varsPtr() const { return vars_; }

    int evenCount() const { return static_cast<int>(evens_.size()); }
    int oddCount() const { return static_cast<int>(odds_.size()); }
    const std::string& evenName(int i) const { return evens_[i]; }
    const std::string& oddName(int i) const { return odds_[i]; }
    int evenVariable(int i) const { return evenVars_[i]; }

    // Graded dimension (#even - #odd) of the whole chart.
    int gradedDimension() const { return evenCount() - oddCount(); }

    int frameCount() const { return static_cast<int>(frames_.size()); }
    const FrameInfo& frame(int fid) const { return frames_[fid]; }
    int frameParity(int fid) const { return frames_[fid].odd ? 1 : 0; }
    const std::string& frameCoordName(int fid) const;
    // Input token for a frame ("dx"), and display form ("d_x").
    std::string frameToken(int fid) const { return "d" + frameCoordName(fid); }
    std::string frameDisplay(int fid) const { return "d_" + frameCoordName(fid); }

    std::optional<int> findFrameByToken(const std::string& token) const;
    std::optional<int> findOdd(const std::string& name) const;
    // Frame id of the even frame for a given coordinate variable id.
    std::optional<int> findEvenFrameByVariable(int var) const;

private:
    std::shared_ptr<VariableTable> vars_;
    std::vector<std::string> evens_;
    std::vector<int> evenVars_;
    std::vector<std::string> odds_;
    std::vector<FrameInfo> frames_;
};

}  // namespace supergeo
