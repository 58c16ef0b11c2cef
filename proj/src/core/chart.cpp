#include "supergeo/core/chart.hpp"

#include "supergeo/core/errors.hpp"

#include <algorithm>

namespace supergeo {

Chart::Chart(std::shared_ptr<VariableTable> vars, std::vector<std::string> evenNames,
             std::vector<std::string> oddNames, std::vector<FrameInfo> frameOrder)
    : vars_(std::move(vars)), evens_(std::move(evenNames)), odds_(std::move(oddNames)) {
    if (!vars_) throw Error("chart requires a variable table");
    evenVars_.reserve(evens_.size());
    for (const std::string& name : evens_) {
        auto found = vars_->find(name);
        int var;
        if (found) {
            var = *found;
            if (!vars_->isCoordinate(var))
                throw ValidationError("even coordinate '" + name + "' clashes with a symbol");
        } else {
            var = vars_->addCoordinate(name);
        }
        if (std::find(evenVars_.begin(), evenVars_.end(), var) != evenVars_.end())
            throw ValidationError("even coordinate '" + name + "' listed twice");
        evenVars_.push_back(var);
    }
    for (std::size_t i = 0; i < odds_.size(); ++i) {
        if (vars_->find(odds_[i]))
            throw ValidationError("odd generator '" + odds_[i] + "' clashes with an even name");
        for (std::size_t j = i + 1; j < odds_.size(); ++j)
            if (odds_[i] == odds_[j])
                throw ValidationError("odd generator '" + odds_[i] + "' listed twice");
    }
    if (odds_.size() > 64) throw ValidationError("at most 64 odd generators are supported");

    if (frameOrder.empty()) {
        for (int i = 0; i < evenCount(); ++i) frames_.push_back({false, i});
        for (int i = 0; i < oddCount(); ++i) frames_.push_back({true, i});
    } else {
        std::vector<bool> seenEven(evens_.size(), false), seenOdd(odds_.size(), false);
        for (const FrameInfo& f : frameOrder) {
            auto& seen = f.odd ? seenOdd : seenEven;
            int limit = f.odd ? oddCount() : evenCount();
            if (f.index < 0 || f.index >= limit || seen[f.index])
                throw ValidationError("frame order is not a permutation of the chart frames");
            seen[f.index] = true;
        }
        if (frameOrder.size() != evens_.size() + odds_.size())
            throw ValidationError("frame order must cover every chart frame");
        frames_ = std::move(frameOrder);
    }
}

const std::string& Chart::frameCoordName(int fid) const {
    const FrameInfo& f = frames_[fid];
    return f.odd ? odds_[f.index] : evens_[f.index];
}

std::optional<int> Chart::findFrameByToken(const std::string& token) const {
    for (int fid = 0; fid < frameCount(); ++fid)
        if (frameToken(fid) == token) return fid;
    return std::nullopt;
}

std::optional<int> Chart::findOdd(const std::string& name) const {
    for (int i = 0; i < oddCount(); ++i)
        if (odds_[i] == name) return i;
    return std::nullopt;
}

std::optional<int> Chart::findEvenFrameByVariable(int var) const {
    for (int fid = 0; fid < frameCount(); ++fid) {
        const FrameInfo& f = frames_[fid];
        if (!f.odd && evenVars_[f.index] == var) return fid;
    }
    return std::nullopt;
}

}  // namespace supergeo
