#include "supergeo/core/variables.hpp"

#include "supergeo/core/errors.hpp"

#include <algorithm>

namespace supergeo {

void VariableTable::requireUniqueName(const std::string& name) const {
    if (byName_.count(name))
        throw ValidationError("name '" + name + "' is already in use");
}

int VariableTable::addCoordinate(const std::string& name) {
    requireUniqueName(name);
    int id = static_cast<int>(entries_.size());
    Entry e;
    e.kind = Kind::Coordinate;
    e.name = name;
    e.multi = {id};  // a coordinate depends on itself
    entries_.push_back(std::move(e));
    byName_.emplace(name, id);
    return id;
}

int VariableTable::addSymbol(const std::string& name, std::vector<int> depends, bool invertible) {
    requireUniqueName(name);
    for (int v : depends)
        if (v < 0 || v >= size() || !isCoordinate(v))
            throw ValidationError("symbol '" + name + "' must depend on even coordinates only");
    int symbol = static_cast<int>(symbols_.size());
    SymbolInfo info;
    info.name = name;
    info.depends = std::move(depends);
    info.invertible = invertible;
    symbols_.push_back(std::move(info));
    int baseVar = internJet(symbol, {});
    symbols_[symbol].baseVar = baseVar;
    symbolOrder_.push_back(baseVar);
    return baseVar;
}

void VariableTable::registerDerivative(const std::string& symbolName, int coordVar,
                                       EvenScalar expr) {
    auto it = std::find_if(symbols_.begin(), symbols_.end(),
                           [&](const SymbolInfo& s) { return s.name == symbolName; });
    if (it == symbols_.end())
        throw ValidationError("derivative registered for undeclared symbol '" + symbolName + "'");
    if (std::find(it->depends.begin(), it->depends.end(), coordVar) == it->depends.end())
        throw ValidationError("derivative of '" + symbolName + "' along '" + nameOf(coordVar) +
                              "', which it does not depend on");
    if (!it->registered.emplace(coordVar, std::move(expr)).second)
        throw ValidationError("derivative of '" + symbolName + "' along '" + nameOf(coordVar) +
                              "' registered twice");
}

void VariableTable::checkRegisteredComplete() const {
    for (const SymbolInfo& s : symbols_) {
        if (s.registered.empty()) continue;
        if (s.registered.size() != s.depends.size())
            throw ValidationError("symbol '" + s.name +
                                  "' has some but not all partial derivatives given; " \
                                  "declare all of them or none");
    }
}

int VariableTable::internJet(int symbol, std::vector<int> multi) const {
    auto key = std::make_pair(symbol, multi);
    auto it = jetIndex_.find(key);
    if (it != jetIndex_.end()) return it->second;
    std::string name = symbols_[symbol].name;
    if (!multi.empty()) {
        name += "_";
        for (int v : multi) name += entries_[v].name;
    }
    if (!multi.empty() && byName_.count(name))
        throw Error("derived symbol name '" + name + "' collides with a declared name");
    int id = static_cast<int>(entries_.size());
    Entry e;
    e.kind = Kind::Jet;
    e.name = name;
    e.symbol = symbol;
    e.multi = std::move(multi);
    entries_.push_back(std::move(e));
    byName_.emplace(name, id);
    jetIndex_.emplace(std::move(key), id);
    return id;
}

int VariableTable::jetVariable(int var, int coordVar) const {
    const Entry& e = entries_[var];
    if (e.kind != Kind::Jet) throw Error("jetVariable() on a coordinate");
    if (!isCoordinate(coordVar)) throw Error("jet direction must be an even coordinate");
    std::vector<int> multi = e.multi;
    multi.insert(std::upper_bound(multi.begin(), multi.end(), coordVar), coordVar);
    return internJet(e.symbol, std::move(multi));
}

VariableDerivative VariableTable::derivativeOf(int var, int coordVar) const {
    const Entry& e = entries_[var];
    VariableDerivative d;
    if (e.kind == Kind::Coordinate) {
        d.kind = var == coordVar ? VariableDerivative::Kind::One : VariableDerivative::Kind::Zero;
        return d;
    }
    const SymbolInfo& s = symbols_[e.symbol];
    if (std::find(s.depends.begin(), s.depends.end(), coordVar) == s.depends.end()) {
        d.kind = VariableDerivative::Kind::Zero;
        return d;
    }
    if (!s.registered.empty()) {
        if (!e.multi.empty())
            throw Error("internal: jet variable of a symbol with closed-form derivatives");
        d.kind = VariableDerivative::Kind::Expression;
        d.expr = &s.registered.at(coordVar);
        return d;
    }
    d.kind = VariableDerivative::Kind::Variable;
    d.var = jetVariable(var, coordVar);
    return d;
}

std::optional<int> VariableTable::find(const std::string& name) const {
    auto it = byName_.find(name);
    if (it == byName_.end()) return std::nullopt;
    return it->second;
}

bool VariableTable::isSymbolBase(int var) const {
    const Entry& e = entries_[var];
    return e.kind == Kind::Jet && e.multi.empty();
}

bool VariableTable::symbolInvertible(int var) const {
    const Entry& e = entries_[var];
    if (e.kind != Kind::Jet) throw Error("symbolInvertible() on a coordinate");
    return symbols_[e.symbol].invertible;
}

const std::vector<int>& VariableTable::symbolDepends(int var) const {
    const Entry& e = entries_[var];
    if (e.kind != Kind::Jet) throw Error("symbolDepends() on a coordinate");
    return symbols_[e.symbol].depends;
}

const std::string& VariableTable::symbolName(int var) const {
    const Entry& e = entries_[var];
    if (e.kind != Kind::Jet) throw Error("symbolName() on a coordinate");
    return symbols_[e.symbol].name;
}

const std::vector<int>& VariableTable::dependsOn(int var) const {
    const Entry& e = entries_[var];
    if (e.kind == Kind::Coordinate) return e.multi;
    return symbols_[e.symbol].depends;
}

}  // namespace supergeo
