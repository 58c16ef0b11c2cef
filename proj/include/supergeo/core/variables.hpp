#pragma once

#include "supergeo/core/even_scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace supergeo {

// What differentiating a table variable along an even coordinate yields.
struct VariableDerivative {
    enum class Kind { Zero, One, Variable, Expression };
    Kind kind = Kind::Zero;
    int var = -1;                  // for Kind::Variable: the jet variable id
    const EvenScalar* expr = nullptr;  // for Kind::Expression: registered form
};

// Registry of the polynomial-ring indeterminates of one scenario: even
// coordinates and jet symbols of declared function symbols.  Jets are
// interned on demand with canonically sorted multi-indices, so mixed
// partials are identified at construction (h_xy and h_yx are one
// variable).  The table is append-only; existing ids never change.
class VariableTable {
public:
    enum class Kind { Coordinate, Jet };

    int addCoordinate(const std::string& name);
    // depends lists coordinate variable ids; order is the declaration
    // order used when rendering and when matching call-style references.
    int addSymbol(const std::string& name, std::vector<int> depends, bool invertible);

    // Closed-form partial for a symbol.  A symbol must end up with either
    // all of its partials registered or none; checkRegisteredComplete()
    // enforces that once declarations are done.
    void registerDerivative(const std::string& symbolName, int coordVar, EvenScalar expr);
    void checkRegisteredComplete() const;

    // The jet variable for differentiating `var` (a symbol or jet
    // variable) along coordVar.  Interning is memoization, so it is
    // const-callable; ids are handed out append-only.
    int jetVariable(int var, int coordVar) const;

    VariableDerivative derivativeOf(int var, int coordVar) const;

    int size() const { return static_cast<int>(entries_.size()); }
    Kind kindOf(int var) const { return entries_[var].kind; }
    const std::string& nameOf(int var) const { return entries_[var].name; }
    bool isCoordinate(int var) const { return entries_[var].kind == Kind::Coordinate; }

    // Lookup by name: coordinates, symbols, and already-interned jets.
    std::optional<int> find(const std::string& name) const;

    // Symbol metadata (by the variable id of the symbol's base jet).
    bool isSymbolBase(int var) const;
    bool symbolInvertible(int var) const;
    const std::vector<int>& symbolDepends(int var) const;
    const std::string& symbolName(int var) const;

    // All declared symbol base variables, in declaration order.
    const std::vector<int>& symbolBases() const { return symbolOrder_; }

    // Coordinates (var ids) the variable's value depends on: itself for a
    // coordinate, the base symbol's dependency list for a jet.
    const std::vector<int>& dependsOn(int var) const;

private:
    struct Entry {
        Kind kind;
        std::string name;
        int symbol = -1;          // jets: index into symbols_
        std::vector<int> multi;   // jets: sorted coordinate var ids
    };
    struct SymbolInfo {
        std::string name;
        std::vector<int> depends;
        bool invertible = false;
        int baseVar = -1;
        std::map<int, EvenScalar> registered;
    };

    int internJet(int symbol, std::vector<int> multi) const;
    void requireUniqueName(const std::string& name) const;

    mutable std::vector<Entry> entries_;
    std::vector<SymbolInfo> symbols_;
    std::vector<int> symbolOrder_;
    mutable std::map<std::string, int> byName_;
    mutable std::map<std::pair<int, std::vector<int>>, int> jetIndex_;
    std::vector<int> emptyDepends_;
};

}  // namespace supergeo
