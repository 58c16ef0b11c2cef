#include "supergeo/core/errors.hpp"
#include "supergeo/parse/expression.hpp"
#include "supergeo/products/twisted_product.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace supergeo {

namespace {

void requireIdentifier(const std::string& name, int line) {
    bool ok = !name.empty() && std::isalpha(static_cast<unsigned char>(name.front()));
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c))) ok = false;
    if (!ok)
        throw ValidationError("line " + std::to_string(line) + ": '" + name +
                              "' is not a valid name (letter followed by letters/digits; "
                              "underscores are reserved for derivative symbols)");
}

struct ChartSection {
    std::vector<std::string> evens;
    std::vector<std::string> odds;
};

ChartSection readChartSection(const ScenarioDocument& doc, const std::string& section) {
    ChartSection cs;
    for (const auto& entry : doc.section(section)) {
        std::vector<std::string> names = splitCommaList(entry.value, entry.line);
        for (const auto& n : names) requireIdentifier(n, entry.line);
        if (entry.key == "even")
            cs.evens = names;
        else if (entry.key == "odd")
            cs.odds = names;
        else
            throw ValidationError("line " + std::to_string(entry.line) + ": unknown key '" +
                                  entry.key + "' in [" + section + "] (expected even/odd)");
    }
    if (cs.evens.empty())
        throw ValidationError("[" + section + "] must declare at least one even coordinate");
    return cs;
}

// Declaration values look like "(x, y)" or "(x, y) invertible".
void readSymbolDeclaration(const ScenarioEntry& entry, VariableTable& vars) {
    requireIdentifier(entry.key, entry.line);
    const std::string& v = entry.value;
    if (v.empty() || v.front() != '(')
        throw ValidationError("line " + std::to_string(entry.line) +
                              ": symbol declaration must start with a dependency list "
                              "'(coord, ...)'");
    std::size_t close = v.find(')');
    if (close == std::string::npos)
        throw ValidationError("line " + std::to_string(entry.line) +
                              ": unterminated dependency list");
    std::vector<std::string> depNames = splitCommaList(v.substr(1, close - 1), entry.line);
    if (depNames.empty())
        throw ValidationError("line " + std::to_string(entry.line) +
                              ": a symbol needs at least one coordinate dependency");
    bool invertible = false;
    std::istringstream flags(v.substr(close + 1));
    std::string flag;
    while (flags >> flag) {
        if (flag == "invertible")
            invertible = true;
        else
            throw ValidationError("line " + std::to_string(entry.line) + ": unknown flag '" +
                                  flag + "' (expected 'invertible')");
    }
    std::vector<int> deps;
    for (const auto& name : depNames) {
        auto var = vars.find(name);
        if (!var || !vars.isCoordinate(*var))
            throw ValidationError("line " + std::to_string(entry.line) + ": '" + name +
                                  "' is not a declared even coordinate");
        deps.push_back(*var);
    }
    vars.addSymbol(entry.key, std::move(deps), invertible);
}

void readRegisteredDerivative(const ScenarioEntry& entry, Chart& chart) {
    std::size_t underscore = entry.key.find('_');
    std::string base = entry.key.substr(0, underscore);
    std::string coordName = entry.key.substr(underscore + 1);
    VariableTable& vars = chart.vars();
    auto baseVar = vars.find(base);
    if (!baseVar || !vars.isSymbolBase(*baseVar))
        throw ValidationError("line " + std::to_string(entry.line) + ": '" + base +
                              "' is not a declared symbol (declare it before registering "
                              "derivatives)");
    auto coordVar = vars.find(coordName);
    if (!coordVar || !vars.isCoordinate(*coordVar))
        throw ValidationError("line " + std::to_string(entry.line) + ": '" + coordName +
                              "' is not a declared even coordinate");
    SuperScalar value;
    try {
        value = parseExpression(entry.value, chart);
    } catch (const ParseError& e) {
        throw ValidationError("line " + std::to_string(entry.line) + ": " + e.what());
    }
    for (const auto& [mask, coeff] : value.terms()) {
        (void)coeff;
        if (mask != 0)
            throw ValidationError("line " + std::to_string(entry.line) +
                                  ": a registered derivative must be free of odd generators");
    }
    vars.registerDerivative(base, *coordVar, value.body());
}

// Collects every coordinate a value's polynomial variables depend on and
// every odd generator it mentions, for block-cleanliness checks.
void checkBlockClean(const SuperScalar& value, const FactorBlock& block,
                     const VariableTable& vars, int oddBase, int line,
                     const std::string& what) {
    SuperScalar::Mask allowed = 0;
    for (int i = 0; i < block.oddCount(); ++i)
        allowed |= SuperScalar::Mask{1} << (oddBase + i);
    std::set<int> allowedVars(block.evenVars.begin(), block.evenVars.end());
    for (const auto& [mask, coeff] : value.terms()) {
        if (mask & ~allowed)
            throw ValidationError("line " + std::to_string(line) + ": " + what +
                                  " uses odd generators of the other factor");
        for (const Polynomial* poly : {&coeff.numerator(), &coeff.denominator()})
            for (const auto& [mono, c] : poly->terms()) {
                (void)c;
                for (const auto& [var, e] : mono) {
                    (void)e;
                    for (int dep : vars.dependsOn(var))
                        if (!allowedVars.count(dep))
                            throw ValidationError(
                                "line " + std::to_string(line) + ": " + what + " depends on '" +
                                vars.nameOf(dep) + "', which belongs to the other factor");
                }
            }
    }
}

Metric readMetricSection(const ScenarioDocument& doc, const std::string& section,
                         const Chart& chart, const FactorBlock& block,
                         const VariableTable& vars, int oddBase) {
    std::set<int> factorFrames(block.frames.begin(), block.frames.end());
    Metric metric(&chart, block.frames);
    struct Given {
        SuperScalar value;
        int line;
    };
    std::map<std::pair<int, int>, Given> given;
    for (const auto& entry : doc.section(section)) {
        std::vector<std::string> tokens = splitCommaList(entry.key, entry.line);
        if (tokens.size() != 2)
            throw ValidationError("line " + std::to_string(entry.line) +
                                  ": metric keys are frame pairs like 'dx,dy'");
        int fids[2];
        for (int i = 0; i < 2; ++i) {
            auto fid = chart.findFrameByToken(tokens[i]);
            if (!fid)
                throw ValidationError("line " + std::to_string(entry.line) + ": unknown frame '" +
                                      tokens[i] + "'");
            if (!factorFrames.count(*fid))
                throw ValidationError("line " + std::to_string(entry.line) + ": frame '" +
                                      tokens[i] + "' does not belong to this factor");
            fids[i] = *fid;
        }
        SuperScalar value;
        try {
            value = parseExpression(entry.value, chart);
        } catch (const ParseError& e) {
            throw ValidationError("line " + std::to_string(entry.line) + ": " + e.what());
        }
        checkBlockClean(value, block, vars, oddBase, entry.line, "metric entry " + entry.key);
        given[{fids[0], fids[1]}] = Given{value, entry.line};
    }
    // Graded-symmetry completion: a missing mirror entry is filled in;
    // an explicit one must agree with g_{JI} = (-1)^{|I||J|} g_{IJ}.
    for (const auto& [key, g] : given) {
        auto [i, j] = key;
        int sign = (chart.frameParity(i) * chart.frameParity(j)) % 2;
        SuperScalar mirror = sign ? -g.value : g.value;
        auto other = given.find({j, i});
        if (other != given.end() && &other->second != &g) {
            if (other->second.value != mirror)
                throw ValidationError(
                    "line " + std::to_string(other->second.line) + ": entry " +
                    chart.frameToken(j) + "," + chart.frameToken(i) +
                    " conflicts with graded symmetry against its mirror entry");
        }
        if (i == j && sign && !g.value.isZero())
            throw ValidationError("line " + std::to_string(g.line) +
                                  ": odd-odd diagonal entries must vanish by graded symmetry");
        metric.setEntry(i, j, g.value);
        if (other == given.end()) metric.setEntry(j, i, mirror);
    }
    std::vector<std::string> findings = metric.validate();
    if (!findings.empty()) {
        std::string msg = "[" + section + "] is not a valid graded metric:";
        for (const auto& f : findings) msg += "\n  " + f;
        throw ValidationError(msg);
    }
    return metric;
}

}  // namespace

TwistedProductSpec TwistedProductSpec::build(const ScenarioDocument& doc) {
    TwistedProductSpec spec;
    spec.name = doc.name();
    ChartSection c1 = readChartSection(doc, "chart.M1");
    ChartSection c2 = readChartSection(doc, "chart.M2");

    std::set<std::string> seen;
    for (const auto* list : {&c1.evens, &c1.odds, &c2.evens, &c2.odds})
        for (const auto& n : *list)
            if (!seen.insert(n).second)
                throw ValidationError("coordinate name '" + n + "' is declared twice");

    spec.vars = std::make_shared<VariableTable>();
    std::vector<std::string> evens = c1.evens;
    evens.insert(evens.end(), c2.evens.begin(), c2.evens.end());
    std::vector<std::string> odds = c1.odds;
    odds.insert(odds.end(), c2.odds.begin(), c2.odds.end());
    // Frame order is blockwise: M1 evens, M1 odds, M2 evens, M2 odds.
    std::vector<FrameInfo> order;
    for (int i = 0; i < (int)c1.evens.size(); ++i) order.push_back({false, i});
    for (int i = 0; i < (int)c1.odds.size(); ++i) order.push_back({true, i});
    for (int i = 0; i < (int)c2.evens.size(); ++i)
        order.push_back({false, (int)c1.evens.size() + i});
    for (int i = 0; i < (int)c2.odds.size(); ++i)
        order.push_back({true, (int)c1.odds.size() + i});
    spec.chart = std::make_shared<Chart>(spec.vars, evens, odds, order);

    spec.m1.evenNames = c1.evens;
    spec.m1.oddNames = c1.odds;
    spec.m2.evenNames = c2.evens;
    spec.m2.oddNames = c2.odds;
    int f1 = (int)c1.evens.size() + (int)c1.odds.size();
    int f2 = (int)c2.evens.size() + (int)c2.odds.size();
    for (int fid = 0; fid < f1; ++fid) spec.m1.frames.push_back(fid);
    for (int fid = f1; fid < f1 + f2; ++fid) spec.m2.frames.push_back(fid);
    for (int i = 0; i < (int)c1.evens.size(); ++i)
        spec.m1.evenVars.push_back(spec.chart->evenVariable(i));
    for (int i = 0; i < (int)c2.evens.size(); ++i)
        spec.m2.evenVars.push_back(spec.chart->evenVariable((int)c1.evens.size() + i));

    if (doc.hasSection("symbols")) {
        for (const auto& entry : doc.section("symbols")) {
            if (entry.key.find('_') == std::string::npos)
                readSymbolDeclaration(entry, *spec.vars);
            else
                readRegisteredDerivative(entry, *spec.chart);
        }
        spec.vars->checkRegisteredComplete();
    }

    spec.m1.metric =
        readMetricSection(doc, "metric.M1", *spec.chart, spec.m1, *spec.vars, 0);
    spec.m2.metric = readMetricSection(doc, "metric.M2", *spec.chart, spec.m2, *spec.vars,
                                       (int)c1.odds.size());

    const ScenarioEntry& twist = doc.entry("twist", "h");
    try {
        spec.twist = parseExpression(twist.value, *spec.chart);
    } catch (const ParseError& e) {
        throw ValidationError("line " + std::to_string(twist.line) + ": " + e.what());
    }
    std::optional<int> parity = spec.twist.parity();
    if (!parity || *parity != 0)
        throw ValidationError("line " + std::to_string(twist.line) +
                              ": the twist must be a purely even expression");
    if (spec.twist.body().isZero())
        throw ValidationError("line " + std::to_string(twist.line) +
                              ": the twist must have an invertible (nonzero) body");

    if (doc.hasSection("claims")) {
        const ScenarioEntry& sel = doc.entry("claims", "verify");
        if (sel.value != "all") {
            for (const auto& name : splitCommaList(sel.value, sel.line)) {
                auto id = parseClaimId(name);
                if (!id)
                    throw ValidationError("line " + std::to_string(sel.line) +
                                          ": unknown claim id '" + name + "'");
                spec.claimSelection.push_back(*id);
            }
        }
    }
    return spec;
}

TwistedProductSpec TwistedProductSpec::loadFile(const std::string& path) {
    return build(ScenarioDocument::parseFile(path));
}

Metric buildTwistedMetric(const TwistedProductSpec& spec) {
    std::vector<int> frames = spec.m1.frames;
    frames.insert(frames.end(), spec.m2.frames.begin(), spec.m2.frames.end());
    Metric g(spec.chart.get(), frames);
    for (const auto& [key, value] : spec.m1.metric.entries())
        g.setEntry(key.first, key.second, value);
    SuperScalar h2 = spec.twist * spec.twist;
    for (const auto& [key, value] : spec.m2.metric.entries())
        g.setEntry(key.first, key.second, h2 * value);
    std::vector<std::string> findings = g.validate();
    if (!findings.empty()) {
        std::string msg = "twisted product metric is not a valid graded metric:";
        for (const auto& f : findings) msg += "\n  " + f;
        throw ValidationError(msg);
    }
    return g;
}

}  // namespace supergeo
