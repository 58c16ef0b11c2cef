#pragma once

#include <map>
#include <string>
#include <vector>

namespace supergeo {

// One "key = value" line of a scenario file, with its 1-based line
// number for diagnostics.
struct ScenarioEntry {
    std::string key;
    std::string value;
    int line = 0;
};

// The raw sectioned key-value content of a scenario file.  Sections are
// [chart.M1], [chart.M2], [symbols], [metric.M1], [metric.M2], [twist],
// [claims]; '#' starts a comment, blank lines are skipped, and a key may
// appear at most once per section except in [symbols], where entry order
// carries declaration-before-registration meaning.  This layer is purely
// lexical; expression parsing and semantic checks happen when a product
// is built from the document.
class ScenarioDocument {
public:
    static ScenarioDocument parseText(const std::string& text, std::string name);
    static ScenarioDocument parseFile(const std::string& path);

    const std::string& name() const { return name_; }
    bool hasSection(const std::string& section) const;
    const std::vector<ScenarioEntry>& section(const std::string& section) const;
    // Value of a unique key in a section; throws ValidationError when
    // absent.
    const ScenarioEntry& entry(const std::string& section, const std::string& key) const;
    const ScenarioEntry* findEntry(const std::string& section, const std::string& key) const;

private:
    std::string name_;
    std::map<std::string, std::vector<ScenarioEntry>> sections_;
};

// Splits a comma-separated list, trimming whitespace around items;
// empty input yields an empty list, empty items are errors.
std::vector<std::string> splitCommaList(const std::string& text, int line);

}  // namespace supergeo
