#include "supergeo/parse/scenario.hpp"

#include "supergeo/core/errors.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace supergeo {

namespace {

const std::set<std::string> kKnownSections = {
    "chart.M1", "chart.M2", "symbols", "metric.M1", "metric.M2", "twist", "claims",
};

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

ScenarioDocument ScenarioDocument::parseText(const std::string& text, std::string name) {
    ScenarioDocument doc;
    doc.name_ = std::move(name);
    std::istringstream in(text);
    std::string rawLine;
    std::string current;
    int lineNo = 0;
    while (std::getline(in, rawLine)) {
        ++lineNo;
        std::string line = rawLine;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ValidationError(doc.name_ + ":" + std::to_string(lineNo) +
                                      ": unterminated section header");
            std::string section = trim(line.substr(1, line.size() - 2));
            if (!kKnownSections.count(section))
                throw ValidationError(doc.name_ + ":" + std::to_string(lineNo) +
                                      ": unknown section [" + section + "]");
            if (doc.sections_.count(section))
                throw ValidationError(doc.name_ + ":" + std::to_string(lineNo) +
                                      ": duplicate section [" + section + "]");
            doc.sections_[section];
            current = section;
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ValidationError(doc.name_ + ":" + std::to_string(lineNo) +
                                  ": expected 'key = value' or a section header");
        if (current.empty())
            throw ValidationError(doc.name_ + ":" + std::to_string(lineNo) +
                                  ": entry before any section header");
        ScenarioEntry entry;
        entry.key = trim(line.substr(0, eq));
        entry.value = trim(line.substr(eq + 1));
        entry.line = lineNo;
        if (entry.key.empty())
            throw ValidationError(doc.name_ + ":" + std::to_string(lineNo) + ": empty key");
        auto& entries = doc.sections_[current];
        if (current != "symbols") {
            for (const auto& prev : entries)
                if (prev.key == entry.key)
                    throw ValidationError(doc.name_ + ":" + std::to_string(lineNo) +
                                          ": duplicate key '" + entry.key + "' in [" +
                                          current + "]");
        }
        entries.push_back(std::move(entry));
    }
    return doc;
}

ScenarioDocument ScenarioDocument::parseFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string name = path;
    std::size_t slash = name.find_last_of('/');
    if (slash != std::string::npos) name.erase(0, slash + 1);
    return parseText(buf.str(), name);
}

bool ScenarioDocument::hasSection(const std::string& section) const {
    return sections_.count(section) != 0;
}

const std::vector<ScenarioEntry>& ScenarioDocument::section(const std::string& section) const {
    auto it = sections_.find(section);
    if (it == sections_.end())
        throw ValidationError(name_ + ": missing section [" + section + "]");
    return it->second;
}

const ScenarioEntry* ScenarioDocument::findEntry(const std::string& section,
                                                 const std::string& key) const {
    auto it = sections_.find(section);
    if (it == sections_.end()) return nullptr;
    for (const auto& entry : it->second)
        if (entry.key == key) return &entry;
    return nullptr;
}

const ScenarioEntry& ScenarioDocument::entry(const std::string& section,
                                             const std::string& key) const {
    const ScenarioEntry* found = findEntry(section, key);
    if (!found)
        throw ValidationError(name_ + ": missing '" + key + "' in [" + section + "]");
    return *found;
}

std::vector<std::string> splitCommaList(const std::string& text, int line) {
    std::vector<std::string> items;
    std::string trimmed = trim(text);
    if (trimmed.empty()) return items;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = trimmed.find(',', start);
        std::string item = trim(comma == std::string::npos ? trimmed.substr(start)
                                                           : trimmed.substr(start, comma - start));
        if (item.empty())
            throw ValidationError("line " + std::to_string(line) + ": empty item in list");
        items.push_back(item);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return items;
}

}  // namespace supergeo
