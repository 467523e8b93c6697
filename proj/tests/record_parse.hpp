#pragma once

// Parsers that recover (m, n, value) records from every output format.

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

namespace testing_support {

struct Record {
    int m = 0;
    int n = 0;
    std::string value;  // empty when the cell carries no count

    friend auto operator<=>(const Record&, const Record&) = default;
};

inline std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, sep)) fields.push_back(field);
    if (!line.empty() && line.back() == sep) fields.emplace_back();
    return fields;
}

inline std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

inline std::vector<std::string> tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

// csv with m, n and value columns (in any position).
inline std::vector<Record> parse_csv(const std::string& text) {
    const auto lines = lines_of(text);
    const auto header = split(lines.at(0), ',');
    const auto column = [&](const std::string& name) {
        return static_cast<std::size_t>(std::find(header.begin(), header.end(), name) - header.begin());
    };
    const auto m_col = column("m"), n_col = column("n"), v_col = column("value");
    std::vector<Record> records;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto fields = split(lines[i], ',');
        records.push_back({std::stoi(fields.at(m_col)), std::stoi(fields.at(n_col)), fields.at(v_col)});
    }
    std::sort(records.begin(), records.end());
    return records;
}

inline std::vector<Record> parse_json(const std::string& text) {
    const auto doc = nlohmann::json::parse(text);
    std::vector<Record> records;
    for (const auto& r : doc.at("results")) {
        records.push_back({r.at("m").get<int>(), r.at("n").get<int>(),
                           r.at("value").is_null() ? std::string() : r.at("value").get<std::string>()});
    }
    std::sort(records.begin(), records.end());
    return records;
}

// ascii triangle: comment line, header "n\m 0 1 ...", then "n v0 v1 ...".
inline std::vector<Record> parse_ascii_triangle(const std::string& text) {
    std::vector<Record> records;
    const auto lines = lines_of(text);
    for (std::size_t i = 2; i < lines.size(); ++i) {
        const auto t = tokens(lines[i]);
        const int n = std::stoi(t.at(0));
        for (std::size_t k = 1; k < t.size(); ++k) records.push_back({static_cast<int>(k) - 1, n, t[k]});
    }
    std::sort(records.begin(), records.end());
    return records;
}

// ascii city map: header of m labels, then rows; block and beach markers carry
// no count and a trailing '*' marks a gate.
inline std::vector<Record> parse_ascii_map(const std::string& text) {
    std::vector<Record> records;
    const auto lines = lines_of(text);
    const auto header = tokens(lines.at(1));
    for (std::size_t i = 2; i < lines.size(); ++i) {
        const auto t = tokens(lines[i]);
        const int n = std::stoi(t.at(0));
        for (std::size_t k = 1; k < t.size(); ++k) {
            std::string value = t[k];
            if (value == "■" || value == "~") value.clear();
            if (!value.empty() && value.back() == '*') value.pop_back();
            records.push_back({std::stoi(header.at(k)), n, value});
        }
    }
    std::sort(records.begin(), records.end());
    return records;
}

}  // namespace testing_support
