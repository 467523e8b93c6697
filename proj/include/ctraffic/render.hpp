#pragma once

// Text renderings of query results in the three output formats of the CLI.
// csv uses LF line endings; json carries every big integer as a decimal string.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ctraffic/bigint.hpp"
#include "ctraffic/intersect.hpp"
#include "ctraffic/ktable.hpp"
#include "ctraffic/traffic.hpp"
#include "ctraffic/verify.hpp"

namespace ctraffic {

enum class OutputFormat { Ascii, Csv, Json };

inline std::optional<OutputFormat> parse_format(std::string_view name) {
    if (name == "ascii") return OutputFormat::Ascii;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    return std::nullopt;
}

namespace detail {

inline std::string pad_left(std::string_view text, std::size_t width) {
    std::string out;
    if (text.size() < width) out.assign(width - text.size(), ' ');
    out += text;
    return out;
}

inline std::string dump(const nlohmann::ordered_json& doc) { return doc.dump(2) + "\n"; }

}  // namespace detail

inline std::string render_kappa(const KappaQuery& q, const BigInt& value, OutputFormat format) {
    switch (format) {
        case OutputFormat::Ascii: return to_string(value) + "\n";
        case OutputFormat::Csv:
            return "a,b,n,value\n" + std::to_string(q.a) + "," + std::to_string(q.b) + "," +
                   std::to_string(q.n) + "," + to_string(value) + "\n";
        case OutputFormat::Json: {
            nlohmann::ordered_json doc;
            doc["query"] = {{"command", "kappa"}, {"a", q.a}, {"b", q.b}, {"n", q.n}};
            doc["results"] = nlohmann::ordered_json::array(
                {{{"a", q.a}, {"b", q.b}, {"n", q.n}, {"value", to_string(value)}}});
            return detail::dump(doc);
        }
    }
    return {};
}

/// K-triangle; ascii puts n down the rows and m across the columns.
inline std::string render_table(const KTable& table, Route route, OutputFormat format) {
    const int n_max = table.n_max();
    switch (format) {
        case OutputFormat::Ascii: {
            std::size_t width = std::to_string(n_max).size();
            for (int n = 0; n <= n_max; ++n)
                for (const auto& v : table.row(n)) width = std::max(width, to_string(v).size());
            width += 1;
            std::ostringstream out;
            out << "# K(m, n) by " << route_name(route) << " route; rows n, columns m\n";
            out << detail::pad_left("n\\m", width + 1);
            for (int m = 0; m <= n_max; ++m) out << detail::pad_left(std::to_string(m), width);
            out << "\n";
            for (int n = 0; n <= n_max; ++n) {
                out << detail::pad_left(std::to_string(n), width + 1);
                for (const auto& v : table.row(n)) out << detail::pad_left(to_string(v), width);
                out << "\n";
            }
            return out.str();
        }
        case OutputFormat::Csv: {
            std::string out = "m,n,value\n";
            for (int n = 0; n <= n_max; ++n)
                for (int m = 0; m <= n; ++m)
                    out += std::to_string(m) + "," + std::to_string(n) + "," +
                           to_string(table.at(m, n)) + "\n";
            return out;
        }
        case OutputFormat::Json: {
            nlohmann::ordered_json doc;
            doc["query"] = {{"command", "table"}, {"route", route_name(route)}, {"n_max", n_max}};
            auto results = nlohmann::ordered_json::array();
            for (int n = 0; n <= n_max; ++n)
                for (int m = 0; m <= n; ++m)
                    results.push_back({{"m", m}, {"n", n}, {"value", to_string(table.at(m, n))}});
            doc["results"] = std::move(results);
            return detail::dump(doc);
        }
    }
    return {};
}

inline constexpr std::string_view kBlockMarker = "■";
inline constexpr std::string_view kBeachMarker = "~";
inline constexpr std::string_view kGateMarker = "*";

/// City map with path counts. ascii rows run n = 0, 1, ... downward; gate
/// counts carry a trailing '*'.
inline std::string render_traffic(const PathCountGrid& grid, int n_max, OutputFormat format) {
    const Bounds& bounds = grid.bounds();
    switch (format) {
        case OutputFormat::Ascii: {
            const auto cell_text = [&](CityPoint p) -> std::string {
                switch (classify(p)) {
                    case Zone::RoadBlock: return std::string(kBlockMarker);
                    case Zone::BeachForbidden: return std::string(kBeachMarker);
                    case Zone::Gate: return to_string(grid.count(p)) + std::string(kGateMarker);
                    default: return to_string(grid.count(p));
                }
            };
            // The block marker is one column wide but three bytes long.
            const auto columns = [](const std::string& s) {
                return s == kBlockMarker ? std::size_t{1} : s.size();
            };
            std::size_t width = 0;
            for (int n = bounds.n_lo; n <= bounds.n_hi; ++n)
                for (int m = bounds.m_lo; m <= bounds.m_hi; ++m)
                    width = std::max(width, columns(cell_text({m, n})));
            width = std::max(width, std::to_string(bounds.m_lo).size()) + 1;
            const auto pad = [&](const std::string& s) {
                return std::string(width - columns(s), ' ') + s;
            };
            const std::size_t label = std::to_string(bounds.n_hi).size() + 4;
            std::ostringstream out;
            out << "# city map for n <= " << n_max << "; rows n, columns m; " << kBlockMarker
                << " road block (2m+n=1), " << kBeachMarker << " beach (m>n), " << kGateMarker
                << " gate (2m+n=0)\n";
            out << detail::pad_left("n\\m", label);
            for (int m = bounds.m_lo; m <= bounds.m_hi; ++m) out << pad(std::to_string(m));
            out << "\n";
            for (int n = bounds.n_lo; n <= bounds.n_hi; ++n) {
                out << detail::pad_left(std::to_string(n), label);
                for (int m = bounds.m_lo; m <= bounds.m_hi; ++m) out << pad(cell_text({m, n}));
                out << "\n";
            }
            return out.str();
        }
        case OutputFormat::Csv: {
            std::string out = "m,n,zone,value\n";
            for (int n = bounds.n_lo; n <= bounds.n_hi; ++n) {
                for (int m = bounds.m_lo; m <= bounds.m_hi; ++m) {
                    const CityPoint p{m, n};
                    out += std::to_string(m) + "," + std::to_string(n) + "," +
                           std::string(zone_name(classify(p))) + ",";
                    if (grid.has(p)) out += to_string(grid.count(p));
                    out += "\n";
                }
            }
            return out;
        }
        case OutputFormat::Json: {
            nlohmann::ordered_json doc;
            doc["query"] = {{"command", "traffic"},
                            {"n_max", n_max},
                            {"bounds",
                             {{"m_lo", bounds.m_lo},
                              {"m_hi", bounds.m_hi},
                              {"n_lo", bounds.n_lo},
                              {"n_hi", bounds.n_hi}}}};
            auto results = nlohmann::ordered_json::array();
            for (int n = bounds.n_lo; n <= bounds.n_hi; ++n) {
                for (int m = bounds.m_lo; m <= bounds.m_hi; ++m) {
                    const CityPoint p{m, n};
                    nlohmann::ordered_json record = {
                        {"m", m}, {"n", n}, {"zone", zone_name(classify(p))}};
                    if (grid.has(p)) {
                        record["value"] = to_string(grid.count(p));
                        record["reliable"] = grid.is_reliable(p);
                    } else {
                        record["value"] = nullptr;
                    }
                    results.push_back(std::move(record));
                }
            }
            doc["results"] = std::move(results);
            return detail::dump(doc);
        }
    }
    return {};
}

inline std::string render_verify(const RouteReport& report, OutputFormat format) {
    switch (format) {
        case OutputFormat::Ascii: {
            std::size_t width = 10;
            for (const auto& cell : report.cells)
                for (const auto& v : cell.values) width = std::max(width, to_string(v).size());
            width += 1;
            std::ostringstream out;
            out << "# cross-check of K(m, n) for 0 <= m <= n <= " << report.n_max << "\n";
            out << "# traffic " << report.orientation_note << "\n";
            out << "   m   n";
            for (const auto route : kAllRoutes) out << detail::pad_left(route_name(route), width);
            out << "  status\n";
            for (const auto& cell : report.cells) {
                out << detail::pad_left(std::to_string(cell.m), 4)
                    << detail::pad_left(std::to_string(cell.n), 4);
                for (const auto& v : cell.values) out << detail::pad_left(to_string(v), width);
                out << "  "
                    << (cell.agree ? "ok" : cell.proven_agree ? "double-sum-mismatch" : "MISMATCH")
                    << "\n";
            }
            for (const auto& pair : report.summary) {
                out << "# " << route_name(pair.first) << " vs " << route_name(pair.second)
                    << ": " << pair.agreements << " agree, " << pair.disagreements
                    << " disagree\n";
            }
            out << "result: " << (report.passed() ? "PASS" : "FAIL") << " ("
                << report.cells.size() << " cells, " << report.failures().size()
                << " failures, " << report.double_sum_discrepancies().size()
                << " double-sum discrepancies)\n";
            return out.str();
        }
        case OutputFormat::Csv: {
            std::string out = "m,n,value";
            for (const auto route : kAllRoutes) {
                std::string name(route_name(route));
                std::replace(name.begin(), name.end(), '-', '_');
                out += "," + name;
            }
            out += ",agree,proven_agree\n";
            for (const auto& cell : report.cells) {
                out += std::to_string(cell.m) + "," + std::to_string(cell.n) + "," +
                       to_string(cell.value(Route::Operator));
                for (const auto& v : cell.values) out += "," + to_string(v);
                out += std::string(",") + (cell.agree ? "true" : "false") + "," +
                       (cell.proven_agree ? "true" : "false") + "\n";
            }
            return out;
        }
        case OutputFormat::Json: {
            nlohmann::ordered_json doc;
            doc["query"] = {{"command", "verify"}, {"n_max", report.n_max}};
            auto results = nlohmann::ordered_json::array();
            for (const auto& cell : report.cells) {
                nlohmann::ordered_json record = {{"m", cell.m},
                                                 {"n", cell.n},
                                                 {"value", to_string(cell.value(Route::Operator))}};
                nlohmann::ordered_json routes = nlohmann::ordered_json::object();
                for (const auto route : kAllRoutes)
                    routes[std::string(route_name(route))] = to_string(cell.value(route));
                record["routes"] = std::move(routes);
                record["agree"] = cell.agree;
                record["proven_agree"] = cell.proven_agree;
                results.push_back(std::move(record));
            }
            doc["results"] = std::move(results);
            auto summary = nlohmann::ordered_json::array();
            for (const auto& pair : report.summary) {
                summary.push_back({{"first", route_name(pair.first)},
                                   {"second", route_name(pair.second)},
                                   {"agreements", pair.agreements},
                                   {"disagreements", pair.disagreements}});
            }
            doc["summary"] = std::move(summary);
            doc["orientation_note"] = report.orientation_note;
            doc["passed"] = report.passed();
            return detail::dump(doc);
        }
    }
    return {};
}

inline std::string render_catalan(const std::vector<BigInt>& values, OutputFormat format) {
    switch (format) {
        case OutputFormat::Ascii: {
            std::string out;
            for (std::size_t i = 0; i < values.size(); ++i) {
                if (i > 0) out += ' ';
                out += to_string(values[i]);
            }
            return out + "\n";
        }
        case OutputFormat::Csv: {
            std::string out = "n,value\n";
            for (std::size_t i = 0; i < values.size(); ++i)
                out += std::to_string(i) + "," + to_string(values[i]) + "\n";
            return out;
        }
        case OutputFormat::Json: {
            nlohmann::ordered_json doc;
            doc["query"] = {{"command", "catalan"}, {"count", values.size()}};
            auto results = nlohmann::ordered_json::array();
            for (const auto& v : values) results.push_back(to_string(v));
            doc["results"] = std::move(results);
            return detail::dump(doc);
        }
    }
    return {};
}

}  // namespace ctraffic
