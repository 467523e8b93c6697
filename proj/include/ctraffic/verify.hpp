#pragma once

// Cell-by-cell comparison of the five ways of computing K(m, n).
//
// The operator route is the definition and wins any disagreement. Operator,
// recursive, simplified and traffic are proven equal; the double sum is
// reported alongside but its disagreements are flagged separately and do not
// fail the check.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ctraffic/bigint.hpp"
#include "ctraffic/closed_form.hpp"
#include "ctraffic/errors.hpp"
#include "ctraffic/intersect.hpp"
#include "ctraffic/ktable.hpp"
#include "ctraffic/traffic.hpp"

namespace ctraffic {

enum class Route { Operator, Recursive, Simplified, DoubleSum, Traffic };

inline constexpr std::array<Route, 5> kAllRoutes{Route::Operator, Route::Recursive,
                                                 Route::Simplified, Route::DoubleSum,
                                                 Route::Traffic};

inline constexpr std::string_view route_name(Route route) {
    switch (route) {
        case Route::Operator: return "operator";
        case Route::Recursive: return "recursive";
        case Route::Simplified: return "simplified";
        case Route::DoubleSum: return "double-sum";
        case Route::Traffic: return "traffic";
    }
    return "?";
}

inline std::optional<Route> parse_route(std::string_view name) {
    for (const auto route : kAllRoutes)
        if (route_name(route) == name) return route;
    return std::nullopt;
}

/// Routes whose agreement is a theorem; a mismatch among them fails the check.
inline constexpr bool is_proven_route(Route route) { return route != Route::DoubleSum; }

inline KTable k_table(Route route, int n_max) {
    switch (route) {
        case Route::Operator: return k_table_operator(n_max);
        case Route::Recursive: return k_table_recursive(n_max);
        case Route::Simplified: return k_table_simplified(n_max);
        case Route::DoubleSum: return k_table_double_sum(n_max);
        case Route::Traffic: return k_table_traffic(n_max);
    }
    throw DomainError("unknown route");
}

struct CellReport {
    int m = 0;
    int n = 0;
    std::array<BigInt, kAllRoutes.size()> values;  // indexed by Route
    bool agree = false;         // all five routes equal
    bool proven_agree = false;  // operator, recursive, simplified, traffic equal

    const BigInt& value(Route route) const { return values[static_cast<std::size_t>(route)]; }
};

struct RoutePairSummary {
    Route first;
    Route second;
    int agreements = 0;
    int disagreements = 0;
};

struct RouteReport {
    int n_max = 0;
    std::vector<CellReport> cells;
    std::vector<RoutePairSummary> summary;
    std::string orientation_note;

    /// Cells where the proven routes disagree.
    std::vector<const CellReport*> failures() const {
        std::vector<const CellReport*> out;
        for (const auto& cell : cells)
            if (!cell.proven_agree) out.push_back(&cell);
        return out;
    }

    /// Cells where only the double sum departs from the proven routes.
    std::vector<const CellReport*> double_sum_discrepancies() const {
        std::vector<const CellReport*> out;
        for (const auto& cell : cells)
            if (cell.proven_agree && !cell.agree) out.push_back(&cell);
        return out;
    }

    bool passed() const { return failures().empty(); }
};

/// Test hook: perturbs one route's value at one cell before comparison.
struct FaultInjection {
    Route route = Route::Operator;
    int m = 0;
    int n = 0;
    BigInt delta = 1;
};

inline constexpr std::string_view kTrafficOrientation =
    "printed reading: beach m > n, gates 2m + n = 0, road blocks 2m + n = 1";

inline RouteReport cross_check(int n_max, const std::optional<FaultInjection>& fault = std::nullopt) {
    if (n_max < 0) throw DomainError("n_max must be nonnegative");

    std::vector<KTable> tables;
    tables.reserve(kAllRoutes.size());
    for (const auto route : kAllRoutes) tables.push_back(k_table(route, n_max));
    if (fault) {
        tables[static_cast<std::size_t>(fault->route)].at(fault->m, fault->n) += fault->delta;
    }

    RouteReport report;
    report.n_max = n_max;
    report.orientation_note = std::string(kTrafficOrientation);
    for (std::size_t a = 0; a < kAllRoutes.size(); ++a)
        for (std::size_t b = a + 1; b < kAllRoutes.size(); ++b)
            report.summary.push_back({kAllRoutes[a], kAllRoutes[b]});

    for (int n = 0; n <= n_max; ++n) {
        for (int m = 0; m <= n; ++m) {
            CellReport cell;
            cell.m = m;
            cell.n = n;
            for (std::size_t r = 0; r < kAllRoutes.size(); ++r) cell.values[r] = tables[r].at(m, n);

            const BigInt& truth = cell.value(Route::Operator);
            cell.agree = true;
            cell.proven_agree = true;
            for (const auto route : kAllRoutes) {
                if (cell.value(route) == truth) continue;
                cell.agree = false;
                if (is_proven_route(route)) cell.proven_agree = false;
            }
            for (auto& pair : report.summary) {
                if (cell.value(pair.first) == cell.value(pair.second)) {
                    ++pair.agreements;
                } else {
                    ++pair.disagreements;
                }
            }
            report.cells.push_back(std::move(cell));
        }
    }
    return report;
}

/// One failure of K(m, n) = K(m+1, n) - K(m, n-1).
struct RecursionViolation {
    int m = 0;
    int n = 0;
    BigInt value;     // K(m, n)
    BigInt expected;  // K(m+1, n) - K(m, n-1)

    friend bool operator==(const RecursionViolation&, const RecursionViolation&) = default;
};

/// Checks the recursion at every interior cell 0 <= m < n <= n_max.
inline std::vector<RecursionViolation> recursion_audit(const KTable& table) {
    std::vector<RecursionViolation> violations;
    for (int n = 1; n <= table.n_max(); ++n) {
        for (int m = 0; m < n; ++m) {
            BigInt expected = table.at(m + 1, n) - table.at(m, n - 1);
            if (table.at(m, n) != expected) {
                violations.push_back({m, n, table.at(m, n), std::move(expected)});
            }
        }
    }
    return violations;
}

}  // namespace ctraffic
