#pragma once

// Lattice paths in the "Catalan traffic" city map. Coordinates (m, n):
//   m > n            beach, never entered
//   2m + n == 1      road block, never entered
//   2m + n == 0      gate: West, East, NorthEast
//   2m + n <  0      below the line: North, West
//   2m + n >  1      above the line: East, NorthEast
// Every move keeps n nondecreasing and no move sequence closes a cycle, so
// path counts from the origin are finite and computed row by row.

#include <algorithm>
#include <array>
#include <compare>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ctraffic/bigint.hpp"
#include "ctraffic/errors.hpp"
#include "ctraffic/ktable.hpp"

namespace ctraffic {

struct CityPoint {
    int m = 0;
    int n = 0;

    friend auto operator<=>(const CityPoint&, const CityPoint&) = default;
};

enum class Zone { BelowLine, Gate, RoadBlock, AboveLine, BeachForbidden };

enum class Move { North, West, East, NorthEast };

inline constexpr std::array<Move, 4> kAllMoves{Move::North, Move::West, Move::East,
                                               Move::NorthEast};

inline constexpr CityPoint displacement(Move move) {
    switch (move) {
        case Move::North: return {0, 1};
        case Move::West: return {-1, 0};
        case Move::East: return {1, 0};
        case Move::NorthEast: return {1, 1};
    }
    return {0, 0};
}

inline constexpr CityPoint step(CityPoint p, Move move) {
    const auto d = displacement(move);
    return {p.m + d.m, p.n + d.n};
}

inline constexpr std::string_view zone_name(Zone zone) {
    switch (zone) {
        case Zone::BelowLine: return "below";
        case Zone::Gate: return "gate";
        case Zone::RoadBlock: return "block";
        case Zone::AboveLine: return "above";
        case Zone::BeachForbidden: return "beach";
    }
    return "?";
}

inline constexpr std::string_view move_name(Move move) {
    switch (move) {
        case Move::North: return "N";
        case Move::West: return "W";
        case Move::East: return "E";
        case Move::NorthEast: return "NE";
    }
    return "?";
}

inline constexpr Zone classify(CityPoint p) {
    if (p.m > p.n) return Zone::BeachForbidden;
    const int line = 2 * p.m + p.n;
    if (line == 1) return Zone::RoadBlock;
    if (line == 0) return Zone::Gate;
    return line < 0 ? Zone::BelowLine : Zone::AboveLine;
}

inline constexpr bool is_accessible(CityPoint p) {
    const auto zone = classify(p);
    return zone != Zone::RoadBlock && zone != Zone::BeachForbidden;
}

/// Directions the traffic rules permit at an accessible point, minus those
/// landing on a road block or the beach.
inline std::vector<Move> allowed_moves(CityPoint p) {
    std::vector<Move> candidates;
    switch (classify(p)) {
        case Zone::BelowLine: candidates = {Move::North, Move::West}; break;
        case Zone::AboveLine: candidates = {Move::East, Move::NorthEast}; break;
        case Zone::Gate: candidates = {Move::West, Move::East, Move::NorthEast}; break;
        case Zone::RoadBlock:
        case Zone::BeachForbidden:
            throw DomainError("no moves from inaccessible point (" + std::to_string(p.m) + ", " +
                              std::to_string(p.n) + ")");
    }
    std::erase_if(candidates, [p](Move move) { return !is_accessible(step(p, move)); });
    return candidates;
}

inline bool move_allowed(CityPoint from, Move move) {
    if (!is_accessible(from)) return false;
    const auto moves = allowed_moves(from);
    return std::find(moves.begin(), moves.end(), move) != moves.end();
}

/// Closed rectangle of lattice points.
struct Bounds {
    int m_lo = 0;
    int m_hi = 0;
    int n_lo = 0;
    int n_hi = 0;

    constexpr bool contains(CityPoint p) const noexcept {
        return p.m >= m_lo && p.m <= m_hi && p.n >= n_lo && p.n <= n_hi;
    }

    friend bool operator==(const Bounds&, const Bounds&) = default;
};

/// Path counts from the origin over a window of the city map.
///
/// Every accessible point of the window has an entry (zero when no path
/// reaches it inside the window). A point is unreliable when some path to it
/// could leave the window and come back, i.e. one of its predecessors lies
/// outside the window at n >= 0 or is itself unreliable.
class PathCountGrid {
 public:
    explicit PathCountGrid(Bounds bounds) : bounds_(bounds) {}

    const Bounds& bounds() const noexcept { return bounds_; }
    const std::map<CityPoint, BigInt>& counts() const noexcept { return counts_; }
    const std::set<CityPoint>& unreliable() const noexcept { return unreliable_; }

    bool has(CityPoint p) const { return counts_.contains(p); }

    /// True when count(p) is the full path count; inaccessible points of the
    /// window are reliably zero.
    bool is_reliable(CityPoint p) const { return bounds_.contains(p) && !unreliable_.contains(p); }

    BigInt count(CityPoint p) const {
        const auto it = counts_.find(p);
        return it == counts_.end() ? BigInt(0) : it->second;
    }

 private:
    friend PathCountGrid count_paths(Bounds bounds);

    Bounds bounds_;
    std::map<CityPoint, BigInt> counts_;
    std::set<CityPoint> unreliable_;
};

namespace detail {

struct RowCell {
    BigInt count;
    bool accessible = false;
    bool unreliable = false;
};

// Folds the flow along `move` from `from` into `to`.
inline void absorb(RowCell& to, CityPoint from, Move move, const Bounds& bounds,
                   const RowCell* from_cell) {
    if (!move_allowed(from, move)) return;
    if (!bounds.contains(from)) {
        if (from.n >= 0) to.unreliable = true;
        return;
    }
    to.count += from_cell->count;
    to.unreliable = to.unreliable || from_cell->unreliable;
}

}  // namespace detail

/// Counts legal paths from the origin to every point of `bounds`. Rows are
/// processed by increasing n: vertical inflow from the previous row first,
/// then the westward sweep (gate and below) and the eastward sweep (gate and
/// above). The two sweeps only share the gate, which has no horizontal inflow.
inline PathCountGrid count_paths(Bounds bounds) {
    if (!bounds.contains({0, 0})) throw DomainError("count window must contain the origin");

    PathCountGrid grid(bounds);
    const int width = bounds.m_hi - bounds.m_lo + 1;
    const auto column = [&](int m) { return static_cast<std::size_t>(m - bounds.m_lo); };

    std::vector<detail::RowCell> previous;
    for (int n = bounds.n_lo; n <= bounds.n_hi; ++n) {
        std::vector<detail::RowCell> row(static_cast<std::size_t>(width));
        for (int m = bounds.m_lo; m <= bounds.m_hi; ++m) {
            auto& cell = row[column(m)];
            const CityPoint here{m, n};
            cell.accessible = is_accessible(here);
            if (!cell.accessible) continue;
            if (here == CityPoint{0, 0}) cell.count = 1;
            for (const Move move : {Move::North, Move::NorthEast}) {
                const auto d = displacement(move);
                const CityPoint from{m - d.m, n - d.n};
                const bool inside = bounds.contains(from);
                detail::absorb(cell, from, move, bounds, inside ? &previous[column(from.m)] : nullptr);
            }
        }
        for (int m = bounds.m_hi; m >= bounds.m_lo; --m) {
            auto& cell = row[column(m)];
            if (!cell.accessible) continue;
            const CityPoint from{m + 1, n};
            detail::absorb(cell, from, Move::West, bounds,
                           bounds.contains(from) ? &row[column(from.m)] : nullptr);
        }
        for (int m = bounds.m_lo; m <= bounds.m_hi; ++m) {
            auto& cell = row[column(m)];
            if (!cell.accessible) continue;
            const CityPoint from{m - 1, n};
            detail::absorb(cell, from, Move::East, bounds,
                           bounds.contains(from) ? &row[column(from.m)] : nullptr);
        }
        for (int m = bounds.m_lo; m <= bounds.m_hi; ++m) {
            const auto& cell = row[column(m)];
            if (!cell.accessible) continue;
            grid.counts_.emplace(CityPoint{m, n}, cell.count);
            if (cell.unreliable) grid.unreliable_.insert(CityPoint{m, n});
        }
        previous = std::move(row);
    }
    return grid;
}

/// Window that makes every count with 0 <= m <= n <= n_max reliable.
inline constexpr Bounds sufficient_bounds(int n_max) {
    return Bounds{-(2 * n_max + 2), n_max, 0, n_max};
}

namespace detail {

inline void check_upsilon_cell(int m, int n) {
    if (m < 0 || m > n) {
        throw DomainError("upsilon(m, n) needs 0 <= m <= n, got m=" + std::to_string(m) +
                          ", n=" + std::to_string(n));
    }
}

// Grid over sufficient_bounds(n_max), widened westward until the cells of the
// K-triangle are all reliable.
inline PathCountGrid triangle_grid(int n_max) {
    constexpr int kMaxWidenings = 8;
    Bounds bounds = sufficient_bounds(n_max);
    for (int attempt = 0; attempt <= kMaxWidenings; ++attempt) {
        auto grid = count_paths(bounds);
        bool reliable = true;
        for (int n = 0; n <= n_max && reliable; ++n)
            for (int m = 0; m <= n && reliable; ++m) reliable = grid.is_reliable({m, n});
        if (reliable) return grid;
        bounds.m_lo *= 2;
    }
    throw std::logic_error("traffic window did not stabilise for n_max = " + std::to_string(n_max));
}

}  // namespace detail

/// Number of legal paths from the origin to (m, n).
inline BigInt upsilon(int m, int n) {
    detail::check_upsilon_cell(m, n);
    return detail::triangle_grid(n).count({m, n});
}

/// K-triangle read off the traffic path counts.
inline KTable k_table_traffic(int n_max) {
    KTable table(n_max);
    const auto grid = detail::triangle_grid(n_max);
    for (int n = 0; n <= n_max; ++n)
        for (int m = 0; m <= n; ++m) table.at(m, n) = grid.count({m, n});
    return table;
}

}  // namespace ctraffic
